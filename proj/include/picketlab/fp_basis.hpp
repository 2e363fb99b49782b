#pragma once
// Incremental linear independence over F_p, used for basis extension.

#include "picketlab/ring.hpp"

#include <optional>
#include <vector>

namespace picketlab {

class IncrementalBasis {
 public:
  IncrementalBasis(std::uint64_t p, Eigen::Index dim);

  /// Adds v if it is independent of the vectors accepted so far.
  bool insert(const ResidueVector& v);
  bool spans(const ResidueVector& v) const;
  /// Coefficients c with v = sum c_i * accepted_i, or nothing if v is
  /// outside the span.
  std::optional<ResidueVector> coordinates(const ResidueVector& v) const;

  int size() const { return static_cast<int>(accepted_.size()); }
  Eigen::Index dim() const { return dim_; }
  const std::vector<ResidueVector>& accepted() const { return accepted_; }
  const ChainRing& field() const { return field_; }

 private:
  /// Reduces v; returns its residual and the combination subtracted.
  std::pair<ResidueVector, ResidueVector> reduce(ResidueVector v) const;

  ChainRing field_;
  Eigen::Index dim_;
  std::vector<ResidueVector> accepted_;
  std::vector<ResidueVector> echelon_;
  std::vector<Eigen::Index> pivots_;
  // echelon_[i] = sum combos_[i](j) * accepted_[j]
  std::vector<ResidueVector> combos_;
};

}  // namespace picketlab
