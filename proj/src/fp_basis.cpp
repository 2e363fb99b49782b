#include "picketlab/fp_basis.hpp"

#include "picketlab/howell.hpp"

namespace picketlab {

IncrementalBasis::IncrementalBasis(std::uint64_t p, Eigen::Index dim) : field_(p, 1), dim_(dim) {}

std::pair<ResidueVector, ResidueVector> IncrementalBasis::reduce(ResidueVector v) const {
  if (v.size() != dim_) throw Error("vector length does not match the basis dimension");
  for (Eigen::Index j = 0; j < v.size(); ++j) v(j) %= field_.modulus();
  ResidueVector combo = ResidueVector::Zero(static_cast<Eigen::Index>(accepted_.size()));
  for (std::size_t i = 0; i < echelon_.size(); ++i) {
    Residue c = v(pivots_[i]);
    if (c == 0) continue;
    axpy(field_, field_.neg(c), echelon_[i], v);
    ResidueVector ci = ResidueVector::Zero(combo.size());
    ci.head(combos_[i].size()) = combos_[i];
    axpy(field_, c, ci, combo);
  }
  return {std::move(v), std::move(combo)};
}

bool IncrementalBasis::insert(const ResidueVector& v) {
  auto [residual, combo] = reduce(v);
  Eigen::Index piv = pivot_column(residual);
  if (piv < 0) return false;
  // residual = v - combo . accepted, scaled so the pivot is 1
  const Residue inv = field_.inverse(residual(piv));
  ResidueVector own(combo.size() + 1);
  for (Eigen::Index j = 0; j < combo.size(); ++j) own(j) = field_.mul(inv, field_.neg(combo(j)));
  own(combo.size()) = inv;
  echelon_.push_back(scaled(field_, inv, residual));
  pivots_.push_back(piv);
  combos_.push_back(std::move(own));
  accepted_.push_back(v);
  for (Eigen::Index j = 0; j < accepted_.back().size(); ++j) accepted_.back()(j) %= field_.modulus();
  return true;
}

bool IncrementalBasis::spans(const ResidueVector& v) const { return pivot_column(reduce(v).first) < 0; }

std::optional<ResidueVector> IncrementalBasis::coordinates(const ResidueVector& v) const {
  auto [residual, combo] = reduce(v);
  if (pivot_column(residual) >= 0) return std::nullopt;
  return combo;
}

}  // namespace picketlab
