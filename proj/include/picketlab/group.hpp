#pragma once
// Finite abelian p-groups G = Z/(p^l_1) + ... + Z/(p^l_k) in a fixed cyclic
// decomposition, and exact element arithmetic.

#include "picketlab/ring.hpp"

#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace picketlab {

using Rng = std::mt19937_64;

/// Uniform draw from [0, bound); plain modulo keeps the stream identical
/// across standard libraries.
inline Residue uniform(Rng& rng, Residue bound) { return bound <= 1 ? 0 : rng() % bound; }

/// The exponent list is stored ascending (stable), so the subgroup
/// G_n = sum of the summands of exponent <= n is a coordinate prefix. All
/// external interfaces use the caller's original coordinate order;
/// `input_index` maps between the two.
class GroupType {
 public:
  GroupType(std::uint64_t p, std::vector<int> lambda);

  std::uint64_t p() const { return ring_.prime(); }
  const std::vector<int>& lambda() const { return lambda_; }
  const std::vector<int>& input_lambda() const { return input_lambda_; }
  int rank() const { return static_cast<int>(lambda_.size()); }
  /// N = max exponent.
  int max_exponent() const { return lambda_.back(); }
  /// log_p |G|.
  int order_exp() const { return order_exp_; }
  /// kappa_n: number of summands of exponent n.
  int kappa(int n) const;
  /// Number of coordinates with exponent <= n, i.e. the width of G_n.
  int prefix_width(int n) const;
  /// Z/(p^N), where all presentations live.
  const ChainRing& ring() const { return ring_; }
  /// p^{lambda_i} for canonical coordinate i.
  Residue coordinate_modulus(int i) const { return ring_.power(lambda_[static_cast<std::size_t>(i)]); }
  /// Original position of canonical coordinate i.
  int input_index(int i) const { return input_index_[static_cast<std::size_t>(i)]; }

  bool operator==(const GroupType& o) const {
    return ring_ == o.ring_ && input_lambda_ == o.input_lambda_;
  }

 private:
  ChainRing ring_;
  std::vector<int> input_lambda_;
  std::vector<int> lambda_;
  std::vector<int> input_index_;
  int order_exp_ = 0;
};

using GroupTypePtr = std::shared_ptr<const GroupType>;

GroupTypePtr make_group(std::uint64_t p, std::vector<int> lambda);

/// Throws on differing group types.
void require_same_group(const GroupTypePtr& a, const GroupTypePtr& b);

class Element {
 public:
  /// Coefficients in the caller's coordinate order; reduced on entry.
  Element(GroupTypePtr group, std::span<const std::int64_t> input_coeffs);
  Element(GroupTypePtr group, std::initializer_list<std::int64_t> input_coeffs)
      : Element(std::move(group), std::span<const std::int64_t>(input_coeffs.begin(), input_coeffs.size())) {}

  /// Coefficients in canonical (ascending exponent) order; reduced on entry.
  static Element from_canonical(GroupTypePtr group, ResidueVector coeffs);
  static Element zero(GroupTypePtr group);
  /// Standard generator of canonical coordinate i.
  static Element basis(GroupTypePtr group, int i);

  const GroupType& group() const { return *group_; }
  const GroupTypePtr& group_ptr() const { return group_; }
  const ResidueVector& coeffs() const { return coeffs_; }
  std::vector<Residue> input_coeffs() const;
  bool is_zero() const;

  bool operator==(const Element& o) const;

 private:
  Element(GroupTypePtr group, ResidueVector coeffs, bool);
  GroupTypePtr group_;
  ResidueVector coeffs_;
};

Element add(const Element& x, const Element& y);
Element subtract(const Element& x, const Element& y);
Element scalar_mul(std::int64_t a, const Element& x);
/// p^r * x.
Element p_power_mul(int r, const Element& x);

/// Smallest e with p^e * x = 0.
int order_exponent(const Element& x);

class Height {
 public:
  static Height infinite() { return Height(); }
  static Height finite(int r) { return Height(r); }
  bool is_infinite() const { return !value_.has_value(); }
  int value() const;
  bool operator==(const Height&) const = default;

 private:
  Height() = default;
  explicit Height(int r) : value_(r) {}
  std::optional<int> value_;
};

/// Height of x in G: the largest r with x in p^r G; infinite for x = 0.
Height height(const Element& x);

Element random_element(const GroupTypePtr& group, Rng& rng);

/// An error that carries concrete elements demonstrating the failure.
class WitnessError : public Error {
 public:
  WitnessError(const std::string& what, std::vector<Element> witnesses)
      : Error(what), witnesses_(std::move(witnesses)) {}
  const std::vector<Element>& witnesses() const { return witnesses_; }

 private:
  std::vector<Element> witnesses_;
};

}  // namespace picketlab
