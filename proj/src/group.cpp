#include "picketlab/group.hpp"

#include <algorithm>
#include <numeric>

namespace picketlab {

namespace {

int max_of(const std::vector<int>& v) {
  if (v.empty()) throw Error("exponent list must be nonempty");
  return *std::max_element(v.begin(), v.end());
}

}  // namespace

GroupType::GroupType(std::uint64_t p, std::vector<int> lambda)
    : ring_(p, max_of(lambda)), input_lambda_(std::move(lambda)) {
  for (int e : input_lambda_)
    if (e < 1) throw Error("every exponent must be at least 1");
  input_index_.resize(input_lambda_.size());
  std::iota(input_index_.begin(), input_index_.end(), 0);
  std::stable_sort(input_index_.begin(), input_index_.end(),
                   [&](int a, int b) { return input_lambda_[a] < input_lambda_[b]; });
  for (int i : input_index_) lambda_.push_back(input_lambda_[static_cast<std::size_t>(i)]);
  order_exp_ = std::accumulate(lambda_.begin(), lambda_.end(), 0);
}

int GroupType::kappa(int n) const {
  return static_cast<int>(std::count(lambda_.begin(), lambda_.end(), n));
}

int GroupType::prefix_width(int n) const {
  return static_cast<int>(std::upper_bound(lambda_.begin(), lambda_.end(), n) - lambda_.begin());
}

GroupTypePtr make_group(std::uint64_t p, std::vector<int> lambda) {
  return std::make_shared<const GroupType>(p, std::move(lambda));
}

void require_same_group(const GroupTypePtr& a, const GroupTypePtr& b) {
  if (a != b && !(*a == *b)) throw Error("group type mismatch");
}

Element::Element(GroupTypePtr group, ResidueVector coeffs, bool) : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != group_->rank()) throw Error("element length does not match the group rank");
  for (int i = 0; i < group_->rank(); ++i) coeffs_(i) %= group_->coordinate_modulus(i);
}

Element::Element(GroupTypePtr group, std::span<const std::int64_t> input_coeffs) : group_(std::move(group)) {
  const int k = group_->rank();
  if (static_cast<int>(input_coeffs.size()) != k) throw Error("element length does not match the group rank");
  coeffs_.resize(k);
  for (int i = 0; i < k; ++i) {
    auto m = static_cast<std::int64_t>(group_->coordinate_modulus(i));
    std::int64_t a = input_coeffs[static_cast<std::size_t>(group_->input_index(i))] % m;
    coeffs_(i) = static_cast<Residue>(a < 0 ? a + m : a);
  }
}

Element Element::from_canonical(GroupTypePtr group, ResidueVector coeffs) {
  return Element(std::move(group), std::move(coeffs), true);
}

Element Element::zero(GroupTypePtr group) {
  ResidueVector z = ResidueVector::Zero(group->rank());
  return Element(std::move(group), std::move(z), true);
}

Element Element::basis(GroupTypePtr group, int i) {
  ResidueVector z = ResidueVector::Zero(group->rank());
  z(i) = 1;
  return Element(std::move(group), std::move(z), true);
}

std::vector<Residue> Element::input_coeffs() const {
  std::vector<Residue> out(static_cast<std::size_t>(coeffs_.size()));
  for (int i = 0; i < group_->rank(); ++i) out[static_cast<std::size_t>(group_->input_index(i))] = coeffs_(i);
  return out;
}

bool Element::is_zero() const {
  return std::all_of(coeffs_.data(), coeffs_.data() + coeffs_.size(), [](Residue a) { return a == 0; });
}

bool Element::operator==(const Element& o) const {
  return (group_ == o.group_ || *group_ == *o.group_) && coeffs_ == o.coeffs_;
}

Element add(const Element& x, const Element& y) {
  require_same_group(x.group_ptr(), y.group_ptr());
  const auto& g = x.group();
  ResidueVector out(g.rank());
  for (int i = 0; i < g.rank(); ++i) out(i) = (x.coeffs()(i) + y.coeffs()(i)) % g.coordinate_modulus(i);
  return Element::from_canonical(x.group_ptr(), std::move(out));
}

Element subtract(const Element& x, const Element& y) { return add(x, scalar_mul(-1, y)); }

Element scalar_mul(std::int64_t a, const Element& x) {
  const auto& g = x.group();
  const Residue c = g.ring().reduce(a);
  ResidueVector out(g.rank());
  for (int i = 0; i < g.rank(); ++i) out(i) = g.ring().mul(c, x.coeffs()(i)) % g.coordinate_modulus(i);
  return Element::from_canonical(x.group_ptr(), std::move(out));
}

Element p_power_mul(int r, const Element& x) {
  const auto& g = x.group();
  if (r >= g.max_exponent()) return Element::zero(x.group_ptr());
  return scalar_mul(static_cast<std::int64_t>(g.ring().power(r)), x);
}

int order_exponent(const Element& x) {
  const auto& g = x.group();
  int e = 0;
  for (int i = 0; i < g.rank(); ++i) {
    Residue a = x.coeffs()(i);
    if (a != 0) e = std::max(e, g.lambda()[static_cast<std::size_t>(i)] - g.ring().valuation(a));
  }
  return e;
}

int Height::value() const {
  if (!value_) throw Error("height is infinite");
  return *value_;
}

Height height(const Element& x) {
  const auto& g = x.group();
  std::optional<int> h;
  for (int i = 0; i < g.rank(); ++i) {
    Residue a = x.coeffs()(i);
    if (a == 0) continue;
    int v = g.ring().valuation(a);
    h = h ? std::min(*h, v) : v;
  }
  return h ? Height::finite(*h) : Height::infinite();
}

Element random_element(const GroupTypePtr& group, Rng& rng) {
  ResidueVector c(group->rank());
  for (int i = 0; i < group->rank(); ++i) c(i) = uniform(rng, group->coordinate_modulus(i));
  return Element::from_canonical(group, std::move(c));
}

}  // namespace picketlab
