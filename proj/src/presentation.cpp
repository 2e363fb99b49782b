#include "picketlab/presentation.hpp"

namespace picketlab {

namespace {

ResidueMatrix relations(const GroupType& g) {
  ResidueMatrix rel = ResidueMatrix::Zero(g.rank(), g.rank());
  for (int i = 0; i < g.rank(); ++i) rel(i, i) = g.coordinate_modulus(i) % g.ring().modulus();
  return rel;
}

ResidueMatrix element_rows(std::span<const Element> gens, Eigen::Index cols) {
  ResidueMatrix m(static_cast<Eigen::Index>(gens.size()), cols);
  for (std::size_t i = 0; i < gens.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = gens[i].coeffs();
  return m;
}

}  // namespace

SubgroupPresentation::SubgroupPresentation(GroupTypePtr group, ResidueMatrix howell)
    : group_(std::move(group)), howell_(std::move(howell)) {
  int relation_exp = 0;
  for (int e : group_->lambda()) relation_exp += group_->max_exponent() - e;
  order_exp_ = span_order_exp(group_->ring(), howell_) - relation_exp;
}

SubgroupPresentation SubgroupPresentation::from_rows(GroupTypePtr group, const ResidueMatrix& rows) {
  if (rows.rows() > 0 && rows.cols() != group->rank()) throw Error("generator width does not match the group rank");
  ResidueMatrix all = stack(relations(*group), rows);
  ResidueMatrix h = howell_form(group->ring(), all);
  return SubgroupPresentation(std::move(group), std::move(h));
}

std::vector<Element> SubgroupPresentation::generators() const {
  std::vector<Element> out;
  for (Eigen::Index i = 0; i < howell_.rows(); ++i) {
    Element e = Element::from_canonical(group_, howell_.row(i));
    if (!e.is_zero()) out.push_back(std::move(e));
  }
  return out;
}

bool SubgroupPresentation::operator==(const SubgroupPresentation& o) const {
  return (group_ == o.group_ || *group_ == *o.group_) && howell_.rows() == o.howell_.rows() && howell_ == o.howell_;
}

SubgroupPresentation howellize(const GroupTypePtr& group, std::span<const Element> gens) {
  for (const auto& g : gens) require_same_group(group, g.group_ptr());
  return SubgroupPresentation::from_rows(group, element_rows(gens, group->rank()));
}

SubgroupPresentation whole_group(const GroupTypePtr& group) {
  return SubgroupPresentation::from_rows(group, identity(group->rank()));
}

SubgroupPresentation zero_subgroup(const GroupTypePtr& group) {
  return SubgroupPresentation::from_rows(group, ResidueMatrix(0, group->rank()));
}

SubgroupPresentation level_subgroup(const GroupTypePtr& group, int n) {
  const int w = group->prefix_width(n);
  ResidueMatrix rows = ResidueMatrix::Zero(w, group->rank());
  for (int i = 0; i < w; ++i) rows(i, i) = 1;
  return SubgroupPresentation::from_rows(group, rows);
}

SubgroupPresentation socle(const GroupTypePtr& group) {
  ResidueMatrix rows = ResidueMatrix::Zero(group->rank(), group->rank());
  for (int i = 0; i < group->rank(); ++i) rows(i, i) = group->ring().power(group->lambda()[static_cast<std::size_t>(i)] - 1);
  return SubgroupPresentation::from_rows(group, rows);
}

bool member(const Element& x, const SubgroupPresentation& s) {
  require_same_group(x.group_ptr(), s.group_ptr());
  return in_span(s.group().ring(), s.howell(), x.coeffs());
}

std::optional<Element> first_outside(const SubgroupPresentation& container, const SubgroupPresentation& sub) {
  for (auto& g : sub.generators())
    if (!member(g, container)) return g;
  return std::nullopt;
}

bool contains(const SubgroupPresentation& container, const SubgroupPresentation& sub) {
  return !first_outside(container, sub).has_value();
}

SubgroupPresentation sum(const SubgroupPresentation& a, const SubgroupPresentation& b) {
  require_same_group(a.group_ptr(), b.group_ptr());
  return SubgroupPresentation::from_rows(a.group_ptr(), stack(a.howell(), b.howell()));
}

SubgroupPresentation intersect(const SubgroupPresentation& a, const SubgroupPresentation& b) {
  require_same_group(a.group_ptr(), b.group_ptr());
  return SubgroupPresentation::from_rows(a.group_ptr(), span_intersection(a.group().ring(), a.howell(), b.howell()));
}

SubgroupPresentation multiply_by_p_power(const SubgroupPresentation& s, int r) {
  if (r < 0) throw Error("negative p-power");
  const auto& g = s.group();
  if (r >= g.max_exponent()) return zero_subgroup(s.group_ptr());
  ResidueMatrix rows = s.howell();
  const Residue c = g.ring().power(r);
  for (Eigen::Index i = 0; i < rows.rows(); ++i) rows.row(i) = scaled(g.ring(), c, rows.row(i));
  return SubgroupPresentation::from_rows(s.group_ptr(), rows);
}

int elementary_quotient_dim(const SubgroupPresentation& x, const SubgroupPresentation& y) {
  require_same_group(x.group_ptr(), y.group_ptr());
  if (auto w = first_outside(x, y)) throw WitnessError("elementary quotient: Y is not contained in X", {*w});
  if (auto w = first_outside(y, multiply_by_p_power(x, 1)))
    throw WitnessError("elementary quotient: pX is not contained in Y", {*w});
  return x.order_exp() - y.order_exp();
}

std::vector<FiltrationSlice> filtration(const SubgroupPresentation& u) {
  std::vector<FiltrationSlice> slices;
  for (int n = 1; n <= u.group().max_exponent(); ++n) {
    SubgroupPresentation level = level_subgroup(u.group_ptr(), n);
    SubgroupPresentation meet = intersect(u, level);
    slices.push_back({n, std::move(level), std::move(meet)});
  }
  return slices;
}

bool is_pure(const SubgroupPresentation& h) {
  const SubgroupPresentation g = whole_group(h.group_ptr());
  for (int r = 1; r < h.group().max_exponent(); ++r)
    if (!(intersect(h, multiply_by_p_power(g, r)) == multiply_by_p_power(h, r))) return false;
  return true;
}

Height height(const Element& x, const SubgroupPresentation& within) {
  if (!member(x, within)) throw WitnessError("height: element is not in the carrier subgroup", {x});
  if (x.is_zero()) return Height::infinite();
  int r = 0;
  while (member(x, multiply_by_p_power(within, r + 1))) ++r;
  return Height::finite(r);
}

}  // namespace picketlab
