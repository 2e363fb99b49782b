#pragma once
// Canonical subgroup presentations and the subgroup calculus.
//
// A subgroup U of G is carried by the Howell form of its preimage under
// (Z/p^N)^k -> G. The preimage always contains the relations
// p^{lambda_i} e_i, so the zero subgroup is the relations-only form and
// equality of subgroups is equality of matrices.

#include "picketlab/group.hpp"
#include "picketlab/howell.hpp"

#include <optional>
#include <span>
#include <vector>

namespace picketlab {

class SubgroupPresentation {
 public:
  /// Subgroup generated by the given rows (canonical coordinates over
  /// Z/p^N), relations added automatically.
  static SubgroupPresentation from_rows(GroupTypePtr group, const ResidueMatrix& rows);

  const GroupType& group() const { return *group_; }
  const GroupTypePtr& group_ptr() const { return group_; }
  const ResidueMatrix& howell() const { return howell_; }
  /// log_p |U|.
  int order_exp() const { return order_exp_; }
  /// Nonzero Howell rows reduced into G; they generate the subgroup.
  std::vector<Element> generators() const;

  bool operator==(const SubgroupPresentation& o) const;

 private:
  SubgroupPresentation(GroupTypePtr group, ResidueMatrix howell);
  GroupTypePtr group_;
  ResidueMatrix howell_;
  int order_exp_ = 0;
};

SubgroupPresentation howellize(const GroupTypePtr& group, std::span<const Element> gens);
SubgroupPresentation whole_group(const GroupTypePtr& group);
SubgroupPresentation zero_subgroup(const GroupTypePtr& group);
/// G_n: the summands of exponent <= n.
SubgroupPresentation level_subgroup(const GroupTypePtr& group, int n);
/// G[p] = {x : px = 0}.
SubgroupPresentation socle(const GroupTypePtr& group);

bool member(const Element& x, const SubgroupPresentation& s);
/// A generator of `sub` lying outside `container`, if any.
std::optional<Element> first_outside(const SubgroupPresentation& container, const SubgroupPresentation& sub);
bool contains(const SubgroupPresentation& container, const SubgroupPresentation& sub);

SubgroupPresentation sum(const SubgroupPresentation& a, const SubgroupPresentation& b);
SubgroupPresentation intersect(const SubgroupPresentation& a, const SubgroupPresentation& b);
/// p^r * S.
SubgroupPresentation multiply_by_p_power(const SubgroupPresentation& s, int r);

/// dim_{F_p}(X / Y). Requires Y in X and pX in Y; a violation throws a
/// WitnessError naming the failing inclusion.
int elementary_quotient_dim(const SubgroupPresentation& x, const SubgroupPresentation& y);

struct FiltrationSlice {
  int n;
  SubgroupPresentation level;     // G_n
  SubgroupPresentation subgroup;  // U_n = U meet G_n
};

/// Slices for n = 1..N.
std::vector<FiltrationSlice> filtration(const SubgroupPresentation& u);

/// H meet p^r G = p^r H for all r.
bool is_pure(const SubgroupPresentation& h);

/// Largest r with x in p^r S; infinite for x = 0. Throws if x is not in S.
Height height(const Element& x, const SubgroupPresentation& within);

}  // namespace picketlab
