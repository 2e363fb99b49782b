#include "picketlab/oracle_check.hpp"

#include "picketlab/decomp_f1.hpp"
#include "picketlab/decomp_s1.hpp"

namespace picketlab {

namespace {

std::string show(const Multiplicities& m) {
  std::string s = "{";
  for (const auto& [pk, c] : m)
    s += "(" + std::to_string(pk.n) + "," + std::to_string(pk.l) + "):" + std::to_string(c) + " ";
  return s + "}";
}

class Tally {
 public:
  explicit Tally(OracleReport& r) : r_(r) {}

  template <class T>
  void same(const std::string& what, const T& computed, const T& enumerated) {
    ++r_.compared;
    if (computed == enumerated) return;
    r_.agree = false;
    r_.mismatches.push_back(what);
  }

  void same(const std::string& what, const Multiplicities& computed, const Multiplicities& enumerated) {
    ++r_.compared;
    if (computed == enumerated) return;
    r_.agree = false;
    r_.mismatches.push_back(what + ": " + show(computed) + " vs " + show(enumerated));
  }

 private:
  OracleReport& r_;
};

}  // namespace

OracleReport oracle_check(const SubgroupPresentation& u) {
  const BruteInvariants b = brute_invariants(u);
  const GroupTypePtr& g = u.group_ptr();
  const SubgroupPresentation whole = whole_group(g);
  OracleReport report;
  Tally t(report);

  t.same("order of G", g->order_exp(), b.order_exp);
  t.same("order of U", u.order_exp(), b.subgroup_exp);
  t.same("f1 eligibility", check_f1(u), b.f1_eligible);
  t.same("s1 eligibility", check_s1(u), b.s1_eligible);

  for (const auto& lv : b.levels) {
    const std::string at = " at n=" + std::to_string(lv.n);
    const int n = lv.n;
    t.same("kappa" + at, g->kappa(n), b.kappa[static_cast<std::size_t>(n - 1)]);
    SubgroupPresentation level = level_subgroup(g, n);
    SubgroupPresentation lower = level_subgroup(g, n - 1);
    SubgroupPresentation lower_plus_sub = sum(lower, intersect(u, level));
    if (b.f1_eligible) {
      t.same("dim G_n/(G_n-1 + U_n)" + at, elementary_quotient_dim(level, lower_plus_sub),
             lv.level_exp - lv.lower_plus_sub_exp);
      SubgroupPresentation lower_plus_p = sum(lower, multiply_by_p_power(level, 1));
      t.same("dim (G_n-1 + U_n)/(G_n-1 + pG_n)" + at, elementary_quotient_dim(lower_plus_sub, lower_plus_p),
             lv.lower_plus_sub_exp - lv.lower_plus_p_exp);
    }
    const auto i = static_cast<std::size_t>(n - 1);
    t.same("dim (U meet p^n-1 G)/(U meet p^n G)" + at,
           elementary_quotient_dim(intersect(u, multiply_by_p_power(whole, n - 1)),
                                   intersect(u, multiply_by_p_power(whole, n))),
           b.meet_p_power_exp[i] - b.meet_p_power_exp[i + 1]);
  }

  auto check_decomposition = [&](const PicketDecomposition& d, const Multiplicities& enumerated) {
    const std::string m = to_string(d.mode);
    t.same(m + " certificate multiplicities", d.multiplicities, enumerated);
    Verdict v = verify_certificate(u, d);
    t.same(m + " certificate accepted", v.accepted, true);
    if (!v.accepted) report.mismatches.back() += ": " + v.description;
  };
  if (b.f1_eligible) {
    t.same("f1 multiplicities", multiplicities_f1(u), b.f1_multiplicities());
    check_decomposition(decompose_f1(u), b.f1_multiplicities());
  }
  if (b.s1_eligible) {
    t.same("s1 multiplicities", multiplicities_s1(u), b.s1_multiplicities());
    check_decomposition(decompose_s1(u), b.s1_multiplicities());
  }
  return report;
}

}  // namespace picketlab
