#include "picketlab/decomp_f1.hpp"

#include "picketlab/fp_basis.hpp"

#include <algorithm>

namespace picketlab {

namespace {

/// Image of x in G_n / pG_n = F_p^w (x must lie in G_n).
ResidueVector mod_p(const Element& x, int width) {
  const auto p = x.group().p();
  ResidueVector v(width);
  for (int i = 0; i < width; ++i) v(i) = x.coeffs()(i) % p;
  return v;
}

/// Digits of v as an element of G_n, plus p * (random element of G_n) when
/// seeded. Either way the result maps to v in G_n / pG_n.
Element lift(const GroupTypePtr& g, const ResidueVector& v, Rng* rng) {
  ResidueVector c = ResidueVector::Zero(g->rank());
  c.head(v.size()) = v;
  if (rng) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      c(i) = (c(i) + g->p() * uniform(*rng, g->coordinate_modulus(static_cast<int>(i)))) %
             g->coordinate_modulus(static_cast<int>(i));
  }
  return Element::from_canonical(g, std::move(c));
}

ResidueVector random_vector(std::uint64_t p, Eigen::Index w, Rng& rng) {
  ResidueVector v(w);
  for (Eigen::Index i = 0; i < w; ++i) v(i) = uniform(rng, p);
  return v;
}

/// Seeded runs first offer a few random combinations, then the spanning
/// candidates in shuffled order.
std::vector<ResidueVector> candidate_order(std::vector<ResidueVector> spanning, std::uint64_t p, Eigen::Index w,
                                           Rng* rng) {
  if (!rng || spanning.empty()) return spanning;
  const ChainRing field(p, 1);
  std::vector<ResidueVector> out;
  const std::size_t extra = spanning.size();
  for (std::size_t t = 0; t < extra; ++t) {
    ResidueVector v = ResidueVector::Zero(w);
    for (const auto& s : spanning) axpy(field, uniform(*rng, p), s, v);
    out.push_back(std::move(v));
  }
  std::shuffle(spanning.begin(), spanning.end(), *rng);
  out.insert(out.end(), spanning.begin(), spanning.end());
  return out;
}

void verify_layer(const GroupTypePtr& g, int n, const std::vector<Element>& fresh) {
  const int w = g->prefix_width(n), kappa = g->kappa(n);
  GroupTypePtr layer = make_group(g->p(), std::vector<int>(static_cast<std::size_t>(kappa), n));
  std::vector<ResidueVector> cosets;
  std::vector<Element> lifts;
  for (const auto& x : fresh) {
    ResidueVector t = x.coeffs().segment(w - kappa, kappa);
    lifts.push_back(Element::from_canonical(layer, t));
    for (Eigen::Index i = 0; i < t.size(); ++i) t(i) %= g->p();
    cosets.push_back(std::move(t));
  }
  if (!lift_independent(layer, cosets, lifts).generates_whole)
    throw Error("internal: new generators at level " + std::to_string(n) + " do not span the isotypic layer");
}

}  // namespace

std::optional<Element> f1_witness(const SubgroupPresentation& u) {
  return first_outside(u, multiply_by_p_power(whole_group(u.group_ptr()), 1));
}

bool check_f1(const SubgroupPresentation& u) { return !f1_witness(u).has_value(); }

Multiplicities multiplicities_f1(const SubgroupPresentation& u) {
  if (auto w = f1_witness(u)) throw IneligibleError("pG is not contained in U", {*w});
  const auto& gp = u.group_ptr();
  Multiplicities out;
  for (int n = 1; n <= u.group().max_exponent(); ++n) {
    SubgroupPresentation level = level_subgroup(gp, n);
    SubgroupPresentation lower = level_subgroup(gp, n - 1);
    SubgroupPresentation lower_plus_sub = sum(lower, intersect(u, level));
    SubgroupPresentation lower_plus_p = sum(lower, multiply_by_p_power(level, 1));
    int full = elementary_quotient_dim(lower_plus_sub, lower_plus_p);
    int index_p = elementary_quotient_dim(level, lower_plus_sub);
    if (full > 0) out[{n, n}] = full;
    if (index_p > 0) out[{n, n - 1}] = index_p;
  }
  return out;
}

PicketDecomposition decompose_f1(const SubgroupPresentation& u, const BasisChoice& choice) {
  if (auto w = f1_witness(u)) throw IneligibleError("pG is not contained in U", {*w});
  const GroupTypePtr& g = u.group_ptr();
  const std::uint64_t p = g->p();
  std::optional<Rng> rng;
  if (choice.seed) rng.emplace(*choice.seed);
  Rng* r = rng ? &*rng : nullptr;

  PicketDecomposition d{Mode::f1, {}, {}, {}};
  for (int n = 1; n <= g->max_exponent(); ++n) {
    if (g->kappa(n) == 0) continue;  // G_n = G_{n-1}: nothing new
    const int w = g->prefix_width(n);
    const SubgroupPresentation u_n = intersect(u, level_subgroup(g, n));

    IncrementalBasis basis(p, w);
    for (const auto& c : d.full)
      if (!basis.insert(mod_p(c.generator, w))) throw Error("internal: inherited U-basis is dependent");

    std::vector<ResidueVector> spanning;
    for (const auto& x : u_n.generators()) spanning.push_back(mod_p(x, w));
    std::vector<Element> fresh_full, fresh_partial;
    for (const auto& v : candidate_order(std::move(spanning), p, w, r))
      if (basis.insert(v)) fresh_full.push_back(lift(g, v, r));

    for (const auto& c : d.partial)
      if (!basis.insert(mod_p(c.generator, w))) throw Error("internal: inherited complement is dependent");

    spanning.clear();
    for (int i = 0; i < w; ++i) {
      ResidueVector e = ResidueVector::Zero(w);
      e(i) = 1;
      spanning.push_back(std::move(e));
    }
    if (r) spanning.insert(spanning.begin(), random_vector(p, w, *r));
    for (const auto& v : candidate_order(std::move(spanning), p, w, r))
      if (basis.insert(v)) fresh_partial.push_back(lift(g, v, r));
    if (basis.size() != w) throw Error("internal: level basis incomplete");

    std::vector<Element> fresh = fresh_full;
    fresh.insert(fresh.end(), fresh_partial.begin(), fresh_partial.end());
    verify_layer(g, n, fresh);

    for (auto& x : fresh_full) d.full.push_back({n, std::move(x)});
    for (auto& x : fresh_partial) d.partial.push_back({n, std::move(x)});
  }
  d.multiplicities = count_levels(Mode::f1, d.full, d.partial);
  return d;
}

LiftWitness lift_independent(const GroupTypePtr& isotypic, const std::vector<ResidueVector>& cosets,
                             const std::vector<Element>& liftings) {
  const auto& t = *isotypic;
  const int n = t.max_exponent();
  if (t.lambda().front() != n) throw Error("lift_independent: T is not isotypic");
  if (cosets.size() != liftings.size()) throw Error("lift_independent: one lifting per coset required");
  const std::uint64_t p = t.p();

  IncrementalBasis basis(p, t.rank());
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    require_same_group(isotypic, liftings[i].group_ptr());
    ResidueVector reduced = liftings[i].coeffs();
    for (Eigen::Index j = 0; j < reduced.size(); ++j) reduced(j) %= p;
    ResidueVector coset = cosets[i];
    for (Eigen::Index j = 0; j < coset.size(); ++j) coset(j) %= p;
    if (coset.size() != t.rank() || reduced != coset)
      throw WitnessError("lift_independent: lifting " + std::to_string(i) + " does not reduce to its coset",
                         {liftings[i]});
    if (!basis.insert(coset)) {
      ResidueVector coords = *basis.coordinates(coset);
      // sum_j coords_j b_j - b_i = 0 over the cosets accepted so far
      ResidueVector rel = ResidueVector::Zero(static_cast<Eigen::Index>(cosets.size()));
      const ChainRing field(p, 1);
      for (Eigen::Index j = 0; j < coords.size(); ++j) rel(j) = coords(j);
      rel(static_cast<Eigen::Index>(i)) = field.neg(1);
      throw IndependenceViolation("lift_independent: cosets are linearly dependent", rel);
    }
  }

  LiftWitness witness{n, {}, false};
  const bool basis_of_quotient = basis.size() == t.rank();
  const SubgroupPresentation whole = whole_group(isotypic);
  for (int m = n - 1; m >= 0; --m) {
    std::vector<Element> scaled_lifts;
    int summands = 0;
    for (const auto& c : liftings) {
      scaled_lifts.push_back(p_power_mul(m, c));
      summands += order_exponent(scaled_lifts.back());
    }
    SubgroupPresentation generated = howellize(isotypic, scaled_lifts);
    LiftLevel level{m, summands, generated.order_exp(), generated == multiply_by_p_power(whole, m)};
    if (level.summand_order_exp != level.generated_order_exp)
      throw Error("internal: p^" + std::to_string(m) + " multiples of the liftings are not independent");
    if (basis_of_quotient && !level.equals_p_power_of_whole)
      throw Error("internal: liftings of a basis do not generate p^" + std::to_string(m) + " T");
    witness.levels.push_back(level);
  }
  witness.generates_whole = !witness.levels.empty() && witness.levels.back().equals_p_power_of_whole;
  return witness;
}

}  // namespace picketlab
