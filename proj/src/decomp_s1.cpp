#include "picketlab/decomp_s1.hpp"

#include "picketlab/fp_basis.hpp"

#include <algorithm>

namespace picketlab {

namespace {

/// Coordinates of a socle element u in the F_p basis p^{lambda_i - 1} e_i.
ResidueVector socle_digits(const Element& u) {
  const auto& g = u.group();
  ResidueVector d(g.rank());
  for (int i = 0; i < g.rank(); ++i) d(i) = u.coeffs()(i) / g.ring().power(g.lambda()[static_cast<std::size_t>(i)] - 1);
  return d;
}

std::vector<Element> shuffled_candidates(std::vector<Element> spanning, Rng* rng) {
  if (!rng || spanning.empty()) return spanning;
  std::vector<Element> out;
  for (std::size_t t = 0; t < spanning.size(); ++t) {
    Element v = Element::zero(spanning.front().group_ptr());
    for (const auto& s : spanning) v = add(v, scalar_mul(static_cast<std::int64_t>(uniform(*rng, s.group().p())), s));
    out.push_back(std::move(v));
  }
  std::shuffle(spanning.begin(), spanning.end(), *rng);
  out.insert(out.end(), spanning.begin(), spanning.end());
  return out;
}

/// Canonical solution of p^h x = u, plus a random element of the kernel of
/// p^h when seeded.
Element divide(const Element& u, int h, Rng* rng) {
  const auto& g = u.group();
  ResidueVector x(g.rank());
  for (int i = 0; i < g.rank(); ++i) {
    const int li = g.lambda()[static_cast<std::size_t>(i)];
    x(i) = u.coeffs()(i) / g.ring().power(h);
    if (rng && li > 0) {
      const int ker = std::max(li - h, 0);
      x(i) += g.ring().power(ker) * uniform(*rng, g.ring().power(li - ker));
    }
    x(i) %= g.coordinate_modulus(i);
  }
  return Element::from_canonical(u.group_ptr(), std::move(x));
}

}  // namespace

std::optional<Element> s1_witness(const SubgroupPresentation& u) {
  for (auto& x : u.generators())
    if (!p_power_mul(1, x).is_zero()) return x;
  return std::nullopt;
}

bool check_s1(const SubgroupPresentation& u) { return !s1_witness(u).has_value(); }

PureHull pure_hull(const SubgroupPresentation& u, const BasisChoice& choice) {
  if (auto w = s1_witness(u)) throw IneligibleError("pU is not zero", {*w});
  const GroupTypePtr& g = u.group_ptr();
  std::optional<Rng> rng;
  if (choice.seed) rng.emplace(*choice.seed);
  Rng* r = rng ? &*rng : nullptr;

  const SubgroupPresentation whole = whole_group(g);
  IncrementalBasis basis(g->p(), g->rank());
  std::vector<ChainTop> tops;
  int expected_exp = 0;
  for (int h = g->max_exponent() - 1; h >= 0; --h) {
    const SubgroupPresentation layer = intersect(u, multiply_by_p_power(whole, h));
    for (const auto& c : shuffled_candidates(layer.generators(), r)) {
      if (!basis.insert(socle_digits(c))) continue;
      tops.push_back({divide(c, h, r), h});
      expected_exp += h + 1;
    }
  }

  std::vector<Element> xs;
  for (const auto& t : tops) xs.push_back(t.top);
  PureHull out{howellize(g, xs), std::move(tops)};
  if (out.hull.order_exp() != expected_exp || !is_pure(out.hull) || !(intersect(out.hull, socle(g)) == u))
    throw Error("internal: pure hull verification failed");
  return out;
}

std::vector<LeveledGenerator> complement_generators(const PureHull& h, const BasisChoice& choice) {
  const GroupTypePtr& g = h.hull.group_ptr();
  std::optional<Rng> rng;
  if (choice.seed) rng.emplace(*choice.seed);

  // G = H + <chosen> is direct iff all socle vectors p^{n-1} y are
  // independent; walking the levels downward the chosen standard
  // generators fill G[p] meet p^{n-1} G at each level.
  IncrementalBasis basis(g->p(), g->rank());
  std::vector<LeveledGenerator> chosen;
  int chosen_exp = 0;
  for (int n = g->max_exponent(); n >= 1; --n) {
    for (const auto& t : h.chain_tops)
      if (t.height + 1 == n && !basis.insert(socle_digits(p_power_mul(t.height, t.top))))
        throw Error("internal: chain-top socle vectors are dependent");
    std::vector<int> candidates;
    for (int i = 0; i < g->rank(); ++i)
      if (g->lambda()[static_cast<std::size_t>(i)] == n) candidates.push_back(i);
    if (rng) std::shuffle(candidates.begin(), candidates.end(), *rng);
    for (int i : candidates) {
      ResidueVector e = ResidueVector::Zero(g->rank());
      e(i) = 1;
      if (basis.insert(e)) {
        chosen.push_back({n, Element::basis(g, i)});
        chosen_exp += n;
      }
    }
  }
  if (chosen_exp + h.hull.order_exp() != g->order_exp()) throw Error("internal: complement has the wrong order");
  return chosen;
}

SubgroupPresentation complement(const PureHull& h, const BasisChoice& choice) {
  if (!is_pure(h.hull)) throw Error("complement: H is not pure");
  const GroupTypePtr& g = h.hull.group_ptr();
  std::vector<Element> gens;
  for (auto& c : complement_generators(h, choice)) gens.push_back(std::move(c.generator));
  SubgroupPresentation out = howellize(g, gens);
  if (!(sum(h.hull, out) == whole_group(g)) || !(intersect(h.hull, out) == zero_subgroup(g)))
    throw Error("internal: complement verification failed");
  return out;
}

PicketDecomposition decompose_s1(const SubgroupPresentation& u, const BasisChoice& choice) {
  PureHull h = pure_hull(u, choice);
  PicketDecomposition d{Mode::s1, {}, {}, {}};
  for (const auto& t : h.chain_tops) d.full.push_back({t.height + 1, t.top});
  d.partial = complement_generators(h, choice);
  d.multiplicities = count_levels(Mode::s1, d.full, d.partial);
  return d;
}

Multiplicities multiplicities_s1(const SubgroupPresentation& u) {
  if (auto w = s1_witness(u)) throw IneligibleError("pU is not zero", {*w});
  const auto& g = u.group();
  const SubgroupPresentation whole = whole_group(u.group_ptr());
  Multiplicities out;
  for (int n = 1; n <= g.max_exponent(); ++n) {
    int one = elementary_quotient_dim(intersect(u, multiply_by_p_power(whole, n - 1)),
                                      intersect(u, multiply_by_p_power(whole, n)));
    int zero = g.kappa(n) - one;
    if (zero < 0) throw Error("internal: negative P^" + std::to_string(n) + "_0 count");
    if (one > 0) out[{n, 1}] = one;
    if (zero > 0) out[{n, 0}] = zero;
  }
  return out;
}

int coset_height(const Element& x, const SubgroupPresentation& u) {
  if (member(x, u)) throw WitnessError("coset height: element lies in U", {x});
  const SubgroupPresentation whole = whole_group(u.group_ptr());
  int r = 0;
  while (member(x, sum(multiply_by_p_power(whole, r + 1), u))) ++r;
  return r;
}

RemarkReport remark_family(int n, std::uint64_t p) {
  if (n < 2) throw Error("remark family needs N >= 2");
  std::vector<int> lambda;
  for (int e = 1; e <= n; ++e) lambda.push_back(e);
  GroupTypePtr g = make_group(p, lambda);
  std::vector<Element> gens;
  // lambda is already ascending, so y_e is canonical coordinate e - 1
  for (int e = 2; e <= n; ++e)
    gens.push_back(subtract(Element::basis(g, 0), p_power_mul(e - 1, Element::basis(g, e - 1))));
  SubgroupPresentation u = howellize(g, gens);
  int h = coset_height(Element::basis(g, 0), u);
  return {n, u, h, decompose_s1(u)};
}

}  // namespace picketlab
