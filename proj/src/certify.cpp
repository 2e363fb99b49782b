#include "picketlab/certify.hpp"

#include "picketlab/decomp_f1.hpp"
#include "picketlab/decomp_s1.hpp"

#include <algorithm>
#include <deque>

namespace picketlab {

std::string to_string(FailureKind k) {
  switch (k) {
    case FailureKind::none: return "none";
    case FailureKind::wrong_group: return "wrong_group";
    case FailureKind::level_mismatch: return "level_mismatch";
    case FailureKind::not_generating: return "not_generating";
    case FailureKind::not_independent: return "not_independent";
    case FailureKind::subgroup_mismatch: return "subgroup_mismatch";
    case FailureKind::multiplicity_mismatch: return "multiplicity_mismatch";
  }
  return "unknown";
}

std::string to_string(InstanceMode m) {
  switch (m) {
    case InstanceMode::f1: return "f1";
    case InstanceMode::s1: return "s1";
    case InstanceMode::ineligible: return "ineligible";
  }
  return "unknown";
}

namespace {

Verdict reject(FailureKind kind, std::string description, std::vector<Element> witness) {
  return {false, kind, std::move(description), std::move(witness)};
}

}  // namespace

Verdict verify_certificate(const SubgroupPresentation& u, const PicketDecomposition& d) {
  const GroupTypePtr& g = u.group_ptr();
  std::vector<Element> all;
  for (const auto* side : {&d.full, &d.partial})
    for (const auto& c : *side) {
      if (!(c.generator.group() == *g)) return reject(FailureKind::wrong_group, "generator from another group", {});
      if (c.level < 1 || order_exponent(c.generator) != c.level)
        return reject(FailureKind::level_mismatch,
                      "generator labeled level " + std::to_string(c.level) + " has order p^" +
                          std::to_string(order_exponent(c.generator)),
                      {c.generator});
      all.push_back(c.generator);
    }

  const SubgroupPresentation spanned = howellize(g, all);
  for (int i = 0; i < g->rank(); ++i) {
    Element e = Element::basis(g, i);
    if (!member(e, spanned)) return reject(FailureKind::not_generating, "generators do not span G", {e});
  }
  int total = 0;
  for (const auto& x : all) total += order_exponent(x);
  if (total != g->order_exp())
    return reject(FailureKind::not_independent,
                  "generators span G but their orders multiply to p^" + std::to_string(total) + ", not p^" +
                      std::to_string(g->order_exp()),
                  all);

  std::vector<Element> sub_gens;
  for (const auto& c : d.full)
    sub_gens.push_back(d.mode == Mode::f1 ? c.generator : p_power_mul(c.level - 1, c.generator));
  if (d.mode == Mode::f1)
    for (const auto& c : d.partial) sub_gens.push_back(p_power_mul(1, c.generator));
  const SubgroupPresentation certified = howellize(g, sub_gens);
  if (auto w = first_outside(certified, u))
    return reject(FailureKind::subgroup_mismatch, "element of U outside the certified subgroup", {*w});
  if (auto w = first_outside(u, certified))
    return reject(FailureKind::subgroup_mismatch, "certified subgroup element outside U", {*w});

  Multiplicities counted = count_levels(d.mode, d.full, d.partial);
  if (counted != d.multiplicities) {
    std::string msg = "multiplicity map disagrees with generator levels:";
    for (const auto& [pk, m] : counted) {
      auto it = d.multiplicities.find(pk);
      int claimed = it == d.multiplicities.end() ? 0 : it->second;
      if (claimed != m)
        msg += " P^" + std::to_string(pk.n) + "_" + std::to_string(pk.l) + " counted " + std::to_string(m) +
               " claimed " + std::to_string(claimed) + ";";
    }
    for (const auto& [pk, m] : d.multiplicities)
      if (!counted.contains(pk))
        msg += " P^" + std::to_string(pk.n) + "_" + std::to_string(pk.l) + " counted 0 claimed " +
               std::to_string(m) + ";";
    return reject(FailureKind::multiplicity_mismatch, msg, {});
  }
  return {};
}

// ---------------------------------------------------------------------------
// Enumeration oracle

namespace {

/// Elements are indexed in mixed radix over the canonical coordinates.
class Enumerator {
 public:
  explicit Enumerator(const GroupType& g) : g_(g) {
    constexpr std::size_t limit = std::size_t{1} << kEnumerationGuardBits;
    for (int i = 0; i < g.rank(); ++i) {
      radix_.push_back(g.coordinate_modulus(i));
      if (size_ > limit / radix_.back())
        throw Error("enumeration guard: |G| exceeds 2^" + std::to_string(kEnumerationGuardBits));
      size_ *= radix_.back();
    }
  }

  std::size_t size() const { return size_; }

  std::vector<Residue> decode(std::size_t idx) const {
    std::vector<Residue> c(radix_.size());
    for (std::size_t i = 0; i < radix_.size(); ++i) {
      c[i] = idx % radix_[i];
      idx /= radix_[i];
    }
    return c;
  }

  std::size_t encode(const std::vector<Residue>& c) const {
    std::size_t idx = 0;
    for (std::size_t i = radix_.size(); i-- > 0;) idx = idx * radix_[i] + c[i];
    return idx;
  }

  std::size_t add(std::size_t a, std::size_t b) const {
    auto x = decode(a), y = decode(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % radix_[i];
    return encode(x);
  }

  std::size_t times(std::uint64_t c, std::size_t a) const {
    auto x = decode(a);
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] = static_cast<Residue>(static_cast<unsigned __int128>(x[i]) * c % radix_[i]);
    return encode(x);
  }

  using Set = std::vector<char>;

  Set closure(Set start, const std::vector<std::size_t>& gens) const {
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < size_; ++i)
      if (start[i]) queue.push_back(i);
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t gidx : gens) {
        std::size_t y = add(x, gidx);
        if (!start[y]) {
          start[y] = 1;
          queue.push_back(y);
        }
      }
    }
    return start;
  }

  Set zero_set() const {
    Set s(size_, 0);
    s[0] = 1;
    return s;
  }

  /// A small generating set of a subgroup given by its elements.
  std::vector<std::size_t> small_generators(const Set& s) const {
    std::vector<std::size_t> gens;
    Set span = zero_set();
    for (std::size_t i = 0; i < size_; ++i)
      if (s[i] && !span[i]) {
        gens.push_back(i);
        span = closure(std::move(span), {i});
      }
    return gens;
  }

  Set sum(const Set& a, const Set& b) const { return closure(a, small_generators(b)); }

  Set image(std::uint64_t c, const Set& s) const {
    Set out(size_, 0);
    for (std::size_t i = 0; i < size_; ++i)
      if (s[i]) out[times(c, i)] = 1;
    return out;
  }

  Set meet(const Set& a, const Set& b) const {
    Set out(size_, 0);
    for (std::size_t i = 0; i < size_; ++i) out[i] = a[i] && b[i];
    return out;
  }

  Set level(int n) const {
    Set out(size_, 0);
    for (std::size_t i = 0; i < size_; ++i) {
      auto c = decode(i);
      bool inside = true;
      for (std::size_t j = 0; j < c.size(); ++j)
        if (g_.lambda()[j] > n && c[j] != 0) inside = false;
      out[i] = inside;
    }
    return out;
  }

  int log_size(const Set& s) const {
    std::size_t count = static_cast<std::size_t>(std::count(s.begin(), s.end(), 1));
    int e = 0;
    while (count > 1) {
      if (count % g_.p() != 0) throw Error("enumeration: subgroup order is not a power of p");
      count /= g_.p();
      ++e;
    }
    return e;
  }

 private:
  const GroupType& g_;
  std::vector<Residue> radix_;
  std::size_t size_ = 1;
};

}  // namespace

BruteInvariants brute_invariants(const GroupTypePtr& gp, std::span<const Element> generators) {
  const GroupType& g = *gp;
  const Enumerator en(g);
  const std::uint64_t p = g.p();
  const int top = g.max_exponent();

  std::vector<std::size_t> gens;
  for (const auto& x : generators) {
    require_same_group(gp, x.group_ptr());
    gens.push_back(en.encode(std::vector<Residue>(x.coeffs().data(), x.coeffs().data() + x.coeffs().size())));
  }
  const auto u = en.closure(en.zero_set(), gens);
  const auto whole = Enumerator::Set(en.size(), 1);

  std::vector<Enumerator::Set> p_power;  // p^r G, r = 0..N
  std::uint64_t c = 1;
  for (int r = 0; r <= top; ++r) {
    p_power.push_back(en.image(c, whole));
    c *= p;
  }

  BruteInvariants out;
  out.order_exp = en.log_size(whole);
  out.subgroup_exp = en.log_size(u);
  for (int r = 0; r <= top; ++r) out.meet_p_power_exp.push_back(en.log_size(en.meet(u, p_power[static_cast<std::size_t>(r)])));

  for (int n = 1; n <= top; ++n) {
    const auto level = en.level(n), lower = en.level(n - 1);
    const auto u_n = en.meet(u, level);
    out.levels.push_back({n, en.log_size(level), en.log_size(u_n), en.log_size(en.sum(lower, u_n)),
                          en.log_size(en.sum(lower, en.image(p, level)))});
    out.kappa.push_back(g.kappa(n));
  }

  const auto pu = en.image(p, u);
  out.s1_eligible = en.log_size(pu) == 0;
  out.f1_eligible = en.meet(p_power[1], u) == p_power[1];

  for (std::size_t i = 1; i < en.size(); ++i) {
    if (!u[i] || en.times(p, i) != 0) continue;
    int h = 0;
    while (h + 1 <= top && p_power[static_cast<std::size_t>(h + 1)][i]) ++h;
    ++out.socle_heights[h];
  }
  return out;
}

BruteInvariants brute_invariants(const SubgroupPresentation& u) {
  auto gens = u.generators();
  return brute_invariants(u.group_ptr(), gens);
}

Multiplicities BruteInvariants::f1_multiplicities() const {
  if (!f1_eligible) throw Error("brute invariants: pG is not contained in U");
  Multiplicities m;
  for (const auto& lv : levels) {
    int full = lv.lower_plus_sub_exp - lv.lower_plus_p_exp;
    int index_p = lv.level_exp - lv.lower_plus_sub_exp;
    if (full > 0) m[{lv.n, lv.n}] = full;
    if (index_p > 0) m[{lv.n, lv.n - 1}] = index_p;
  }
  return m;
}

Multiplicities BruteInvariants::s1_multiplicities() const {
  if (!s1_eligible) throw Error("brute invariants: pU is not zero");
  Multiplicities m;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    int one = meet_p_power_exp[i] - meet_p_power_exp[i + 1];
    int zero = kappa[i] - one;
    if (one > 0) m[{n, 1}] = one;
    if (zero > 0) m[{n, 0}] = zero;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Random instances and automorphisms

SubgroupPresentation random_instance(const InstanceSpec& spec) {
  GroupTypePtr g = make_group(spec.p, spec.lambda);
  Rng rng(spec.seed);
  const int k = g->rank();
  switch (spec.mode) {
    case InstanceMode::f1: {
      std::vector<Element> gens;
      for (int i = 0; i < k; ++i) gens.push_back(p_power_mul(1, Element::basis(g, i)));
      const auto extra = uniform(rng, static_cast<Residue>(k + 1));
      for (Residue t = 0; t < extra; ++t) gens.push_back(random_element(g, rng));
      return howellize(g, gens);
    }
    case InstanceMode::s1: {
      std::vector<Element> gens;
      const auto count = uniform(rng, static_cast<Residue>(k + 1));
      for (Residue t = 0; t < count; ++t) {
        ResidueVector c(k);
        for (int i = 0; i < k; ++i)
          c(i) = uniform(rng, g->p()) * g->ring().power(g->lambda()[static_cast<std::size_t>(i)] - 1);
        gens.push_back(Element::from_canonical(g, std::move(c)));
      }
      return howellize(g, gens);
    }
    case InstanceMode::ineligible: {
      for (int attempt = 0; attempt < 2000; ++attempt) {
        std::vector<Element> gens;
        const auto count = 1 + uniform(rng, static_cast<Residue>(k));
        for (Residue t = 0; t < count; ++t) gens.push_back(random_element(g, rng));
        SubgroupPresentation u = howellize(g, gens);
        if (!check_f1(u) && !check_s1(u)) return u;
      }
      throw Error("random_instance: no ineligible subgroup found for this group type");
    }
  }
  throw Error("random_instance: unknown mode");
}

Element apply_automorphism(const ResidueMatrix& a, const Element& x) {
  const auto& g = x.group();
  ResidueVector y = ResidueVector::Zero(g.rank());
  for (int j = 0; j < g.rank(); ++j) {
    const Residue m = g.coordinate_modulus(j);
    unsigned __int128 acc = 0;
    for (int i = 0; i < g.rank(); ++i) acc = (acc + static_cast<unsigned __int128>(x.coeffs()(i)) * a(i, j)) % m;
    y(j) = static_cast<Residue>(acc);
  }
  return Element::from_canonical(x.group_ptr(), std::move(y));
}

SubgroupPresentation apply_automorphism(const ResidueMatrix& a, const SubgroupPresentation& u) {
  std::vector<Element> images;
  for (const auto& x : u.generators()) images.push_back(apply_automorphism(a, x));
  return howellize(u.group_ptr(), images);
}

bool is_automorphism(const GroupTypePtr& g, const ResidueMatrix& a) {
  const int k = g->rank();
  if (a.rows() != k || a.cols() != k) return false;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int li = g->lambda()[static_cast<std::size_t>(i)], lj = g->lambda()[static_cast<std::size_t>(j)];
      if (a(i, j) % g->ring().power(std::max(0, lj - li)) != 0) return false;
    }
  std::vector<Element> images;
  for (int i = 0; i < k; ++i) images.push_back(apply_automorphism(a, Element::basis(g, i)));
  return howellize(g, images) == whole_group(g);
}

ResidueMatrix random_automorphism(const GroupTypePtr& g, std::uint64_t seed) {
  Rng rng(seed);
  const int k = g->rank();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ResidueMatrix a(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        const int li = g->lambda()[static_cast<std::size_t>(i)], lj = g->lambda()[static_cast<std::size_t>(j)];
        const int shift = std::max(0, lj - li);
        a(i, j) = g->ring().power(shift) * uniform(rng, g->ring().power(lj - shift));
      }
    if (is_automorphism(g, a)) return a;
  }
  throw Error("random_automorphism: no invertible matrix found");
}

}  // namespace picketlab
