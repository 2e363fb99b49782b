#pragma once
// Shared helpers for the test binaries. The brute-force span here uses
// only Element arithmetic, never the Howell machinery.

#include "picketlab/certify.hpp"
#include "picketlab/decomp_f1.hpp"
#include "picketlab/decomp_s1.hpp"
#include "picketlab/operator_view.hpp"

#include <deque>
#include <initializer_list>
#include <set>
#include <tuple>
#include <vector>

namespace picketlab::testing {

using Coeffs = std::vector<Residue>;

inline SubgroupPresentation sub(const GroupTypePtr& g, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<Element> gens;
  for (auto r : rows) gens.emplace_back(g, r);
  return howellize(g, gens);
}

inline Multiplicities mults(std::initializer_list<std::tuple<int, int, int>> entries) {
  Multiplicities m;
  for (auto [n, l, c] : entries) m[{n, l}] = c;
  return m;
}

/// All elements of <gens>, as input-order coefficient vectors.
inline std::set<Coeffs> brute_span(const GroupTypePtr& g, const std::vector<Element>& gens) {
  std::set<Coeffs> seen{Element::zero(g).input_coeffs()};
  std::deque<Element> queue{Element::zero(g)};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (const auto& y : gens) {
      Element z = add(x, y);
      if (seen.insert(z.input_coeffs()).second) queue.push_back(z);
    }
  }
  return seen;
}

inline std::vector<Element> all_elements(const GroupTypePtr& g) {
  std::vector<Element> gens;
  for (int i = 0; i < g->rank(); ++i) gens.push_back(Element::basis(g, i));
  std::vector<Element> out;
  for (const auto& c : brute_span(g, gens)) {
    std::vector<std::int64_t> v(c.begin(), c.end());
    out.emplace_back(g, v);
  }
  return out;
}

/// A random exponent list with sum at most `budget`.
inline std::vector<int> random_lambda(Rng& rng, int budget, int max_rank = 4, int max_exp = 4) {
  std::vector<int> lambda;
  const int rank = 1 + static_cast<int>(uniform(rng, static_cast<Residue>(max_rank)));
  int used = 0;
  for (int i = 0; i < rank && used < budget; ++i) {
    int room = std::min(max_exp, budget - used);
    int e = 1 + static_cast<int>(uniform(rng, static_cast<Residue>(room)));
    lambda.push_back(e);
    used += e;
  }
  return lambda;
}

/// Largest exponent sum keeping p^sum <= 2^bits.
inline int budget_for(std::uint64_t p, int bits) {
  int e = 0;
  std::uint64_t size = 1;
  while (size * p <= (std::uint64_t{1} << bits)) {
    size *= p;
    ++e;
  }
  return e;
}


/// A random partition of dim.
inline std::vector<int> random_partition(Rng& rng, int dim) {
  std::vector<int> parts;
  while (dim > 0) {
    int s = 1 + static_cast<int>(uniform(rng, static_cast<Residue>(dim)));
    parts.push_back(s);
    dim -= s;
  }
  return parts;
}

inline ResidueMatrix random_invertible(Rng& rng, const ChainRing& field, Eigen::Index n) {
  for (;;) {
    ResidueMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = uniform(rng, field.prime());
    if (rank(field, m) == n) return m;
  }
}

/// T = P J P^-1 for a random Jordan type. With `s1` the subspace lies in
/// ker T; otherwise it contains T(V).
inline OperatorPair random_operator(Rng& rng, std::uint64_t p, int dim, bool s1) {
  const ChainRing field(p, 1);
  const auto parts = random_partition(rng, dim);
  const ResidueMatrix j = jordan_matrix(parts);
  const ResidueMatrix q = random_invertible(rng, field, dim);
  OperatorPair op{p, multiply(field, multiply(field, q, j), inverse(field, q)), {}};
  const auto count = uniform(rng, static_cast<Residue>(dim + 1));
  for (Residue c = 0; c < count; ++c) {
    ResidueVector chain = ResidueVector::Zero(dim);
    if (s1) {
      Eigen::Index end = 0;
      for (int s : parts) {
        end += s;
        chain(end - 1) = uniform(rng, p);  // J kills the last vector of each block
      }
    } else {
      for (Eigen::Index i = 0; i < dim; ++i) chain(i) = uniform(rng, p);
    }
    op.u_basis.push_back(multiply(field, q, chain.transpose()).transpose());
  }
  if (!s1)
    for (Eigen::Index c = 0; c < dim; ++c) op.u_basis.push_back(op.t.col(c).transpose());
  return op;
}

}  // namespace picketlab::testing
