#pragma once
// Pairs (G, U) with pU = 0: G = H + H' with H pure, H[p] = U, giving
// (G, U) = (H, U) + (H', 0) and pickets P^n_1, P^n_0.

#include "picketlab/picket.hpp"

namespace picketlab {

bool check_s1(const SubgroupPresentation& u);
/// A generator x of U with px != 0, if any.
std::optional<Element> s1_witness(const SubgroupPresentation& u);

struct ChainTop {
  Element top;  // x with p^height x a basis vector of U
  int height;
};

struct PureHull {
  SubgroupPresentation hull;  // H
  std::vector<ChainTop> chain_tops;
};

/// Takes a basis of U adapted to the filtration U meet p^h G (greedy from
/// the largest h down) and divides each basis vector of height h by p^h.
/// The result is verified to be pure with H[p] = U.
PureHull pure_hull(const SubgroupPresentation& u, const BasisChoice& choice = {});

/// Generators of a complement H' with G = H + H' (direct), chosen among
/// the standard generators so that all socle vectors stay independent.
std::vector<LeveledGenerator> complement_generators(const PureHull& h, const BasisChoice& choice = {});
/// H' as a subgroup; the direct sum G = H + H' is verified.
SubgroupPresentation complement(const PureHull& h, const BasisChoice& choice = {});

PicketDecomposition decompose_s1(const SubgroupPresentation& u, const BasisChoice& choice = {});

/// mult(P^n_1) = dim (U meet p^{n-1}G) / (U meet p^n G),
/// mult(P^n_0) = kappa_n - mult(P^n_1).
Multiplicities multiplicities_s1(const SubgroupPresentation& u);

/// G = sum over n = 1..N of Z/(p^n) y_n with U = <y_1 - p^{n-1} y_n : n >= 2>.
/// The coset y_1 + U has height N - 1 in G/U.
struct RemarkReport {
  int n;
  SubgroupPresentation subgroup;
  int coset_height;
  PicketDecomposition decomposition;
};

RemarkReport remark_family(int n, std::uint64_t p = 2);

/// Height of x + U in G/U: the largest r with x in p^r G + U. Throws on x in U.
int coset_height(const Element& x, const SubgroupPresentation& u);

}  // namespace picketlab
