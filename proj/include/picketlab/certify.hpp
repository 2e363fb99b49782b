#pragma once
// Independent checks: certificate verification, invariants by exhaustive
// enumeration, and random instance/automorphism generation.

#include "picketlab/picket.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace picketlab {

enum class FailureKind {
  none,
  wrong_group,
  level_mismatch,     // witness: the generator whose order differs from its label
  not_generating,     // witness: a standard generator outside the span
  not_independent,    // witness: all generators; they span G but sum of orders exceeds |G|
  subgroup_mismatch,  // witness: an element in exactly one of U and the certified subgroup
  multiplicity_mismatch,
};

std::string to_string(FailureKind k);

struct Verdict {
  bool accepted = true;
  FailureKind kind = FailureKind::none;
  std::string description;
  std::vector<Element> witness;
};

Verdict verify_certificate(const SubgroupPresentation& u, const PicketDecomposition& d);

/// Invariants of (G, U) computed by enumerating elements; no linear algebra.
/// All sizes are log_p of a cardinality.
struct BruteInvariants {
  struct Level {
    int n;
    int level_exp;           // |G_n|
    int subgroup_exp;        // |U_n|
    int lower_plus_sub_exp;  // |G_{n-1} + U_n|
    int lower_plus_p_exp;    // |G_{n-1} + pG_n|
  };
  int order_exp = 0;  // |G|
  int subgroup_exp = 0;  // |U|
  std::vector<Level> levels;            // n = 1..N
  std::vector<int> meet_p_power_exp;    // |U meet p^r G|, r = 0..N
  std::map<int, int> socle_heights;     // height -> # nonzero x in U with px = 0
  bool f1_eligible = false;
  bool s1_eligible = false;
  std::vector<int> kappa;  // kappa_n, index n = 1..N at n - 1

  /// Both recomputed from the counts above, not from any decomposition.
  Multiplicities f1_multiplicities() const;
  Multiplicities s1_multiplicities() const;
};

inline constexpr int kEnumerationGuardBits = 14;

/// Throws if |G| exceeds 2^14.
BruteInvariants brute_invariants(const GroupTypePtr& g, std::span<const Element> generators);
BruteInvariants brute_invariants(const SubgroupPresentation& u);

enum class InstanceMode { f1, s1, ineligible };
std::string to_string(InstanceMode m);

struct InstanceSpec {
  std::uint64_t p;
  std::vector<int> lambda;
  InstanceMode mode;
  std::uint64_t seed;
};

/// Deterministic in the seed. Ineligible instances are rejection-sampled
/// and throw when none is found (e.g. when every exponent is 1).
SubgroupPresentation random_instance(const InstanceSpec& spec);

/// Row-vector convention: x maps to x A, so entry (i, j) is a map
/// Z/p^{lambda_i} -> Z/p^{lambda_j} and is divisible by
/// p^{max(0, lambda_j - lambda_i)}. Entries of column j lie in [0, p^{lambda_j}).
ResidueMatrix random_automorphism(const GroupTypePtr& g, std::uint64_t seed);
bool is_automorphism(const GroupTypePtr& g, const ResidueMatrix& a);
Element apply_automorphism(const ResidueMatrix& a, const Element& x);
SubgroupPresentation apply_automorphism(const ResidueMatrix& a, const SubgroupPresentation& u);

}  // namespace picketlab
