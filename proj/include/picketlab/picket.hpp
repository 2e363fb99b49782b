#pragma once
// Pickets P^n_l = (Z/(p^n), p^{n-l} Z/(p^n)) and certified decompositions.

#include "picketlab/presentation.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace picketlab {

struct Picket {
  int n;  // exponent of the cyclic group
  int l;  // exponent of the subgroup
  auto operator<=>(const Picket&) const = default;
};

/// Zero counts are never stored.
using Multiplicities = std::map<Picket, int>;

/// f1: p(G/U) = 0, pickets P^n_n and P^n_{n-1}.
/// s1: pU = 0, pickets P^n_1 and P^n_0.
enum class Mode { f1, s1 };

std::string to_string(Mode m);

struct LeveledGenerator {
  int level;  // n: the generator has order p^n
  Element generator;
};

/// G = direct sum of the cyclic groups generated by `full` and `partial`.
/// In f1 mode U = sum over full of <g> + sum over partial of <p g>; in s1
/// mode U = sum over full of <p^{n-1} g> and partial contributes nothing.
struct PicketDecomposition {
  Mode mode;
  Multiplicities multiplicities;
  std::vector<LeveledGenerator> full;     // C
  std::vector<LeveledGenerator> partial;  // C'
};

/// The picket a certificate generator stands for.
Picket picket_of(Mode mode, bool in_full, int level);
Multiplicities count_levels(Mode mode, const std::vector<LeveledGenerator>& full,
                            const std::vector<LeveledGenerator>& partial);

/// Controls the free choices of basis extension and preimages. Without a
/// seed candidates are scanned in Howell row order and lifts are canonical
/// reduced representatives; a seed randomizes both.
struct BasisChoice {
  std::optional<std::uint64_t> seed;
};

/// Input outside the requested class; witnesses demonstrate the failure.
class IneligibleError : public WitnessError {
 public:
  using WitnessError::WitnessError;
};

}  // namespace picketlab
