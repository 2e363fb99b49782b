#include "picketlab/picket.hpp"

namespace picketlab {

std::string to_string(Mode m) { return m == Mode::f1 ? "f1" : "s1"; }

Picket picket_of(Mode mode, bool in_full, int level) {
  if (mode == Mode::f1) return {level, in_full ? level : level - 1};
  return {level, in_full ? 1 : 0};
}

Multiplicities count_levels(Mode mode, const std::vector<LeveledGenerator>& full,
                            const std::vector<LeveledGenerator>& partial) {
  Multiplicities m;
  for (const auto& g : full) ++m[picket_of(mode, true, g.level)];
  for (const auto& g : partial) ++m[picket_of(mode, false, g.level)];
  return m;
}

}  // namespace picketlab
