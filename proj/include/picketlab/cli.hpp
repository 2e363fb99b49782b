#pragma once
// Command-line front end. Subcommands:
//
//   decompose      instances -> decompositions   (--mode auto|f1|s1, --seed, --verify)
//   verify         decompositions -> verdicts
//   invariants     instances -> multiplicities and eligibility
//   random         --spec '{"p":3,"lambda":[1,2],"mode":"s1"}' --count k --seed s
//   oracle-check   instances -> agreement with exhaustive enumeration
//   remark-family  --N n
//   operator       {"p","T","U"} -> Jordan basis adapted to U
//
// Input is one JSON document or JSON lines, from --input or stdin.
// Exit status: 0 success, 1 malformed input, 2 ineligible input,
// 3 a certificate or oracle check failed.

#include <iosfwd>
#include <string>
#include <vector>

namespace picketlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 1;
inline constexpr int kExitIneligible = 2;
inline constexpr int kExitRejected = 3;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace picketlab::cli
