#pragma once
// Cross-check of the linear-algebra pipeline against exhaustive enumeration.

#include "picketlab/certify.hpp"

#include <string>
#include <vector>

namespace picketlab {

struct OracleReport {
  bool agree = true;
  int compared = 0;  // number of individual quantities compared
  std::vector<std::string> mismatches;
};

/// Compares subgroup order, eligibility, every quotient dimension the
/// multiplicity formulas use, the formula multiplicities, and the
/// multiplicities and acceptance of a constructed certificate.
/// Throws if |G| is too large to enumerate.
OracleReport oracle_check(const SubgroupPresentation& u);

}  // namespace picketlab
