#pragma once
// Pairs (G, U) with pG contained in U: decomposition into pickets P^n_n and
// P^n_{n-1} along the filtration G_1 <= G_2 <= ... by isotypic layers.

#include "picketlab/picket.hpp"

namespace picketlab {

bool check_f1(const SubgroupPresentation& u);
/// A generator of pG outside U, if any.
std::optional<Element> f1_witness(const SubgroupPresentation& u);

/// mu^n_n = dim (G_{n-1} + U_n) / (G_{n-1} + pG_n) and
/// mu^n_{n-1} = dim G_n / (G_{n-1} + U_n).
Multiplicities multiplicities_f1(const SubgroupPresentation& u);

/// Builds the generator certificate level by level: at level n the images
/// of C_{n-1} in U_n/pG_n are extended to a basis B_n, the images of C'_{n-1}
/// complete it to a basis of G_n/pG_n, and new basis vectors are lifted to
/// G_n. Throws IneligibleError with an element of pG outside U.
PicketDecomposition decompose_f1(const SubgroupPresentation& u, const BasisChoice& choice = {});

/// Record of the descending induction over m = n-1, ..., 0 that
/// p^m <c_i> is the direct sum of the p^m c_i Z.
struct LiftLevel {
  int m;
  int summand_order_exp;    // sum of log_p |p^m c_i Z|
  int generated_order_exp;  // log_p |sum of p^m c_i Z|
  bool equals_p_power_of_whole;  // p^m <c_i> = p^m T
};

struct LiftWitness {
  int exponent;  // n, the common exponent of T
  std::vector<LiftLevel> levels;
  bool generates_whole;  // T = direct sum of the c_i Z
};

/// Dependent cosets; relation() holds coefficients with sum r_i b_i = 0.
class IndependenceViolation : public Error {
 public:
  IndependenceViolation(const std::string& what, ResidueVector relation)
      : Error(what), relation_(std::move(relation)) {}
  const ResidueVector& relation() const { return relation_; }

 private:
  ResidueVector relation_;
};

/// T a direct sum of copies of Z/(p^n), cosets an independent set in T/pT
/// (as F_p vectors) and liftings with c_i + pT = b_i. Confirms that the
/// liftings generate a direct sum, and T itself when the cosets form a basis.
LiftWitness lift_independent(const GroupTypePtr& isotypic, const std::vector<ResidueVector>& cosets,
                             const std::vector<Element>& liftings);

}  // namespace picketlab
