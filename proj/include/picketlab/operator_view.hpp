#pragma once
// Nilpotent operators over F_p with an invariant subspace, viewed as module
// pairs over F_p[T] localized at T. Chain coordinates encode a T^j g as the
// residue a p^j, which turns the operator into a finite abelian p-group with
// p acting as T. For TU = 0 and T(V) in U this identification matches the
// socle and top layers exactly, so picket certificates pull back to Jordan
// bases adapted to U.
//
// Vectors are stored as row vectors; T acts on columns: (T v)_i = sum_j T_ij v_j.

#include "picketlab/picket.hpp"

#include <vector>

namespace picketlab {

struct OperatorPair {
  std::uint64_t p;
  ResidueMatrix t;                      // dim x dim over F_p
  std::vector<ResidueVector> u_basis;   // spans U
  int dim() const { return static_cast<int>(t.rows()); }
};

struct OperatorModes {
  bool s1;  // TU = 0
  bool f1;  // T(V) in U
};

/// Throws if T is not nilpotent or U is not T-invariant.
OperatorModes check_modes(const OperatorPair& op);

ResidueVector apply(const ChainRing& field, const ResidueMatrix& t, const ResidueVector& v);

/// Columns of `q` are Jordan chains v, Tv, ..., T^{s-1}v, laid out
/// contiguously in the order of `block_sizes`.
struct JordanBasis {
  ResidueMatrix q;
  std::vector<int> block_sizes;
};

/// Kernel-chain construction from bases of ker T^r; the lowest-index pivot
/// is preferred throughout.
JordanBasis jordan_basis(std::uint64_t p, const ResidueMatrix& t);

/// Block sizes (descending) from rank T^{r-1} - rank T^r alone.
std::vector<int> jordan_type_by_rank(std::uint64_t p, const ResidueMatrix& t);

/// Nilpotent Jordan matrix with ones on the subdiagonal of each block.
ResidueMatrix jordan_matrix(const std::vector<int>& block_sizes);

struct ModulePair {
  SubgroupPresentation subgroup;  // group: lambda = block sizes in chain order
  JordanBasis basis;
};

ModulePair to_module_pair(const OperatorPair& op);

/// Chain coordinates of v as a group element.
Element encode(const ModulePair& mp, const ResidueVector& v);
/// The vector sum_t d_t T^t g_b for coordinate digits d_t.
ResidueVector pull_back(const ModulePair& mp, const Element& x);

struct JordanCertificate {
  ResidueMatrix q;
  std::vector<int> block_sizes;
  std::vector<int> u_columns;  // ascending
};

/// Runs the requested decomposer on the module pair and pulls the picket
/// certificate back. Every certificate invariant is checked by explicit
/// matrix computation before returning.
JordanCertificate jordan_certificate(const OperatorPair& op, Mode mode);

/// Empty string on success, otherwise the first failed property.
std::string check_jordan_certificate(const OperatorPair& op, Mode mode, const JordanCertificate& cert);

}  // namespace picketlab
