#include "picketlab/operator_view.hpp"

#include "picketlab/decomp_f1.hpp"
#include "picketlab/decomp_s1.hpp"
#include "picketlab/fp_basis.hpp"

#include <algorithm>

namespace picketlab {

namespace {

bool is_zero(const ResidueMatrix& m) { return (m.array() == 0).all(); }

ResidueMatrix power(const ChainRing& field, const ResidueMatrix& t, int r) {
  ResidueMatrix out = identity(t.rows());
  for (int i = 0; i < r; ++i) out = multiply(field, out, t);
  return out;
}

/// Basis of {x : a x = 0} in reduced echelon order.
std::vector<ResidueVector> null_space(const ChainRing& field, const ResidueMatrix& a) {
  ResidueMatrix k = left_kernel(field, a.transpose());
  std::vector<ResidueVector> out;
  for (Eigen::Index i = 0; i < k.rows(); ++i) out.push_back(k.row(i));
  return out;
}

int span_rank(const ChainRing& field, const std::vector<ResidueVector>& vs, Eigen::Index dim) {
  if (vs.empty()) return 0;
  return rank(field, rows_to_matrix(vs, dim));
}

}  // namespace

ResidueVector apply(const ChainRing& field, const ResidueMatrix& t, const ResidueVector& v) {
  ResidueVector out = ResidueVector::Zero(t.rows());
  for (Eigen::Index i = 0; i < t.rows(); ++i)
    for (Eigen::Index j = 0; j < t.cols(); ++j) out(i) = field.add(out(i), field.mul(t(i, j), v(j)));
  return out;
}

OperatorModes check_modes(const OperatorPair& op) {
  const ChainRing field(op.p, 1);
  const int n = op.dim();
  if (op.t.cols() != n) throw Error("operator matrix is not square");
  if (!is_zero(power(field, op.t, n))) throw Error("operator is not nilpotent");
  IncrementalBasis u(op.p, n);
  for (const auto& v : op.u_basis) {
    if (v.size() != n) throw Error("subspace vector has the wrong length");
    u.insert(v);
  }
  OperatorModes modes{true, true};
  for (const auto& v : op.u_basis) {
    ResidueVector tv = apply(field, op.t, v);
    if (!u.spans(tv)) throw Error("subspace is not invariant under the operator");
    if (pivot_column(tv) >= 0) modes.s1 = false;
  }
  for (int j = 0; j < n; ++j) {
    ResidueVector col = op.t.col(j).transpose();
    if (!u.spans(col)) modes.f1 = false;
  }
  return modes;
}

JordanBasis jordan_basis(std::uint64_t p, const ResidueMatrix& t) {
  const ChainRing field(p, 1);
  const Eigen::Index n = t.rows();
  int index = 0;
  while (!is_zero(power(field, t, index))) ++index;

  std::vector<std::vector<ResidueVector>> kernels;  // ker T^r, r = 0..index
  for (int r = 0; r <= index; ++r) kernels.push_back(null_space(field, power(field, t, r)));

  std::vector<std::vector<ResidueVector>> chains;
  for (int r = index; r >= 1; --r) {
    IncrementalBasis basis(p, n);
    for (const auto& v : kernels[static_cast<std::size_t>(r - 1)]) basis.insert(v);
    for (const auto& chain : chains) {
      const auto depth = chain.size() - static_cast<std::size_t>(r);  // T^depth g sits in ker T^r minus ker T^{r-1}
      if (!basis.insert(chain[depth])) throw Error("internal: Jordan chains are dependent");
    }
    for (const auto& v : kernels[static_cast<std::size_t>(r)]) {
      if (!basis.insert(v)) continue;
      std::vector<ResidueVector> chain{v};
      for (int s = 1; s < r; ++s) chain.push_back(apply(field, t, chain.back()));
      chains.push_back(std::move(chain));
    }
  }

  JordanBasis out{ResidueMatrix(n, n), {}};
  Eigen::Index col = 0;
  for (const auto& chain : chains) {
    out.block_sizes.push_back(static_cast<int>(chain.size()));
    for (const auto& v : chain) out.q.col(col++) = v.transpose();
  }
  if (col != n) throw Error("internal: Jordan basis incomplete");
  return out;
}

std::vector<int> jordan_type_by_rank(std::uint64_t p, const ResidueMatrix& t) {
  const ChainRing field(p, 1);
  std::vector<int> ranks{static_cast<int>(t.rows())};
  while (ranks.back() > 0) ranks.push_back(rank(field, power(field, t, static_cast<int>(ranks.size()))));
  // at_least[r] = number of blocks of size >= r
  std::vector<int> sizes;
  for (std::size_t r = 1; r < ranks.size(); ++r) {
    int at_least = ranks[r - 1] - ranks[r];
    int next = r + 1 < ranks.size() ? ranks[r] - ranks[r + 1] : 0;
    for (int c = 0; c < at_least - next; ++c) sizes.push_back(static_cast<int>(r));
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

ResidueMatrix jordan_matrix(const std::vector<int>& block_sizes) {
  Eigen::Index n = 0;
  for (int s : block_sizes) n += s;
  ResidueMatrix j = ResidueMatrix::Zero(n, n);
  Eigen::Index start = 0;
  for (int s : block_sizes) {
    for (int i = 1; i < s; ++i) j(start + i, start + i - 1) = 1;
    start += s;
  }
  return j;
}

Element encode(const ModulePair& mp, const ResidueVector& v) {
  const GroupTypePtr& g = mp.subgroup.group_ptr();
  const ChainRing field(g->p(), 1);
  ResidueVector coords = (multiply(field, inverse(field, mp.basis.q), v.transpose())).transpose();
  std::vector<std::int64_t> input;
  Eigen::Index start = 0;
  for (int s : mp.basis.block_sizes) {
    Residue a = 0;
    for (int t = s - 1; t >= 0; --t) a = a * g->p() + coords(start + t);
    input.push_back(static_cast<std::int64_t>(a));
    start += s;
  }
  return Element(g, input);
}

ResidueVector pull_back(const ModulePair& mp, const Element& x) {
  const GroupType& g = x.group();
  const ChainRing field(g.p(), 1);
  const auto coords = x.input_coeffs();
  ResidueVector v = ResidueVector::Zero(mp.basis.q.rows());
  Eigen::Index start = 0;
  for (std::size_t b = 0; b < mp.basis.block_sizes.size(); ++b) {
    Residue a = coords[b];
    for (int t = 0; t < mp.basis.block_sizes[b]; ++t) {
      ResidueVector col = mp.basis.q.col(start + t).transpose();
      axpy(field, a % g.p(), col, v);
      a /= g.p();
    }
    start += mp.basis.block_sizes[b];
  }
  return v;
}

ModulePair to_module_pair(const OperatorPair& op) {
  const OperatorModes modes = check_modes(op);
  const ChainRing field(op.p, 1);
  JordanBasis jb = jordan_basis(op.p, op.t);
  GroupTypePtr g = make_group(op.p, jb.block_sizes);
  ModulePair mp{zero_subgroup(g), std::move(jb)};

  std::vector<Element> gens;
  for (const auto& u : op.u_basis)
    for (ResidueVector v = u; pivot_column(v) >= 0; v = apply(field, op.t, v)) gens.push_back(encode(mp, v));
  if (modes.f1)
    for (int i = 0; i < g->rank(); ++i) gens.push_back(p_power_mul(1, Element::basis(g, i)));
  mp.subgroup = howellize(g, gens);
  return mp;
}

JordanCertificate jordan_certificate(const OperatorPair& op, Mode mode) {
  const OperatorModes modes = check_modes(op);
  if (mode == Mode::s1 && !modes.s1) throw IneligibleError("operator pair is not in s1: TU is not zero", {});
  if (mode == Mode::f1 && !modes.f1) throw IneligibleError("operator pair is not in f1: T(V) is not contained in U", {});

  const ModulePair mp = to_module_pair(op);
  const PicketDecomposition d = mode == Mode::f1 ? decompose_f1(mp.subgroup) : decompose_s1(mp.subgroup);

  JordanCertificate cert{ResidueMatrix(op.dim(), op.dim()), {}, {}};
  Eigen::Index col = 0;
  auto emit = [&](const LeveledGenerator& c, bool in_full) {
    cert.block_sizes.push_back(c.level);
    for (int t = 0; t < c.level; ++t) {
      cert.q.col(col) = pull_back(mp, p_power_mul(t, c.generator)).transpose();
      bool designated = mode == Mode::f1 ? (in_full || t >= 1) : (in_full && t == c.level - 1);
      if (designated) cert.u_columns.push_back(static_cast<int>(col));
      ++col;
    }
  };
  for (const auto& c : d.full) emit(c, true);
  for (const auto& c : d.partial) emit(c, false);

  if (std::string failure = check_jordan_certificate(op, mode, cert); !failure.empty())
    throw Error("internal: Jordan certificate check failed: " + failure);
  return cert;
}

std::string check_jordan_certificate(const OperatorPair& op, Mode mode, const JordanCertificate& cert) {
  const ChainRing field(op.p, 1);
  const Eigen::Index n = op.dim();
  if (cert.q.rows() != n || cert.q.cols() != n) return "Q has the wrong shape";
  if (rank(field, cert.q) != n) return "Q is singular";
  const ResidueMatrix conj = multiply(field, multiply(field, inverse(field, cert.q), op.t), cert.q);
  const ResidueMatrix j = jordan_matrix(cert.block_sizes);
  if (j.rows() != n || conj != j) return "Q^-1 T Q is not the stated Jordan matrix";

  std::vector<ResidueVector> designated;
  for (int c : cert.u_columns) designated.push_back(cert.q.col(c).transpose());
  std::vector<ResidueVector> both = designated;
  both.insert(both.end(), op.u_basis.begin(), op.u_basis.end());
  const int du = span_rank(field, op.u_basis, n);
  if (span_rank(field, designated, n) != du || span_rank(field, both, n) != du)
    return "designated columns do not span U";

  if (mode == Mode::s1) {
    for (const auto& v : designated)
      if (pivot_column(apply(field, op.t, v)) >= 0) return "designated column outside ker T";
  } else {
    std::vector<ResidueVector> with_image = designated;
    for (Eigen::Index c = 0; c < n; ++c) with_image.push_back(op.t.col(c).transpose());
    if (span_rank(field, with_image, n) != span_rank(field, designated, n))
      return "designated columns do not contain T(V)";
  }
  return {};
}

}  // namespace picketlab
