#include "picketlab/howell.hpp"

#include <algorithm>

namespace picketlab {

namespace {

bool is_zero(const ResidueVector& v) {
  return std::all_of(v.data(), v.data() + v.size(), [](Residue a) { return a == 0; });
}

}  // namespace

Eigen::Index pivot_column(const ResidueVector& row) {
  for (Eigen::Index j = 0; j < row.size(); ++j)
    if (row(j) != 0) return j;
  return -1;
}

ResidueMatrix howell_form(const ChainRing& ring, const ResidueMatrix& rows) {
  const Eigen::Index cols = rows.cols();
  const int n = ring.exponent();
  std::vector<ResidueVector> work;
  work.reserve(static_cast<std::size_t>(rows.rows()));
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    ResidueVector r = rows.row(i);
    for (Eigen::Index j = 0; j < cols; ++j) r(j) %= ring.modulus();
    if (!is_zero(r)) work.push_back(std::move(r));
  }

  std::vector<ResidueVector> echelon;
  std::vector<int> pivot_val;
  std::vector<Eigen::Index> pivot_col;
  for (Eigen::Index col = 0; col < cols && !work.empty(); ++col) {
    // lowest valuation in this column wins; ties go to the earliest row
    std::size_t best = work.size();
    int best_val = n;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (work[i](col) == 0) continue;
      int v = ring.valuation(work[i](col));
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
    if (best == work.size()) continue;

    ResidueVector pivot = std::move(work[best]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
    const Residue unit = pivot(col) / ring.power(best_val);
    pivot = scaled(ring, ring.inverse(unit), pivot);

    for (auto& r : work) {
      if (r(col) == 0) continue;
      Residue q = r(col) / ring.power(best_val);
      axpy(ring, ring.neg(q), pivot, r);
    }
    if (best_val > 0) {
      ResidueVector closure = scaled(ring, ring.power(n - best_val), pivot);
      if (!is_zero(closure)) work.push_back(std::move(closure));
    }
    work.erase(std::remove_if(work.begin(), work.end(), is_zero), work.end());

    echelon.push_back(std::move(pivot));
    pivot_val.push_back(best_val);
    pivot_col.push_back(col);
  }

  // reduce entries above each pivot into [0, p^v)
  for (std::size_t i = 0; i < echelon.size(); ++i) {
    const Residue piv = ring.power(pivot_val[i]);
    for (std::size_t h = 0; h < i; ++h) {
      Residue q = echelon[h](pivot_col[i]) / piv;
      if (q != 0) axpy(ring, ring.neg(q), echelon[i], echelon[h]);
    }
  }
  return rows_to_matrix(echelon, cols);
}

ResidueVector howell_reduce(const ChainRing& ring, const ResidueMatrix& howell, ResidueVector x) {
  for (Eigen::Index i = 0; i < howell.rows(); ++i) {
    ResidueVector row = howell.row(i);
    Eigen::Index col = pivot_column(row);
    Residue q = x(col) / row(col);
    if (q != 0) axpy(ring, ring.neg(q), row, x);
  }
  return x;
}

bool in_span(const ChainRing& ring, const ResidueMatrix& howell, const ResidueVector& x) {
  return is_zero(howell_reduce(ring, howell, x));
}

int span_order_exp(const ChainRing& ring, const ResidueMatrix& howell) {
  int e = 0;
  for (Eigen::Index i = 0; i < howell.rows(); ++i) {
    ResidueVector row = howell.row(i);
    e += ring.exponent() - ring.valuation(row(pivot_column(row)));
  }
  return e;
}

ResidueMatrix stack(const ResidueMatrix& top, const ResidueMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw Error("stack: column mismatch");
  ResidueMatrix out(top.rows() + bottom.rows(), top.cols());
  out << top, bottom;
  return out;
}

ResidueMatrix rows_to_matrix(const std::vector<ResidueVector>& rows, Eigen::Index cols) {
  ResidueMatrix out(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = rows[i];
  return out;
}

ResidueMatrix left_kernel(const ChainRing& ring, const ResidueMatrix& a) {
  const Eigen::Index m = a.rows(), k = a.cols();
  ResidueMatrix aug(m, k + m);
  aug << a, identity(m);
  ResidueMatrix h = howell_form(ring, aug);
  std::vector<ResidueVector> kernel;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    ResidueVector row = h.row(i);
    if (pivot_column(row) >= k) kernel.push_back(row.tail(m));
  }
  return howell_form(ring, rows_to_matrix(kernel, m));
}

ResidueMatrix span_intersection(const ChainRing& ring, const ResidueMatrix& a, const ResidueMatrix& b) {
  // Zassenhaus: rows (a | a) and (b | 0); the rows with vanishing left half
  // carry the intersection in their right half.
  const Eigen::Index k = a.cols();
  if (b.cols() != k) throw Error("intersection: column mismatch");
  ResidueMatrix aug = ResidueMatrix::Zero(a.rows() + b.rows(), 2 * k);
  aug.topLeftCorner(a.rows(), k) = a;
  aug.topRightCorner(a.rows(), k) = a;
  aug.bottomLeftCorner(b.rows(), k) = b;
  ResidueMatrix h = howell_form(ring, aug);
  std::vector<ResidueVector> meet;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    ResidueVector row = h.row(i);
    if (pivot_column(row) >= k) meet.push_back(row.tail(k));
  }
  return howell_form(ring, rows_to_matrix(meet, k));
}

int rank(const ChainRing& field, const ResidueMatrix& a) {
  if (field.exponent() != 1) throw Error("rank requires a prime field");
  return static_cast<int>(howell_form(field, a).rows());
}

ResidueMatrix inverse(const ChainRing& field, const ResidueMatrix& a) {
  if (field.exponent() != 1) throw Error("inverse requires a prime field");
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw Error("inverse of a non-square matrix");
  ResidueMatrix aug(n, 2 * n);
  aug << a, identity(n);
  ResidueMatrix h = howell_form(field, aug);
  if (h.rows() != n || pivot_column(h.row(n - 1)) != n - 1) throw Error("matrix is singular");
  return h.rightCols(n);
}

}  // namespace picketlab
