#pragma once
// Howell normal form over Z/(p^N).
//
// The rows of the result span the same submodule as the input. Pivots are
// powers of p, pivot columns strictly increase, entries above a pivot p^v
// lie in [0, p^v), and the row set satisfies the Howell property: every
// vector of the span whose first j entries vanish is a combination of the
// rows whose pivot lies at or after column j. The form is unique, so two
// matrices span the same submodule iff their Howell forms are identical.
// Over F_p (N = 1) this is the reduced row echelon form.

#include "picketlab/ring.hpp"

#include <vector>

namespace picketlab {

ResidueMatrix howell_form(const ChainRing& ring, const ResidueMatrix& rows);

/// Index of the first nonzero entry, or -1.
Eigen::Index pivot_column(const ResidueVector& row);

/// Canonical remainder of x modulo the span of a Howell matrix. The
/// remainder is zero iff x lies in the span.
ResidueVector howell_reduce(const ChainRing& ring, const ResidueMatrix& howell, ResidueVector x);

bool in_span(const ChainRing& ring, const ResidueMatrix& howell, const ResidueVector& x);

/// log_p of the number of elements of the row span.
int span_order_exp(const ChainRing& ring, const ResidueMatrix& howell);

/// Howell basis of {c : c * a = 0}.
ResidueMatrix left_kernel(const ChainRing& ring, const ResidueMatrix& a);

/// Howell basis of the intersection of two row spans.
ResidueMatrix span_intersection(const ChainRing& ring, const ResidueMatrix& a, const ResidueMatrix& b);

ResidueMatrix stack(const ResidueMatrix& top, const ResidueMatrix& bottom);
ResidueMatrix rows_to_matrix(const std::vector<ResidueVector>& rows, Eigen::Index cols);

// Field helpers; the ring must have exponent 1.
int rank(const ChainRing& field, const ResidueMatrix& a);
/// Throws if a is singular.
ResidueMatrix inverse(const ChainRing& field, const ResidueMatrix& a);

}  // namespace picketlab
