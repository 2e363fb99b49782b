#include "picketlab/howell.hpp"
#include "picketlab/group.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

using namespace picketlab;

namespace {

ResidueMatrix matrix(std::initializer_list<std::initializer_list<Residue>> rows) {
  ResidueMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (auto r : rows) {
    Eigen::Index j = 0;
    for (Residue v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

ResidueMatrix random_matrix(const ChainRing& ring, Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  ResidueMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      // bias towards non-units so valuations vary
      Residue a = uniform(rng, ring.modulus());
      m(i, j) = ring.mul(a, ring.power(static_cast<int>(uniform(rng, static_cast<Residue>(ring.exponent())))));
    }
  return m;
}

using Vec = std::vector<Residue>;

/// Additive closure of the rows: the Z-span, independent of any normal form.
std::set<Vec> closure(const ChainRing& ring, const ResidueMatrix& m) {
  const auto cols = static_cast<std::size_t>(m.cols());
  std::set<Vec> seen{Vec(cols, 0)};
  std::vector<Vec> frontier{Vec(cols, 0)};
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier)
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Vec w = v;
        for (std::size_t j = 0; j < cols; ++j) w[j] = ring.add(w[j], m(i, static_cast<Eigen::Index>(j)));
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return seen;
}

int log_p(std::uint64_t p, std::size_t n) {
  int e = 0;
  while (n > 1) {
    n /= p;
    ++e;
  }
  return e;
}

ResidueVector row_of(const Vec& v) {
  ResidueVector r(static_cast<Eigen::Index>(v.size()));
  for (std::size_t j = 0; j < v.size(); ++j) r(static_cast<Eigen::Index>(j)) = v[j];
  return r;
}

}  // namespace

TEST(ChainRing, Arithmetic) {
  ChainRing r(3, 2);
  EXPECT_EQ(r.modulus(), 9u);
  EXPECT_EQ(r.reduce(-1), 8u);
  EXPECT_EQ(r.reduce(-10), 8u);
  EXPECT_EQ(r.add(5, 7), 3u);
  EXPECT_EQ(r.sub(2, 5), 6u);
  EXPECT_EQ(r.mul(4, 7), 1u);
  EXPECT_EQ(r.neg(0), 0u);
  EXPECT_EQ(r.valuation(0), 2);
  EXPECT_EQ(r.valuation(3), 1);
  EXPECT_EQ(r.valuation(6), 1);
  EXPECT_EQ(r.valuation(5), 0);
  for (Residue a = 1; a < 9; ++a)
    if (a % 3 != 0) EXPECT_EQ(r.mul(a, r.inverse(a)), 1u);
}

TEST(ChainRing, RejectsBadParameters) {
  EXPECT_THROW(ChainRing(4, 1), Error);
  EXPECT_THROW(ChainRing(1, 1), Error);
  EXPECT_THROW(ChainRing(2, 0), Error);
  EXPECT_THROW(ChainRing(2, 63), Error);
  EXPECT_NO_THROW(ChainRing(2, 62));
}

TEST(ChainRing, GuardBitsFromEnvironment) {
  setenv("PICKETLAB_GUARD_BITS", "8", 1);
  EXPECT_EQ(guard_bits(), 8);
  EXPECT_NO_THROW(ChainRing(2, 7));
  EXPECT_THROW(ChainRing(2, 8), Error);
  EXPECT_THROW(ChainRing(17, 2), Error);
  setenv("PICKETLAB_GUARD_BITS", "junk", 1);
  EXPECT_EQ(guard_bits(), 63);
  unsetenv("PICKETLAB_GUARD_BITS");
  EXPECT_EQ(guard_bits(), 63);
}

TEST(ChainRing, LargeModulusMultiplication) {
  ChainRing r(2, 62);
  const Residue m = r.modulus();
  EXPECT_EQ(r.mul(m - 1, m - 1), 1u);
  ChainRing big(1000003, 3);
  EXPECT_EQ(big.mul(big.modulus() - 1, 2), big.modulus() - 2);
}

TEST(Howell, SmallExampleIsCanonical) {
  ChainRing r(2, 2);
  // rows (2, 1) and (0, 2) span the same module as (2, 3) and (0, 2)
  ResidueMatrix a = howell_form(r, matrix({{2, 1}, {0, 2}}));
  ResidueMatrix b = howell_form(r, matrix({{2, 3}, {0, 2}}));
  EXPECT_EQ(a, b);
  EXPECT_EQ(span_order_exp(r, a), 2);
  // the Howell property forces the row (0, 2) = 2 * (2, 1) to be present
  ResidueMatrix c = howell_form(r, matrix({{2, 1}}));
  EXPECT_EQ(c, a);
}

TEST(Howell, ZeroAndEmpty) {
  ChainRing r(5, 3);
  ResidueMatrix z = howell_form(r, ResidueMatrix::Zero(3, 4));
  EXPECT_EQ(z.rows(), 0);
  EXPECT_EQ(span_order_exp(r, z), 0);
  EXPECT_TRUE(in_span(r, z, ResidueVector::Zero(4)));
  ResidueVector x = ResidueVector::Zero(4);
  x(2) = 1;
  EXPECT_FALSE(in_span(r, z, x));
}

TEST(Howell, AgreesWithClosure) {
  Rng rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::uint64_t p = trial % 3 == 0 ? 2 : (trial % 3 == 1 ? 3 : 5);
    const int n = p == 2 ? 1 + trial % 3 : (p == 3 ? 1 + trial % 2 : 1);
    ChainRing r(p, n);
    const Eigen::Index cols = 1 + static_cast<Eigen::Index>(uniform(rng, p == 2 ? 3 : 2));
    const Eigen::Index rows = static_cast<Eigen::Index>(uniform(rng, 4));
    ResidueMatrix m = random_matrix(r, rng, rows, cols);
    ResidueMatrix h = howell_form(r, m);
    const auto span = closure(r, m);
    EXPECT_EQ(span_order_exp(r, h), log_p(p, span.size()));
    // every element of the span reduces to zero; reductions are canonical
    std::set<Vec> remainders;
    std::set<Vec> ambient{Vec(static_cast<std::size_t>(cols), 0)};
    ResidueMatrix units = ResidueMatrix::Identity(cols, cols);
    for (const auto& v : closure(r, units)) {
      ResidueVector red = howell_reduce(r, h, row_of(v));
      EXPECT_EQ(span.contains(v), red.isZero()) << "trial " << trial;
      remainders.insert(Vec(red.data(), red.data() + red.size()));
    }
    // one remainder per coset
    EXPECT_EQ(remainders.size() * span.size(), closure(r, units).size());
    // idempotent and independent of redundant rows
    EXPECT_EQ(howell_form(r, h), h);
    if (m.rows() > 0) {
      ResidueMatrix extra = stack(m, ResidueMatrix(scaled(r, 2, m.row(0))));
      EXPECT_EQ(howell_form(r, extra), h);
    }
  }
}

TEST(Howell, RowOrderDoesNotMatter) {
  Rng rng(5);
  ChainRing r(3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    ResidueMatrix m = random_matrix(r, rng, 4, 3);
    ResidueMatrix reversed = m.colwise().reverse();
    EXPECT_EQ(howell_form(r, m), howell_form(r, reversed));
  }
}

TEST(Howell, LeftKernel) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    ChainRing r(2, 1 + trial % 3);
    ResidueMatrix a = random_matrix(r, rng, 1 + trial % 3, 2);
    ResidueMatrix k = left_kernel(r, a);
    ASSERT_EQ(k.cols(), a.rows());
    if (k.rows() > 0) EXPECT_TRUE(multiply(r, k, a).isZero());
    // |ker| * |image| = |domain|
    const int domain = static_cast<int>(a.rows()) * r.exponent();
    EXPECT_EQ(span_order_exp(r, k) + span_order_exp(r, howell_form(r, a)), domain);
  }
}

TEST(Howell, IntersectionAgreesWithClosure) {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    ChainRing r(trial % 2 ? 2 : 3, 2);
    ResidueMatrix a = random_matrix(r, rng, 2, 2);
    ResidueMatrix b = random_matrix(r, rng, 2, 2);
    ResidueMatrix meet = span_intersection(r, howell_form(r, a), howell_form(r, b));
    std::set<Vec> sa = closure(r, a), sb = closure(r, b), both;
    for (const auto& v : sa)
      if (sb.contains(v)) both.insert(v);
    EXPECT_EQ(closure(r, meet), both);
  }
}

TEST(FieldHelpers, RankAndInverse) {
  ChainRing f(3, 1);
  ResidueMatrix a = matrix({{1, 2}, {2, 1}});  // det = -3 = 0 mod 3
  EXPECT_EQ(rank(f, a), 1);
  EXPECT_THROW(inverse(f, a), Error);
  ResidueMatrix b = matrix({{1, 1, 0}, {0, 1, 2}, {1, 0, 0}});
  EXPECT_EQ(rank(f, b), 3);
  EXPECT_EQ(multiply(f, b, inverse(f, b)), identity(3));
  EXPECT_EQ(multiply(f, inverse(f, b), b), identity(3));
}
