#pragma once
// Exact arithmetic in the chain ring Z/(p^N) and the dense matrix aliases
// used throughout the library.

#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace picketlab {

using Residue = std::uint64_t;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RowVectorX = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using ResidueMatrix = MatrixX<Residue>;
using ResidueVector = RowVectorX<Residue>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest admissible modulus is 2^guard_bits(). Defaults to 63; the
/// PICKETLAB_GUARD_BITS environment variable may lower it.
int guard_bits();

bool is_prime(std::uint64_t p);

/// p^e, or throws if the result would reach 2^guard_bits().
Residue checked_power(std::uint64_t p, int e);

/// The ring Z/(p^N). N = 1 gives the prime field F_p.
class ChainRing {
 public:
  ChainRing(std::uint64_t p, int exponent);

  std::uint64_t prime() const { return p_; }
  int exponent() const { return n_; }
  Residue modulus() const { return modulus_; }
  /// p^e for 0 <= e <= N.
  Residue power(int e) const { return powers_[static_cast<std::size_t>(e)]; }

  Residue reduce(std::int64_t a) const;
  Residue add(Residue a, Residue b) const;
  Residue sub(Residue a, Residue b) const;
  Residue neg(Residue a) const { return a == 0 ? 0 : modulus_ - a; }
  Residue mul(Residue a, Residue b) const;

  /// p-adic valuation; N for zero.
  int valuation(Residue a) const;
  /// Inverse of a unit (a not divisible by p).
  Residue inverse(Residue unit) const;

  bool operator==(const ChainRing& o) const { return p_ == o.p_ && n_ == o.n_; }

 private:
  std::uint64_t p_;
  int n_;
  Residue modulus_;
  Eigen::Matrix<Residue, Eigen::Dynamic, 1> powers_;
};

/// row += c * other, entrywise mod p^N.
void axpy(const ChainRing& ring, Residue c, const ResidueVector& other, ResidueVector& row);
ResidueVector scaled(const ChainRing& ring, Residue c, const ResidueVector& row);
ResidueMatrix multiply(const ChainRing& ring, const ResidueMatrix& a, const ResidueMatrix& b);
ResidueMatrix identity(Eigen::Index n);

}  // namespace picketlab
