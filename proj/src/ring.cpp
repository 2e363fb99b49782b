#include "picketlab/ring.hpp"

#include <cstdlib>

namespace picketlab {

int guard_bits() {
  const char* env = std::getenv("PICKETLAB_GUARD_BITS");
  if (env == nullptr || *env == '\0') return 63;
  char* end = nullptr;
  long bits = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || bits < 1) return 63;
  return bits < 63 ? static_cast<int>(bits) : 63;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d <= p / d; ++d)
    if (p % d == 0) return false;
  return true;
}

Residue checked_power(std::uint64_t p, int e) {
  const unsigned __int128 bound = static_cast<unsigned __int128>(1) << guard_bits();
  unsigned __int128 acc = 1;
  for (int i = 0; i < e; ++i) {
    acc *= p;
    if (acc >= bound)
      throw Error("modulus " + std::to_string(p) + "^" + std::to_string(e) + " exceeds the 2^" +
                  std::to_string(guard_bits()) + " word-size guard");
  }
  return static_cast<Residue>(acc);
}

ChainRing::ChainRing(std::uint64_t p, int exponent) : p_(p), n_(exponent) {
  if (!is_prime(p)) throw Error("p = " + std::to_string(p) + " is not prime");
  if (exponent < 1) throw Error("ring exponent must be positive");
  modulus_ = checked_power(p, exponent);
  powers_.resize(exponent + 1);
  powers_(0) = 1;
  for (int e = 1; e <= exponent; ++e) powers_(e) = powers_(e - 1) * p;
}

Residue ChainRing::reduce(std::int64_t a) const {
  const auto m = static_cast<std::int64_t>(modulus_);
  std::int64_t r = a % m;
  return static_cast<Residue>(r < 0 ? r + m : r);
}

Residue ChainRing::add(Residue a, Residue b) const {
  Residue s = a + b;  // a, b < 2^63, no wraparound
  return s >= modulus_ ? s - modulus_ : s;
}

Residue ChainRing::sub(Residue a, Residue b) const { return a >= b ? a - b : a + (modulus_ - b); }

Residue ChainRing::mul(Residue a, Residue b) const {
  return static_cast<Residue>(static_cast<unsigned __int128>(a) * b % modulus_);
}

int ChainRing::valuation(Residue a) const {
  if (a == 0) return n_;
  int v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

Residue ChainRing::inverse(Residue unit) const {
  if (unit % p_ == 0) throw Error("inverse of a non-unit");
  __int128 r0 = static_cast<__int128>(modulus_), r1 = static_cast<__int128>(unit % modulus_);
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    __int128 t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += static_cast<__int128>(modulus_);
  return static_cast<Residue>(t0);
}

void axpy(const ChainRing& ring, Residue c, const ResidueVector& other, ResidueVector& row) {
  if (c == 0) return;
  for (Eigen::Index j = 0; j < row.size(); ++j) row(j) = ring.add(row(j), ring.mul(c, other(j)));
}

ResidueVector scaled(const ChainRing& ring, Residue c, const ResidueVector& row) {
  ResidueVector out(row.size());
  for (Eigen::Index j = 0; j < row.size(); ++j) out(j) = ring.mul(c, row(j));
  return out;
}

ResidueMatrix multiply(const ChainRing& ring, const ResidueMatrix& a, const ResidueMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix dimension mismatch");
  ResidueMatrix out = ResidueMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        out(i, j) = ring.add(out(i, j), ring.mul(a(i, k), b(k, j)));
    }
  return out;
}

ResidueMatrix identity(Eigen::Index n) { return ResidueMatrix::Identity(n, n); }

}  // namespace picketlab
