#pragma once

#include <cstdint>
#include <vector>

#include "periodlab/errors.hpp"

namespace periodlab {

/// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

/// A prime below 2^31, checked once at construction.
class Prime {
 public:
  static constexpr std::int64_t kLimit = std::int64_t{1} << 31;

  /// Throws NotPrime for composites and 0/1, UnsupportedPrime above the word range.
  static Prime checked(std::int64_t p);

  std::uint32_t value() const noexcept { return p_; }
  operator std::uint32_t() const noexcept { return p_; }

  friend bool operator==(Prime, Prime) = default;

 private:
  explicit Prime(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Residue class in F_p for an odd prime p.
class PrimeFieldElem {
 public:
  PrimeFieldElem(Prime p, std::int64_t value);

  Prime prime() const noexcept { return p_; }
  std::uint32_t value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }

  PrimeFieldElem operator+(const PrimeFieldElem& o) const;
  PrimeFieldElem operator-(const PrimeFieldElem& o) const;
  PrimeFieldElem operator*(const PrimeFieldElem& o) const;
  PrimeFieldElem operator-() const;

  PrimeFieldElem pow(std::uint64_t exp) const;
  /// Throws DivisionByZero for 0.
  PrimeFieldElem inv() const;

  /// Multiplicative order; 0 for the zero element.
  std::uint64_t order() const;

  friend bool operator==(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    return a.p_ == b.p_ && a.v_ == b.v_;
  }

 private:
  void require_same(const PrimeFieldElem& o) const;

  Prime p_;
  std::uint32_t v_;
};

/// Smallest generator of F_p^x. Deterministic, so character encodings are
/// reproducible.
PrimeFieldElem find_primitive_root(Prime p);

/// Quadratic character: 0, +1 or -1 via Euler's criterion.
int legendre_symbol(const PrimeFieldElem& a);

/// Realization of F_p as Z[i]/(re + im*i) for p = 1 mod 4.
struct GaussianQuotient {
  /// Image of i: g^((p-1)/4) for the canonical primitive root g.
  PrimeFieldElem sqrt_minus_one;
  /// Generator of the kernel of i -> sqrt_minus_one; re > |im| > 0 and
  /// re^2 + im^2 = p.
  std::int64_t re;
  std::int64_t im;

  /// The quotient map x + y*i -> x + y*u.
  PrimeFieldElem reduce(std::int64_t x, std::int64_t y) const;
};

/// Throws BadCongruence unless p = 1 mod 4.
GaussianQuotient iso_gaussian_residue(Prime p);

}  // namespace periodlab
