#pragma once

// Brute-force reference computations used by the tests. None of these call
// into the library's arithmetic; they only share the problem statement.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

inline std::int64_t mod(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

inline bool is_prime_trial(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t hi, std::int64_t lo = 3) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (is_prime_trial(n)) out.push_back(n);
  }
  return out;
}

/// Order of g mod p by repeated multiplication.
inline std::int64_t order_by_enumeration(std::int64_t g, std::int64_t p) {
  std::int64_t x = mod(g, p);
  if (x == 0) return 0;
  std::int64_t k = 1;
  while (x != 1) {
    x = x * mod(g, p) % p;
    ++k;
  }
  return k;
}

inline std::int64_t smallest_generator(std::int64_t p) {
  for (std::int64_t g = 1; g < p; ++g) {
    if (order_by_enumeration(g, p) == p - 1) return g;
  }
  return 0;
}

/// is_square[a] for a in F_p, by squaring every residue.
inline std::vector<bool> square_table(std::int64_t p) {
  std::vector<bool> sq(static_cast<std::size_t>(p), false);
  for (std::int64_t y = 0; y < p; ++y) sq[static_cast<std::size_t>(y * y % p)] = true;
  return sq;
}

/// Projective point count of y^2 = x^3 + ax + b by enumerating (x, y) in F_p^2.
inline std::int64_t naive_point_count(std::int64_t p, std::int64_t a, std::int64_t b) {
  std::int64_t n = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t f = mod(x * x % p * x + a * x + b, p);
    for (std::int64_t y = 0; y < p; ++y) {
      if (y * y % p == f) ++n;
    }
  }
  return n;
}

/// F_{p^2} as F_p[s]/(s^2 - r), r the smallest nonresidue; independent of
/// the library's canonical modulus (counts are isomorphism invariant).
struct ToyFp2 {
  std::int64_t p, r;
  struct E {
    std::int64_t u, v;
  };
  explicit ToyFp2(std::int64_t prime) : p(prime), r(0) {
    const auto sq = square_table(prime);
    for (std::int64_t c = 2; c < prime; ++c) {
      if (!sq[static_cast<std::size_t>(c)]) {
        r = c;
        break;
      }
    }
  }
  E mul(E a, E b) const { return {mod(a.u * b.u + r * (a.v * b.v % p), p), mod(a.u * b.v + a.v * b.u, p)}; }
  E add(E a, E b) const { return {mod(a.u + b.u, p), mod(a.v + b.v, p)}; }
  std::int64_t index(E a) const { return a.u * p + a.v; }
};

/// Projective count over F_{p^2} by enumerating all (x, y) through a square-count table.
inline std::int64_t naive_point_count_fp2(std::int64_t p, std::int64_t a, std::int64_t b) {
  const ToyFp2 f(p);
  std::vector<std::int64_t> roots(static_cast<std::size_t>(p * p), 0);
  for (std::int64_t u = 0; u < p; ++u) {
    for (std::int64_t v = 0; v < p; ++v) {
      const ToyFp2::E y{u, v};
      ++roots[static_cast<std::size_t>(f.index(f.mul(y, y)))];
    }
  }
  std::int64_t n = 1;
  const ToyFp2::E ea{mod(a, p), 0}, eb{mod(b, p), 0};
  for (std::int64_t u = 0; u < p; ++u) {
    for (std::int64_t v = 0; v < p; ++v) {
      const ToyFp2::E x{u, v};
      const ToyFp2::E rhs = f.add(f.add(f.mul(f.mul(x, x), x), f.mul(ea, x)), eb);
      n += roots[static_cast<std::size_t>(f.index(rhs))];
    }
  }
  return n;
}

/// Discrete logs against the smallest generator, by walking its powers.
inline std::vector<std::int64_t> dlog_table(std::int64_t p) {
  const std::int64_t g = smallest_generator(p);
  std::vector<std::int64_t> lg(static_cast<std::size_t>(p), -1);
  std::int64_t x = 1;
  for (std::int64_t j = 0; j < p - 1; ++j) {
    lg[static_cast<std::size_t>(x)] = j;
    x = x * g % p;
  }
  return lg;
}

inline std::complex<double> char_value(const std::vector<std::int64_t>& lg, std::int64_t p, std::int64_t k,
                                       std::int64_t a) {
  a = mod(a, p);
  if (a == 0) return {0.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(k * lg[static_cast<std::size_t>(a)], p - 1)) /
                       static_cast<double>(p - 1);
  return std::polar(1.0, angle);
}

inline std::complex<double> gauss_direct(std::int64_t p, std::int64_t k) {
  const auto lg = dlog_table(p);
  std::complex<double> s{0.0, 0.0};
  for (std::int64_t t = 1; t < p; ++t) {
    s += char_value(lg, p, k, t) * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(p));
  }
  return s;
}

inline std::complex<double> jacobi_direct(std::int64_t p, std::int64_t k1, std::int64_t k2) {
  const auto lg = dlog_table(p);
  std::complex<double> s{0.0, 0.0};
  for (std::int64_t t = 0; t < p; ++t) s += char_value(lg, p, k1, t) * char_value(lg, p, k2, 1 - t);
  return s;
}

/// log 2 = sum_{k>=0} (-1)^k / (k+1), accelerated with the Cohen-Rodriguez
/// Villegas-Zagier scheme (error ~ 5.8^-n).
inline double log2_alternating_series(int n = 40) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0, c = -d, s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c / (k + 1.0);
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

}  // namespace oracle
