#pragma once

#include <cstdint>

#include "periodlab/finite_field.hpp"

namespace periodlab {

/// F_{p^2} = F_p[x]/(x^2 + c1 x + c0).
struct Fp2Field {
  std::uint32_t p;
  std::uint32_t c1;
  std::uint32_t c0;

  /// Lexicographically smallest irreducible monic quadratic, ordered by (c1, c0).
  static Fp2Field canonical(Prime p);
};

/// a + b x.
struct Fp2Elem {
  std::uint32_t a;
  std::uint32_t b;
  friend bool operator==(Fp2Elem, Fp2Elem) = default;
};

inline Fp2Elem fp2_add(const Fp2Field& f, Fp2Elem u, Fp2Elem v) noexcept {
  return {static_cast<std::uint32_t>((std::uint64_t{u.a} + v.a) % f.p),
          static_cast<std::uint32_t>((std::uint64_t{u.b} + v.b) % f.p)};
}

inline Fp2Elem fp2_mul(const Fp2Field& f, Fp2Elem u, Fp2Elem v) noexcept {
  const std::uint64_t p = f.p;
  const std::uint64_t ac = mul_mod(u.a, v.a, p);
  const std::uint64_t bd = mul_mod(u.b, v.b, p);
  const std::uint64_t cross = (mul_mod(u.a, v.b, p) + mul_mod(u.b, v.a, p)) % p;
  // x^2 = -c1 x - c0
  const std::uint64_t re = (ac + p - mul_mod(bd, f.c0, p)) % p;
  const std::uint64_t im = (cross + p - mul_mod(bd, f.c1, p)) % p;
  return {static_cast<std::uint32_t>(re), static_cast<std::uint32_t>(im)};
}

/// N(a + b x) = a^2 - c1 a b + c0 b^2, the F_p-norm.
inline std::uint32_t fp2_norm(const Fp2Field& f, Fp2Elem u) noexcept {
  const std::uint64_t p = f.p;
  const std::uint64_t aa = mul_mod(u.a, u.a, p);
  const std::uint64_t ab = mul_mod(mul_mod(u.a, u.b, p), f.c1, p);
  const std::uint64_t bb = mul_mod(mul_mod(u.b, u.b, p), f.c0, p);
  return static_cast<std::uint32_t>((aa + p - ab + bb) % p);
}

}  // namespace periodlab
