#pragma once

// Per-element terms shared by the serial and OpenMP kernels, so both
// variants evaluate exactly the same expression.

#include <cstdint>

#include "periodlab/finite_field.hpp"
#include "periodlab/fp2.hpp"

namespace periodlab::kernels::detail {

inline int quadratic_char(std::uint64_t v, std::uint64_t p) noexcept {
  if (v == 0) return 0;
  return pow_mod(v, (p - 1) / 2, p) == 1 ? 1 : -1;
}

inline int cubic_term(std::uint64_t p, std::uint64_t a, std::uint64_t b, std::uint64_t x) noexcept {
  const std::uint64_t x2 = mul_mod(x, x, p);
  const std::uint64_t f = (mul_mod(x2, x, p) + mul_mod(a, x, p) + b) % p;
  return quadratic_char(f, p);
}

inline int cubic_term_fp2(const Fp2Field& field, Fp2Elem a, Fp2Elem b, Fp2Elem x) noexcept {
  const Fp2Elem x3 = fp2_mul(field, fp2_mul(field, x, x), x);
  const Fp2Elem f = fp2_add(field, fp2_add(field, x3, fp2_mul(field, a, x)), b);
  return quadratic_char(fp2_norm(field, f), field.p);
}

}  // namespace periodlab::kernels::detail
