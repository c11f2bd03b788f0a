#include <cmath>
#include <numbers>

#include "kernel_terms.hpp"
#include "periodlab/characters.hpp"
#include "periodlab/kernels.hpp"

namespace periodlab::kernels::serial {

std::int64_t cubic_character_sum(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) sum += detail::cubic_term(p, a, b, x);
  return sum;
}

std::int64_t cubic_character_sum_fp2(const Fp2Field& field, std::uint32_t a, std::uint32_t b) {
  const Fp2Elem ea{a, 0}, eb{b, 0};
  std::int64_t sum = 0;
  for (std::uint32_t u = 0; u < field.p; ++u) {
    for (std::uint32_t v = 0; v < field.p; ++v) sum += detail::cubic_term_fp2(field, ea, eb, {u, v});
  }
  return sum;
}

std::complex<double> gauss_sum(const CharacterTables& tables, std::uint32_t k) {
  const std::uint64_t p = tables.prime().value();
  const std::uint64_t period = p * (p - 1);
  std::complex<double> sum{0.0, 0.0};
  // Phase of c(t) psi(t) as an exact fraction of a full turn: (k log t) / (p-1) + t / p.
  for (std::uint64_t t = 1; t < p; ++t) {
    const std::uint64_t turns = (mul_mod(k, tables.dlog(static_cast<std::uint32_t>(t)), p - 1) * p +
                                 t * (p - 1)) % period;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(turns) / static_cast<double>(period);
    sum += std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::vector<std::complex<double>> gauss_sums(const CharacterTables& tables) {
  const std::uint32_t p = tables.prime().value();
  std::vector<std::complex<double>> out(p - 1);
  for (std::uint32_t k = 0; k + 1 < p; ++k) out[k] = gauss_sum(tables, k);
  return out;
}

}  // namespace periodlab::kernels::serial
