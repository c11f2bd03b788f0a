#include <omp.h>

#include "kernel_terms.hpp"
#include "periodlab/characters.hpp"
#include "periodlab/kernels.hpp"

namespace periodlab::kernels::omp {
namespace {

int team_size(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

}  // namespace

std::int64_t cubic_character_sum(std::uint32_t p, std::uint32_t a, std::uint32_t b, int threads) {
  std::int64_t sum = 0;
  const auto n = static_cast<std::int64_t>(p);
#pragma omp parallel for reduction(+ : sum) schedule(static) num_threads(team_size(threads))
  for (std::int64_t x = 0; x < n; ++x) {
    sum += detail::cubic_term(p, a, b, static_cast<std::uint64_t>(x));
  }
  return sum;
}

std::int64_t cubic_character_sum_fp2(const Fp2Field& field, std::uint32_t a, std::uint32_t b,
                                     int threads) {
  const Fp2Elem ea{a, 0}, eb{b, 0};
  std::int64_t sum = 0;
  const auto n = static_cast<std::int64_t>(field.p);
#pragma omp parallel for reduction(+ : sum) schedule(static) num_threads(team_size(threads))
  for (std::int64_t u = 0; u < n; ++u) {
    for (std::uint32_t v = 0; v < field.p; ++v) {
      sum += detail::cubic_term_fp2(field, ea, eb, {static_cast<std::uint32_t>(u), v});
    }
  }
  return sum;
}

std::vector<std::complex<double>> gauss_sums(const CharacterTables& tables, int threads) {
  const auto n = static_cast<std::int64_t>(tables.prime().value()) - 1;
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 4) num_threads(team_size(threads))
  for (std::int64_t k = 0; k < n; ++k) {
    out[static_cast<std::size_t>(k)] = serial::gauss_sum(tables, static_cast<std::uint32_t>(k));
  }
  return out;
}

}  // namespace periodlab::kernels::omp
