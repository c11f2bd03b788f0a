#pragma once

// Data-parallel inner loops. Each kernel has a serial reference and an
// OpenMP variant with the same signature plus a thread count (0 = runtime
// default). The OpenMP variants return bit-identical results: integer sums
// are reduced exactly and floating sums are never split across threads.

#include <complex>
#include <cstdint>
#include <vector>

#include "periodlab/fp2.hpp"

namespace periodlab {
class CharacterTables;
}

namespace periodlab::kernels {

namespace serial {

/// sum_{x in F_p} chi_2(x^3 + a x + b).
std::int64_t cubic_character_sum(std::uint32_t p, std::uint32_t a, std::uint32_t b);

/// sum_{x in F_{p^2}} chi_2(x^3 + a x + b) with chi_2 the quadratic character of F_{p^2}.
std::int64_t cubic_character_sum_fp2(const Fp2Field& field, std::uint32_t a, std::uint32_t b);

/// g(c_k) for a single exponent k.
std::complex<double> gauss_sum(const CharacterTables& tables, std::uint32_t k);

/// g(c_k) for k = 0..p-2.
std::vector<std::complex<double>> gauss_sums(const CharacterTables& tables);

}  // namespace serial

namespace omp {

std::int64_t cubic_character_sum(std::uint32_t p, std::uint32_t a, std::uint32_t b, int threads = 0);

std::int64_t cubic_character_sum_fp2(const Fp2Field& field, std::uint32_t a, std::uint32_t b,
                                     int threads = 0);

/// Parallel over characters; each sum runs in the serial order.
std::vector<std::complex<double>> gauss_sums(const CharacterTables& tables, int threads = 0);

}  // namespace omp

}  // namespace periodlab::kernels
