#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "periodlab/characters.hpp"
#include "periodlab/curve_counts.hpp"
#include "periodlab/kernels.hpp"

using namespace periodlab;

TEST_CASE("cubic character sums: OpenMP equals serial") {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {5u, 101u, 1009u, 65537u, 1000003u}) {
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    for (int i = 0; i < 4; ++i) {
      const std::uint32_t a = d(rng), b = d(rng);
      const auto ref = kernels::serial::cubic_character_sum(p, a, b);
      for (int threads : {0, 1, 2, 3, 7}) CHECK(kernels::omp::cubic_character_sum(p, a, b, threads) == ref);
    }
  }
}

TEST_CASE("quadratic-extension sums: OpenMP equals serial") {
  for (std::uint32_t p : {5u, 31u, 211u}) {
    const auto f = Fp2Field::canonical(Prime::checked(p));
    const auto ref = kernels::serial::cubic_character_sum_fp2(f, 1, 3);
    for (int threads : {0, 2, 5}) CHECK(kernels::omp::cubic_character_sum_fp2(f, 1, 3, threads) == ref);
  }
}

TEST_CASE("Gauss sums: OpenMP is bit-identical to serial") {
  for (std::int64_t p : {7, 97, 1009}) {
    const auto tables = CharacterTables::for_prime(Prime::checked(p));
    const auto ref = kernels::serial::gauss_sums(*tables);
    REQUIRE(ref.size() == static_cast<std::size_t>(p - 1));
    for (std::uint32_t k = 0; k < ref.size(); k += 13) CHECK(ref[k] == kernels::serial::gauss_sum(*tables, k));
    for (int threads : {0, 2, 4}) {
      const auto par = kernels::omp::gauss_sums(*tables, threads);
      REQUIRE(par.size() == ref.size());
      for (std::size_t k = 0; k < ref.size(); ++k) {
        CHECK(par[k].real() == ref[k].real());
        CHECK(par[k].imag() == ref[k].imag());
      }
    }
  }
}

TEST_CASE("count_points is independent of the thread count") {
  const WeierstrassCurveFp c(Prime::checked(100003), 17, 5);
  const auto ref = count_points(c, 1);
  for (int threads : {0, 2, 8}) CHECK(count_points(c, threads).n_points == ref.n_points);
  const WeierstrassCurveFp c2(Prime::checked(13), 2, 7);
  CHECK(count_points_ext(c2, 2, 4) == count_points_ext(c2, 2, 1));
}
