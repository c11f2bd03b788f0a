#include <random>
#include <thread>

#include "doctest.h"
#include "oracles.hpp"
#include "periodlab/characters.hpp"
#include "periodlab/errors.hpp"
#include "periodlab/kernels.hpp"

using namespace periodlab;

namespace {
MultiplicativeCharacter chi(std::int64_t p, std::int64_t k) { return {Prime::checked(p), k}; }
}  // namespace

TEST_CASE("character structure") {
  const auto c = chi(13, 3);
  CHECK(c.order() == 4);
  CHECK(chi(13, 0).is_trivial());
  CHECK(chi(13, 0).order() == 1);
  CHECK((chi(13, 5) * chi(13, 9)).exponent() == 2);
  CHECK((chi(13, 6) * chi(13, 6)).is_trivial());
  CHECK(chi(13, -1).exponent() == 11);
  CHECK_THROWS_AS(chi(13, 1) * chi(7, 1), Error);
}

TEST_CASE("char_eval") {
  for (std::int64_t p : oracle::primes_up_to(97)) {
    const Prime q = Prime::checked(p);
    const auto triv = chi(p, 0);
    const auto quad = chi(p, (p - 1) / 2);
    for (std::int64_t a = 0; a < p; ++a) {
      const PrimeFieldElem x(q, a);
      if (a == 0) {
        CHECK(char_eval(triv, x).is_zero());
        CHECK(char_eval(quad, x).is_zero());
        continue;
      }
      CHECK(char_eval(triv, x) == CyclotomicNumber::integer(1, 1));
      const auto v = char_eval(quad, x).as_integer();
      REQUIRE(v.has_value());
      CHECK(*v == legendre_symbol(x));
    }
  }
  CHECK_THROWS_AS(char_eval(chi(7, 1), PrimeFieldElem(Prime::checked(5), 2)), Error);
}

TEST_CASE("char_eval is multiplicative") {
  for (std::int64_t p : oracle::primes_up_to(31)) {
    const Prime q = Prime::checked(p);
    for (std::int64_t k = 0; k < p - 1; ++k) {
      const auto c = chi(p, k);
      for (std::int64_t a = 1; a < p; ++a) {
        for (std::int64_t b = 1; b < p; ++b) {
          const PrimeFieldElem x(q, a), y(q, b);
          CHECK(char_eval(c, x * y) == char_eval(c, x) * char_eval(c, y));
        }
      }
    }
  }
}

TEST_CASE("char_eval agrees with the floating oracle") {
  for (std::int64_t p : {5, 13, 31}) {
    const auto lg = oracle::dlog_table(p);
    for (std::int64_t k = 0; k < p - 1; ++k) {
      for (std::int64_t a = 1; a < p; ++a) {
        const auto exact = char_eval(chi(p, k), PrimeFieldElem(Prime::checked(p), a)).embed();
        CHECK(std::abs(exact - oracle::char_value(lg, p, k, a)) < 1e-12);
      }
    }
  }
}

TEST_CASE("gauss_sum") {
  CHECK(std::abs(gauss_sum(chi(11, 0)).value - std::complex<double>(-1.0, 0.0)) < 1e-9);
  CHECK(std::abs(std::norm(gauss_sum(chi(5, 2)).value) - 5.0) < 1e-9);
  for (std::int64_t k = 1; k < 6; ++k) CHECK(std::abs(std::norm(gauss_sum(chi(7, k)).value) - 7.0) < 1e-9);
  // Quadratic Gauss sum: sqrt(p) for p = 1 mod 4, i sqrt(p) for p = 3 mod 4.
  CHECK(std::abs(gauss_sum(chi(13, 6)).value - std::complex<double>(std::sqrt(13.0), 0.0)) < 1e-9);
  CHECK(std::abs(gauss_sum(chi(7, 3)).value - std::complex<double>(0.0, std::sqrt(7.0))) < 1e-9);
  for (std::int64_t p : {5, 17, 31, 97}) {
    for (std::int64_t k = 0; k < p - 1; ++k) {
      CHECK(std::abs(gauss_sum(chi(p, k)).value - oracle::gauss_direct(p, k)) < 1e-9);
    }
  }
}

TEST_CASE("jacobi_sum") {
  CHECK(jacobi_sum(chi(11, 0), chi(11, 0)) == CyclotomicNumber::integer(1, 9));
  CHECK(jacobi_sum(chi(5, 2), chi(5, 2)) == CyclotomicNumber::integer(2, -1));
  const auto j7 = jacobi_sum(chi(7, 2), chi(7, 2));
  CHECK(j7.m() == 3);
  CHECK(j7.norm() == CyclotomicNumber::integer(3, 7));
  // J(c, trivial) = -1 for nontrivial c (the t = 1 term is excluded).
  CHECK(jacobi_sum(chi(13, 5), chi(13, 0)).as_integer() == -1);
  // J(c, c^-1) = -c(-1).
  CHECK(jacobi_sum(chi(13, 3), chi(13, 9)).as_integer() == 1);
  CHECK(jacobi_sum(chi(13, 4), chi(13, 8)).as_integer() == -1);
  CHECK(jacobi_sum(chi(11, 5), chi(11, 5)).as_integer() == 1);
  for (std::int64_t p : {7, 13, 29}) {
    for (std::int64_t k1 = 0; k1 < p - 1; ++k1) {
      for (std::int64_t k2 = 0; k2 < p - 1; ++k2) {
        const auto j = jacobi_sum(chi(p, k1), chi(p, k2));
        CHECK(std::abs(j.embed() - oracle::jacobi_direct(p, k1, k2)) < 1e-9);
        CHECK(j == jacobi_sum(chi(p, k2), chi(p, k1)));
      }
    }
  }
  CHECK_THROWS_AS(jacobi_sum(chi(7, 1), chi(11, 1)), Error);
}

TEST_CASE("gauss_jacobi_relation_check") {
  try {
    (void)gauss_jacobi_relation_check(chi(5, 2), chi(5, 2));
    FAIL("expected TrivialCharacter");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TrivialCharacter);
  }
  CHECK_THROWS_AS(gauss_jacobi_relation_check(chi(5, 0), chi(5, 1)), Error);
  CHECK(gauss_jacobi_relation_check(chi(5, 1), chi(5, 1)) < 1e-8);
  CHECK(gauss_jacobi_relation_check(chi(13, 6), chi(13, 3)) < 1e-8);
}

TEST_CASE("shared tables are safe under concurrent use") {
  const Prime p = Prime::checked(61);
  std::vector<std::thread> workers;
  std::vector<std::int64_t> norms(8, 0);
  for (int w = 0; w < 8; ++w) {
    workers.emplace_back([&, w] {
      const auto j = jacobi_sum(MultiplicativeCharacter(p, w + 1), MultiplicativeCharacter(p, 2 * w + 3));
      norms[static_cast<std::size_t>(w)] = j.norm().as_integer().value_or(-1);
    });
  }
  for (auto& t : workers) t.join();
  for (auto n : norms) CHECK(n == 61);
  CHECK(CharacterTables::for_prime(p).get() == CharacterTables::for_prime(p).get());
}
