#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "periodlab/amplitudes.hpp"
#include "periodlab/errors.hpp"

using namespace periodlab;

namespace {
double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }
}  // namespace

TEST_CASE("gamma_fn") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(gamma_fn(0.5) - std::sqrt(std::numbers::pi)) < 1e-12);
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
  for (int n = 1; n <= 20; ++n) CHECK(std::abs(gamma_fn(n) / factorial(n - 1) - 1.0) < 1e-12);
  for (double x = 0.5; x <= 20.0; x += 0.37) CHECK(std::abs(gamma_fn(x) / std::tgamma(x) - 1.0) < 1e-12);
  CHECK(std::abs(gamma_fn(-0.5) + 2.0 * std::sqrt(std::numbers::pi)) < 1e-12);
  CHECK(std::abs(gamma_fn(-2.5) / std::tgamma(-2.5) - 1.0) < 1e-12);
  for (double x : {0.0, -1.0, -7.0}) {
    try {
      (void)gamma_fn(x);
      FAIL("expected a pole");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::PoleAtNonpositiveInteger);
    }
  }
}

TEST_CASE("beta_fn") {
  CHECK(std::abs(beta_fn(1.0, 1.0) - 1.0) < 1e-14);
  CHECK(std::abs(beta_fn(0.5, 0.5) - std::numbers::pi) < 1e-10);
  CHECK(std::abs(beta_fn(2.0, 3.0) - 1.0 / 12.0) < 1e-14);
  CHECK_THROWS_AS(beta_fn(-1.0, 2.5), Error);
  CHECK_THROWS_AS(beta_fn(0.5, -0.5), Error);
  for (double a = 0.5; a <= 5.0; a += 0.5) {
    for (double b = 0.1; b <= 5.0; b += 0.49) {
      CHECK(std::abs(beta_fn(a, b) - beta_fn(b, a)) < 1e-12);
      CHECK(std::abs(beta_fn(a + 1.0, b) - beta_fn(a, b) * a / (a + b)) < 1e-10);
    }
  }
}

TEST_CASE("beta quadrature") {
  for (double a : {0.5, 1.0, 2.5}) {
    for (double b : {0.5, 1.0, 2.5}) {
      const auto q = beta_quadrature(a, b);
      CHECK(std::abs(q.value - beta_fn(a, b)) < 1e-8);
    }
  }
  CHECK(std::abs(beta_quadrature(0.2, 3.3).value - beta_fn(0.2, 3.3)) < 1e-8);
  CHECK_THROWS_AS(beta_quadrature(0.0, 1.0), Error);
}

TEST_CASE("veneziano") {
  const auto one = veneziano({2.0, 2.0});
  CHECK_FALSE(one.at_pole);
  CHECK(std::abs(one.value - 1.0) < 1e-14);
  const auto pole = veneziano({1.0, 2.5});
  CHECK(pole.at_pole);
  REQUIRE(pole.pole_index.has_value());
  CHECK(*pole.pole_index == 0);
  CHECK(std::isinf(pole.value));
  CHECK(*veneziano({2.5, -2.0}).pole_index == 3);
  CHECK(std::abs(veneziano({2.3, 3.7}).value - veneziano({3.7, 2.3}).value) < 1e-12);
  // B(-n, m) with 1 <= m <= n is finite: B(-2, 1) = -1/2, B(-2, 2) = 1/2.
  const auto cancel = veneziano({-1.0, 2.0});
  CHECK_FALSE(cancel.at_pole);
  CHECK(std::abs(cancel.value + 0.5) < 1e-14);
  CHECK(std::abs(veneziano({-1.0, 3.0}).value - 0.5) < 1e-14);
  // Both arguments at poles.
  CHECK(veneziano({1.0, 0.0}).at_pole);
  // alpha + beta at a pole while neither argument is: A = 0.
  const auto zero = veneziano({1.5, 0.5});
  CHECK_FALSE(zero.at_pole);
  CHECK(zero.value == 0.0);
  // Tolerance window of 1e-12 on the pole test.
  CHECK(veneziano({1.0 + 1e-13, 2.5}).at_pole);
  CHECK_FALSE(veneziano({1.0 + 1e-9, 2.5}).at_pole);
}

TEST_CASE("pole residues") {
  for (double b : {1.5, 2.5, 3.5, 0.3, -1.7}) {
    const auto scan = pole_scan(b, 5);
    REQUIRE(scan.size() == 6);
    for (const auto& r : scan) {
      CHECK(std::abs(r.residue - r.closed_form) < 1e-6);
      CHECK(r.closed_form == pole_residue_closed_form(b, r.n));
    }
    CHECK(std::abs(scan[0].residue - 1.0) < 1e-6);
  }
  const auto s = pole_scan(2.5, 2);
  CHECK(std::abs(s[1].residue + 1.5) < 1e-6);
  CHECK(std::abs(s[2].residue - 0.375) < 1e-6);
  CHECK(pole_scan(2.5, 12).size() == 13);
  CHECK_THROWS_AS(pole_scan(2.0, 3), Error);
  CHECK_THROWS_AS(pole_scan(2.5, 13), Error);
  CHECK_THROWS_AS(pole_scan(2.5, -1), Error);
}

TEST_CASE("closed form against the Gamma residue expansion") {
  // Res_{a=-n} Gamma(a) = (-1)^n / n!, so Res B(a, b) = (-1)^n / n! * Gamma(b) / Gamma(b - n).
  for (double b : {1.5, 2.5, 4.75}) {
    for (int n = 0; n <= 6; ++n) {
      const double direct = (n % 2 == 0 ? 1.0 : -1.0) / factorial(n) * std::tgamma(b) / std::tgamma(b - n);
      CHECK(std::abs(pole_residue_closed_form(b, n) - direct) < 1e-10);
    }
  }
}

TEST_CASE("correspondence report") {
  const auto r5 = correspondence_table(Prime::checked(5), {});
  CHECK(r5.p == 5);
  CHECK(r5.global.empty());
  CHECK(r5.dictionary.size() == 5);
  CHECK_FALSE(r5.local.empty());
  for (const auto& row : r5.local) {
    CHECK(row.norm_ok);
    CHECK(row.jacobi.norm().as_integer() == 5);
  }
  REQUIRE(r5.defect.has_value());
  CHECK(r5.defect->a_p_jacobi == r5.defect->a_p_count);

  const auto r13 = correspondence_table(Prime::checked(13), {2.0});
  REQUIRE(r13.defect.has_value());
  CHECK(r13.defect->a_p_jacobi == 13 + 1 - oracle::naive_point_count(13, -1, 0));
  REQUIRE(r13.global.size() == 1);
  CHECK(std::abs(r13.global[0].amplitude.value - 1.0) < 1e-14);
  // (p-2)^2 pairs minus those with k1 + k2 = 0 mod p-1.
  CHECK(r13.local.size() == 11u * 11u - 11u);

  CHECK_FALSE(correspondence_table(Prime::checked(7), {}).defect.has_value());

  const auto grid = correspondence_table(Prime::checked(11), {0.0, 1.0, 2.5}, 2);
  CHECK(grid.global.size() == 9);
  for (const auto& g : grid.global) {
    if (g.amplitude.at_pole) {
      REQUIRE(g.amplitude.pole_index.has_value());
      CHECK(*g.amplitude.pole_index >= 0);
    }
  }
  const auto serial = correspondence_table(Prime::checked(11), {0.0, 1.0, 2.5}, 1);
  REQUIRE(serial.local.size() == grid.local.size());
  for (std::size_t i = 0; i < serial.local.size(); ++i) CHECK(serial.local[i].jacobi == grid.local[i].jacobi);

  CHECK_THROWS_AS(correspondence_table(Prime::checked(101), {}), Error);
  CHECK_THROWS_AS(correspondence_table(Prime::checked(5), std::vector<double>(101, 1.0)), Error);
}
