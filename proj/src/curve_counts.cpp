#include "periodlab/curve_counts.hpp"

#include <cmath>
#include <string>

#include "periodlab/characters.hpp"
#include "periodlab/fp2.hpp"
#include "periodlab/kernels.hpp"

namespace periodlab {
namespace {

PrimeFieldElem checked_coeff(Prime p, std::int64_t v) {
  if (p.value() < 5) {
    throw Error(Errc::InvalidArgument, "curve counts need p >= 5, got " + std::to_string(p.value()));
  }
  return {p, v};
}

std::int64_t floor_mod(std::int64_t v, std::int64_t m) {
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

WeierstrassCurveFp::WeierstrassCurveFp(Prime p, std::int64_t a, std::int64_t b)
    : a_(checked_coeff(p, a)), b_(checked_coeff(p, b)) {
  const PrimeFieldElem disc = PrimeFieldElem(p, 4) * a_.pow(3) + PrimeFieldElem(p, 27) * b_.pow(2);
  if (disc.is_zero()) {
    throw Error(Errc::SingularCurve, "4a^3 + 27b^2 = 0 over F_" + std::to_string(p.value()) + " (a=" +
                                         std::to_string(a_.value()) + ", b=" + std::to_string(b_.value()) + ")");
  }
}

CountResult count_points(const WeierstrassCurveFp& curve, int threads) {
  const std::uint32_t p = curve.prime().value();
  const std::int64_t s = threads == 1
                             ? kernels::serial::cubic_character_sum(p, curve.a().value(), curve.b().value())
                             : kernels::omp::cubic_character_sum(p, curve.a().value(), curve.b().value(), threads);
  // Each x contributes 1 + chi(f(x)) affine points, plus the point at infinity.
  const std::int64_t n = 1 + static_cast<std::int64_t>(p) + s;
  return {n, static_cast<std::int64_t>(p) + 1 - n};
}

std::int64_t count_points_ext(const WeierstrassCurveFp& curve, int n, int threads) {
  if (n == 1) return count_points(curve, threads).n_points;
  if (n != 2) throw Error(Errc::UnsupportedDegree, "extension degree " + std::to_string(n) + " (only 1, 2)");
  const Fp2Field field = Fp2Field::canonical(curve.prime());
  const std::int64_t s =
      threads == 1 ? kernels::serial::cubic_character_sum_fp2(field, curve.a().value(), curve.b().value())
                   : kernels::omp::cubic_character_sum_fp2(field, curve.a().value(), curve.b().value(), threads);
  const std::int64_t q = static_cast<std::int64_t>(field.p) * field.p;
  return 1 + q + s;
}

ZetaData zeta_data(const WeierstrassCurveFp& curve, int threads) {
  const std::int64_t a = count_points(curve, threads).a_p;
  const auto p = static_cast<double>(curve.prime().value());
  // Hasse gives a^2 <= 4p, so the roots are complex conjugates on |z| = sqrt(p).
  const double disc = 4.0 * p - static_cast<double>(a * a);
  const double im = 0.5 * std::sqrt(disc > 0.0 ? disc : 0.0);
  const double re = 0.5 * static_cast<double>(a);
  return {a, {re, im}, {re, -im}};
}

std::int64_t zeta_power_sum(std::int64_t a_p, std::int64_t p, int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "power sum index must be >= 0");
  std::int64_t prev = 2, cur = a_p;  // s_0, s_1
  if (n == 0) return prev;
  for (int k = 2; k <= n; ++k) {
    const std::int64_t next = a_p * cur - p * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

JacobiDefect a_p_from_jacobi_detail(Prime p) {
  if (p.value() % 4 != 1) {
    throw Error(Errc::BadCongruence, std::to_string(p.value()) + " is not 1 mod 4");
  }
  const std::int64_t n = p.value() - 1;
  const MultiplicativeCharacter quartic(p, n / 4);
  const MultiplicativeCharacter quadratic(p, n / 2);
  const CyclotomicNumber j = jacobi_sum(quartic, quadratic);  // lives in Z[zeta_4] = Z[i]
  const std::int64_t x = j.coeffs()[0], y = j.coeffs()[1];
  if (x * x + y * y != static_cast<std::int64_t>(p.value())) {
    throw Error(Errc::InvalidArgument, "J(chi_4, chi_2) has norm " + std::to_string(x * x + y * y));
  }

  // z = 1 mod (1+i)^3 = (2+2i)  <=>  re odd, im even, re = 1 + im mod 4.
  std::int64_t re = x, im = y;
  for (int turn = 0; turn < 4; ++turn) {
    if (floor_mod(re, 2) == 1 && floor_mod(im, 2) == 0 && floor_mod(re - 1 - im, 4) == 0) {
      return {x, y, re, im, 2 * re};
    }
    const std::int64_t next_re = -im;  // multiply by i
    im = re;
    re = next_re;
  }
  throw Error(Errc::InvalidArgument, "no primary associate of J(chi_4, chi_2)");
}

std::int64_t a_p_from_jacobi(Prime p) { return a_p_from_jacobi_detail(p).a_p; }

Fp2Field Fp2Field::canonical(Prime p) {
  const std::uint64_t q = p.value();
  for (std::uint64_t c1 = 0; c1 < q; ++c1) {
    for (std::uint64_t c0 = 0; c0 < q; ++c0) {
      // Irreducible <=> discriminant c1^2 - 4 c0 is a nonsquare.
      const std::uint64_t disc = (mul_mod(c1, c1, q) + q * 4 - mul_mod(4, c0, q)) % q;
      if (disc != 0 && pow_mod(disc, (q - 1) / 2, q) != 1) {
        return {p.value(), static_cast<std::uint32_t>(c1), static_cast<std::uint32_t>(c0)};
      }
    }
  }
  throw Error(Errc::InvalidArgument, "no irreducible quadratic over F_" + std::to_string(q));
}

}  // namespace periodlab
