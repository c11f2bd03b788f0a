#pragma once

#include <complex>
#include <cstdint>

#include "periodlab/cyclotomic.hpp"
#include "periodlab/finite_field.hpp"

namespace periodlab {

/// y^2 = x^3 + a x + b over F_p, p >= 5, nonsingular.
class WeierstrassCurveFp {
 public:
  /// Throws SingularCurve when 4a^3 + 27b^2 = 0, InvalidArgument for p < 5.
  WeierstrassCurveFp(Prime p, std::int64_t a, std::int64_t b);

  Prime prime() const noexcept { return a_.prime(); }
  const PrimeFieldElem& a() const noexcept { return a_; }
  const PrimeFieldElem& b() const noexcept { return b_; }

 private:
  PrimeFieldElem a_;
  PrimeFieldElem b_;
};

/// Projective count, including the point at infinity.
struct CountResult {
  std::int64_t n_points;
  std::int64_t a_p;
};

/// Reciprocal roots of 1 - a_p T + p T^2.
struct ZetaData {
  std::int64_t a_p;
  std::complex<double> alpha;
  std::complex<double> beta;
};

/// threads: 1 runs the serial kernel, otherwise the OpenMP kernel (0 = default team).
CountResult count_points(const WeierstrassCurveFp& curve, int threads = 1);

/// Projective count over F_{p^n}, n in {1, 2}; throws UnsupportedDegree otherwise.
std::int64_t count_points_ext(const WeierstrassCurveFp& curve, int n, int threads = 1);

ZetaData zeta_data(const WeierstrassCurveFp& curve, int threads = 1);

/// alpha^n + beta^n as an exact integer, from the recurrence s_n = a s_{n-1} - p s_{n-2}.
std::int64_t zeta_power_sum(std::int64_t a_p, std::int64_t p, int n);

/// Intermediate values of the Jacobi-sum route to a_p for y^2 = x^3 - x.
struct JacobiDefect {
  /// J(chi_4, chi_2) in Z[i] (coefficients of 1 and i).
  std::int64_t j_re;
  std::int64_t j_im;
  /// The associate u*J with u*J = 1 mod (1+i)^3.
  std::int64_t primary_re;
  std::int64_t primary_im;
  std::int64_t a_p;
};

/// a_p of y^2 = x^3 - x from the quartic-times-quadratic Jacobi sum.
/// Throws BadCongruence unless p = 1 mod 4.
JacobiDefect a_p_from_jacobi_detail(Prime p);
std::int64_t a_p_from_jacobi(Prime p);

}  // namespace periodlab
