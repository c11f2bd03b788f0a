#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "periodlab/quadrature.hpp"

namespace periodlab {

/// y^2 = x^3 + a x + b over Q.
class EllipticCurveQ {
 public:
  /// Throws SingularCurve when 4a^3 + 27b^2 = 0.
  EllipticCurveQ(mpq_class a, mpq_class b);

  const mpq_class& a() const noexcept { return a_; }
  const mpq_class& b() const noexcept { return b_; }
  /// -(4a^3 + 27b^2); positive iff the cubic has three real roots.
  mpq_class discriminant() const;

 private:
  mpq_class a_;
  mpq_class b_;
};

struct RootSet {
  bool three_real;
  /// Real roots, descending (e1 > e2 > e3 when three_real).
  std::vector<double> real;
};

RootSet real_roots(const EllipticCurveQ& curve);

enum class PeriodMethod { agm, quadrature };

/// Generators of the period lattice of dx/y.
struct PeriodLattice {
  std::complex<double> omega1;
  std::complex<double> omega2;
  PeriodMethod method;
  /// Summed quadrature error estimate; 0 for AGM.
  double error_estimate = 0.0;
};

/// omega1 = 2 int_{e1}^inf dx/sqrt(f), omega2 = 2i int_{e2}^{e1} dx/sqrt(-f).
/// Throws ComplexRoots for curves with a single real root.
PeriodLattice periods_quadrature(const EllipticCurveQ& curve, const QuadratureOptions& opts = {});

/// Arithmetic-geometric mean iterated to its floating fixed point.
double agm(double a, double b);

/// Same lattice as periods_quadrature, via two AGMs.
PeriodLattice periods_agm(const EllipticCurveQ& curve);

/// Integer matrix (a b; c d) acting by tau -> (a tau + b) / (c tau + d).
struct Sl2z {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static Sl2z translation(std::int64_t n) { return {1, n, 0, 1}; }
  static Sl2z inversion() { return {0, -1, 1, 0}; }

  std::int64_t det() const noexcept { return a * d - b * c; }
  Sl2z inverse() const noexcept { return {d, -b, -c, a}; }
  std::complex<double> apply(std::complex<double> tau) const;

  friend Sl2z operator*(const Sl2z& x, const Sl2z& y);
  friend bool operator==(const Sl2z&, const Sl2z&) = default;
};

struct TauPoint {
  /// Reduced representative: |tau| >= 1, -1/2 < Re tau <= 1/2, Re tau >= 0 on |tau| = 1.
  std::complex<double> tau;
  /// transform.apply(raw) == tau.
  Sl2z transform;
  /// omega2 / omega1, oriented into the upper half-plane.
  std::complex<double> raw;
};

/// SL2(Z) reduction of a point of the upper half-plane.
/// Throws DegenerateLattice for Im tau <= 1e-13, ReductionNoConvergence past 10^4 steps.
TauPoint tau_reduce(std::complex<double> tau0);

/// Reduces omega2/omega1; a lattice with Im(omega2/omega1) < 0 is reoriented
/// by omega2 -> -omega2 first.
TauPoint tau_normalize(const PeriodLattice& lattice);

/// y^2 = x(x-1)(x-t), moved to the depressed frame x -> x + (1+t)/3.
EllipticCurveQ legendre_curve(const mpq_class& t);

struct PeriodMapPoint {
  mpq_class t;
  TauPoint tau;
};

/// t -> reduced tau(t) via AGM periods, sorted by t. Members are independent
/// and run on `threads` OpenMP threads (1 = serial, 0 = default team).
/// Throws DegenerateFamilyMember for t in {0, 1}, InvalidArgument outside (0, 1).
std::vector<PeriodMapPoint> period_map_legendre(std::vector<mpq_class> t_values, int threads = 1);

/// One elementary period with the quadruple (X, D, omega, gamma) it comes from.
struct CatalogEntry {
  std::string name;
  double value;
  double abs_error;
  std::string variety;
  std::string divisor;
  std::string form;
  std::string chain;
};

/// pi, 2 pi and log n for n = 2..min(n_max, 21). Requires 2 <= n_max <= 10^6.
std::vector<CatalogEntry> numeric_periods_catalog(int n_max);

}  // namespace periodlab
