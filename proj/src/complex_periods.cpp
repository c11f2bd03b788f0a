#include "periodlab/complex_periods.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "periodlab/errors.hpp"

namespace periodlab {
namespace {

constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;

std::string curve_label(const EllipticCurveQ& c) { return "y^2 = x^3 + (" + c.a().get_str() + ")x + (" + c.b().get_str() + ")"; }

double newton_polish(double x, double a, double b) {
  for (int it = 0; it < 8; ++it) {
    const double f = (x * x + a) * x + b;
    const double df = 3.0 * x * x + a;
    if (df == 0.0) break;
    const double step = f / df;
    x -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

struct RealTriple {
  double e1, e2, e3;
};

RealTriple require_three_real(const EllipticCurveQ& curve) {
  const RootSet roots = real_roots(curve);
  if (!roots.three_real) {
    throw Error(Errc::ComplexRoots, curve_label(curve) + " has one real root; only the three-real-root case is supported");
  }
  return {roots.real[0], roots.real[1], roots.real[2]};
}

QuadratureOptions split_tolerance(QuadratureOptions opts, int pieces) {
  opts.abs_tol /= pieces;
  return opts;
}

}  // namespace

EllipticCurveQ::EllipticCurveQ(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
  if (discriminant() == 0) throw Error(Errc::SingularCurve, curve_label(*this) + " is singular");
}

mpq_class EllipticCurveQ::discriminant() const {
  mpq_class d = -(4 * a_ * a_ * a_ + 27 * b_ * b_);
  return d;
}

RootSet real_roots(const EllipticCurveQ& curve) {
  const double a = curve.a().get_d();
  const double b = curve.b().get_d();
  if (curve.discriminant() > 0) {
    // Trigonometric form; a < 0 is forced by a positive discriminant.
    const double r = 2.0 * std::sqrt(-a / 3.0);
    const double arg = std::clamp(3.0 * b / (a * r), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    std::vector<double> xs;
    for (int k = 0; k < 3; ++k) xs.push_back(newton_polish(r * std::cos(theta - 2.0 * kPi * k / 3.0), a, b));
    std::sort(xs.begin(), xs.end(), std::greater<>());
    return {true, xs};
  }
  // Cardano with a single real root.
  const double q = b / 2.0;
  const double disc = q * q + a * a * a / 27.0;
  const double s = std::sqrt(std::max(disc, 0.0));
  const double x = std::cbrt(-q + s) + std::cbrt(-q - s);
  return {false, {newton_polish(x, a, b)}};
}

PeriodLattice periods_quadrature(const EllipticCurveQ& curve, const QuadratureOptions& opts) {
  const auto [e1, e2, e3] = require_three_real(curve);
  const double d12 = e1 - e2, d13 = e1 - e3, d23 = e2 - e3;
  const QuadratureOptions piece = split_tolerance(opts, 8);

  // int_{e1}^inf: x = e1 + u^2 on u in [0,1], then u = 1/v on [1, inf).
  const auto near = integrate([&](double u) { return 2.0 / std::sqrt((u * u + d12) * (u * u + d13)); }, 0.0, 1.0, piece);
  const auto far = integrate(
      [&](double v) { return 2.0 / std::sqrt((1.0 + d12 * v * v) * (1.0 + d13 * v * v)); }, 0.0, 1.0, piece);

  // int_{e2}^{e1} dx/sqrt(-f): x = e2 + u^2 below the midpoint, x = e1 - u^2 above it.
  const double reach = std::sqrt(0.5 * d12);
  const auto lower = integrate(
      [&](double u) { return 2.0 / std::sqrt((d12 - u * u) * (d23 + u * u)); }, 0.0, reach, piece);
  const auto upper = integrate(
      [&](double u) { return 2.0 / std::sqrt((d12 - u * u) * (d13 - u * u)); }, 0.0, reach, piece);

  const QuadratureResult real_half = near + far;
  const QuadratureResult imag_half = lower + upper;
  return {cplx(2.0 * real_half.value, 0.0), cplx(0.0, 2.0 * imag_half.value), PeriodMethod::quadrature,
          2.0 * (real_half.abs_error + imag_half.abs_error)};
}

double agm(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw Error(Errc::InvalidArgument, "AGM needs positive arguments");
  for (int it = 0; it < 64; ++it) {
    const double mean = 0.5 * (a + b);
    const double geo = std::sqrt(a * b);
    if (mean == a && geo == b) break;
    if (std::abs(mean - geo) <= std::numeric_limits<double>::epsilon() * mean) {
      a = mean;
      b = geo;
      break;
    }
    a = mean;
    b = geo;
  }
  return 0.5 * (a + b);
}

PeriodLattice periods_agm(const EllipticCurveQ& curve) {
  const auto [e1, e2, e3] = require_three_real(curve);
  // The classical pi / M(...) formulas are for y^2 = 4 f(x); with y^2 = f(x)
  // the form dx/y is twice as large.
  constexpr double kModelScale = 2.0;
  const double omega1 = kModelScale * kPi / agm(std::sqrt(e1 - e3), std::sqrt(e1 - e2));
  const double omega2 = kModelScale * kPi / agm(std::sqrt(e1 - e3), std::sqrt(e2 - e3));
  return {cplx(omega1, 0.0), cplx(0.0, omega2), PeriodMethod::agm, 0.0};
}

std::complex<double> Sl2z::apply(std::complex<double> tau) const {
  return (static_cast<double>(a) * tau + static_cast<double>(b)) / (static_cast<double>(c) * tau + static_cast<double>(d));
}

Sl2z operator*(const Sl2z& x, const Sl2z& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

TauPoint tau_reduce(std::complex<double> tau0) {
  if (!(tau0.imag() > 1e-13)) {
    std::ostringstream msg;
    msg << "Im(tau) = " << tau0.imag() << " is not positive";
    throw Error(Errc::DegenerateLattice, msg.str());
  }
  constexpr double kTie = 1e-12;
  constexpr int kMaxSteps = 10000;
  cplx tau = tau0;
  Sl2z m;
  int steps = 0;
  for (;; ++steps) {
    if (steps >= kMaxSteps) throw Error(Errc::ReductionNoConvergence, "no fundamental-domain point after 10^4 steps");
    const auto shift = static_cast<std::int64_t>(std::round(tau.real()));
    if (shift != 0) {
      m = Sl2z::translation(-shift) * m;
      tau -= static_cast<double>(shift);
    }
    if (std::norm(tau) < 1.0 - kTie) {
      m = Sl2z::inversion() * m;
      tau = -1.0 / tau;
      continue;
    }
    break;
  }
  // Boundary ties go to the right half.
  if (std::abs(tau.real() + 0.5) <= kTie) {
    m = Sl2z::translation(1) * m;
    tau += 1.0;
  }
  if (std::abs(std::abs(tau) - 1.0) <= kTie && tau.real() < -kTie) {
    m = Sl2z::inversion() * m;
    tau = -1.0 / tau;
  }
  return {tau, m, tau0};
}

TauPoint tau_normalize(const PeriodLattice& lattice) {
  if (std::abs(lattice.omega1) == 0.0) throw Error(Errc::DegenerateLattice, "omega1 = 0");
  cplx tau0 = lattice.omega2 / lattice.omega1;
  if (std::abs(tau0.imag()) <= 1e-13) {
    std::ostringstream msg;
    msg << "omega2/omega1 = " << tau0 << " is real";
    throw Error(Errc::DegenerateLattice, msg.str());
  }
  if (tau0.imag() < 0.0) tau0 = -tau0;
  return tau_reduce(tau0);
}

EllipticCurveQ legendre_curve(const mpq_class& t) {
  // x^3 + c2 x^2 + c1 x with c2 = -(1+t), c1 = t; shift x = X - c2/3.
  const mpq_class c2 = -(1 + t);
  const mpq_class c1 = t;
  mpq_class a = c1 - c2 * c2 / 3;
  mpq_class b = 2 * c2 * c2 * c2 / 27 - c2 * c1 / 3;
  a.canonicalize();
  b.canonicalize();
  return {a, b};
}

std::vector<PeriodMapPoint> period_map_legendre(std::vector<mpq_class> t_values, int threads) {
  for (const auto& t : t_values) {
    if (t == 0 || t == 1) throw Error(Errc::DegenerateFamilyMember, "t = " + t.get_str() + " gives a singular member");
    if (t < 0 || t > 1) throw Error(Errc::InvalidArgument, "t = " + t.get_str() + " is outside (0, 1)");
  }
  std::stable_sort(t_values.begin(), t_values.end());
  std::vector<PeriodMapPoint> out(t_values.size());
  const auto n = static_cast<std::int64_t>(t_values.size());
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) if (team > 1) num_threads(team)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto& t = t_values[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = {t, tau_normalize(periods_agm(legendre_curve(t)))};
  }
  return out;
}

std::vector<CatalogEntry> numeric_periods_catalog(int n_max) {
  if (n_max < 2 || n_max > 1000000) {
    throw Error(Errc::InvalidArgument, "n_max must lie in [2, 10^6], got " + std::to_string(n_max));
  }
  const QuadratureOptions opts{1e-13, 4000};
  std::vector<CatalogEntry> out;

  // pi = int_{-1}^{1} dx / sqrt(1 - x^2); each half via x = +-(1 - u^2).
  const auto half = integrate([](double u) { return 2.0 / std::sqrt(2.0 - u * u); }, 0.0, 1.0, opts);
  out.push_back({"pi", 2.0 * half.value, 2.0 * half.abs_error, "A^1", "{-1, 1}", "dx / sqrt(1 - x^2)", "[-1, 1]"});

  // 2 pi i = oint dz/z over the rational parametrization
  // z(s) = ((1 - s^2) + 2 i s) / (1 + s^2) of the unit circle, s in R.
  auto dlog = [](double s) {
    const double w = 1.0 + s * s;
    const cplx z((1.0 - s * s) / w, 2.0 * s / w);
    const cplx dz(-4.0 * s / (w * w), 2.0 * (1.0 - s * s) / (w * w));
    return dz / z;
  };
  auto tail = [&](double v, double sign) { return dlog(sign / v) / (v * v); };
  QuadratureResult re{0.0, 0.0, 0}, im{0.0, 0.0, 0};
  const QuadratureOptions piece = split_tolerance(opts, 2);
  re = re + integrate([&](double s) { return dlog(s).real(); }, -1.0, 1.0, piece);
  im = im + integrate([&](double s) { return dlog(s).imag(); }, -1.0, 1.0, piece);
  for (double sign : {1.0, -1.0}) {
    re = re + integrate([&](double v) { return tail(v, sign).real(); }, 0.0, 1.0, piece);
    im = im + integrate([&](double v) { return tail(v, sign).imag(); }, 0.0, 1.0, piece);
  }
  out.push_back({"2pi", std::abs(cplx(re.value, im.value)), re.abs_error + im.abs_error, "P^1 - {0, inf}", "{}",
                 "dz / z", "unit circle S^1"});

  const int last = std::min(n_max, 21);
  for (int n = 2; n <= last; ++n) {
    const auto r = integrate([](double x) { return 1.0 / x; }, 1.0, static_cast<double>(n), opts);
    out.push_back({"log(" + std::to_string(n) + ")", r.value, r.abs_error, "P^1 - {0, inf}",
                   "{1, " + std::to_string(n) + "}", "dx / x", "[1, " + std::to_string(n) + "]"});
  }
  return out;
}

}  // namespace periodlab
