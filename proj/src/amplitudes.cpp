#include "periodlab/amplitudes.hpp"

#include <omp.h>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "periodlab/characters.hpp"
#include "periodlab/curve_counts.hpp"
#include "periodlab/errors.hpp"

namespace periodlab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleTol = 1e-12;

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// n with |x + n| <= tol, n >= 0.
std::optional<int> near_pole(double x) {
  const double n = -std::round(x);
  if (n >= 0.0 && std::abs(x + n) <= kPoleTol) return static_cast<int>(n);
  return std::nullopt;
}

std::string show(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

}  // namespace

double gamma_fn(double x) {
  if (is_nonpositive_integer(x)) throw Error(Errc::PoleAtNonpositiveInteger, "Gamma(" + show(x) + ")");
  if (x >= 1.0 && x <= 171.0 && x == std::floor(x)) {
    double f = 1.0;
    for (double k = 2.0; k < x; k += 1.0) f *= k;
    return f;
  }
  if (x < 0.5) return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
  const double z = x - 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (z + static_cast<double>(i));
  const double t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

double beta_fn(double alpha, double beta) {
  for (double x : {alpha, beta, alpha + beta}) {
    if (is_nonpositive_integer(x)) {
      throw Error(Errc::PoleAtNonpositiveInteger, "B(" + show(alpha) + ", " + show(beta) + ")");
    }
  }
  return gamma_fn(alpha) * gamma_fn(beta) / gamma_fn(alpha + beta);
}

QuadratureResult beta_quadrature(double alpha, double beta, const QuadratureOptions& opts) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw Error(Errc::InvalidArgument, "beta quadrature needs alpha, beta > 0");
  QuadratureOptions piece = opts;
  piece.abs_tol /= 2.0;
  // [0, 1/2]: t = u^(1/alpha), integrand (1/alpha) (1 - t)^(beta - 1).
  const auto left = integrate(
      [&](double u) { return std::pow(1.0 - std::pow(u, 1.0 / alpha), beta - 1.0) / alpha; }, 0.0,
      std::pow(0.5, alpha), piece);
  // [1/2, 1]: 1 - t = v^(1/beta), integrand (1/beta) t^(alpha - 1).
  const auto right = integrate(
      [&](double v) { return std::pow(1.0 - std::pow(v, 1.0 / beta), alpha - 1.0) / beta; }, 0.0,
      std::pow(0.5, beta), piece);
  return left + right;
}

double pole_residue_closed_form(double beta, int n) {
  double r = (n % 2 == 0) ? 1.0 : -1.0;
  for (int j = 1; j <= n; ++j) r *= (beta - j) / j;
  return r;
}

AmplitudeValue veneziano(const MandelstamInput& m) {
  const double a = m.alpha(), b = m.beta();
  const auto pa = near_pole(a);
  const auto pb = near_pole(b);
  constexpr double kInf = std::numeric_limits<double>::infinity();

  if (pa && pb) return {kInf, true, pa};  // double pole, direction dependent
  if (pa || pb) {
    const int n = pa ? *pa : *pb;
    const double other = pa ? b : a;
    // A positive integer partner m <= n cancels the pole: B(-n, m) = (m-1)! / prod_{j<m} (j - n).
    const double rounded = std::round(other);
    if (std::abs(other - rounded) <= kPoleTol && rounded >= 1.0 && rounded <= n) {
      const int mm = static_cast<int>(rounded);
      double v = 1.0;
      for (int j = 1; j < mm; ++j) v *= j;
      for (int j = 0; j < mm; ++j) v /= (j - n);
      return {v, false, std::nullopt};
    }
    const double residue = pole_residue_closed_form(other, n);
    return {residue < 0.0 ? -kInf : kInf, true, n};
  }
  if (near_pole(a + b)) return {0.0, false, std::nullopt};
  return {beta_fn(a, b), false, std::nullopt};
}

std::vector<PoleResidue> pole_scan(double beta_fixed, int n_max) {
  if (n_max < 0 || n_max > 12) throw Error(Errc::InvalidArgument, "n_max must lie in [0, 12]");
  const double frac = std::abs(beta_fixed - std::round(beta_fixed));
  if (frac < 1e-6) throw Error(Errc::InvalidArgument, "beta = " + show(beta_fixed) + " must not be an integer");

  // eps * B(-n + eps, beta) is analytic in eps within min(1, frac) of 0.
  const double h0 = 0.125 * std::min(1.0, frac);
  constexpr int kLevels = 8;
  std::vector<PoleResidue> out;
  for (int n = 0; n <= n_max; ++n) {
    std::array<double, kLevels> prev{}, cur{};
    double h = h0;
    for (int k = 0; k < kLevels; ++k, h *= 0.5) {
      cur[0] = h * beta_fn(-n + h, beta_fixed);
      // Halving steps: column j removes the h^j error term.
      double factor = 2.0;
      for (int j = 1; j <= k; ++j, factor *= 2.0) {
        cur[j] = cur[j - 1] + (cur[j - 1] - prev[j - 1]) / (factor - 1.0);
      }
      prev = cur;
    }
    out.push_back({n, cur[kLevels - 1], pole_residue_closed_form(beta_fixed, n)});
  }
  return out;
}

std::vector<DictionaryRow> correspondence_dictionary() {
  return {
      {"Gamma(alpha)", "g(c)"},
      {"B(alpha, beta) = Gamma(alpha) Gamma(beta) / Gamma(alpha + beta)", "J(c, c') = g(c) g(c') / g(c c')"},
      {"int_0^1 t^(alpha-1) (1-t)^(beta-1) dt", "sum_t c(t) c'(1 - t)"},
      {"alpha + beta", "c c'"},
      {"pole of A at alpha = -n", "trivial c c' (relation breaks down)"},
  };
}

CorrespondenceReport correspondence_table(Prime p, const std::vector<double>& s_grid, int threads) {
  if (p.value() > 97) throw Error(Errc::InvalidArgument, "correspondence table needs p <= 97");
  if (s_grid.size() > 100) throw Error(Errc::InvalidArgument, "grid has more than 100 values");

  CorrespondenceReport report{p.value(), {}, std::nullopt, {}, correspondence_dictionary()};
  const std::uint32_t n = p.value() - 1;

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t k1 = 1; k1 < n; ++k1) {
    for (std::uint32_t k2 = 1; k2 < n; ++k2) {
      if ((k1 + k2) % n != 0) pairs.emplace_back(k1, k2);
    }
  }
  // Warm the shared table before the parallel region.
  (void)CharacterTables::for_prime(p);
  std::vector<std::optional<LocalRow>> rows(pairs.size());
  const int team = threads > 0 ? threads : omp_get_max_threads();
  const auto count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 8) if (team > 1) num_threads(team)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto [k1, k2] = pairs[static_cast<std::size_t>(i)];
    CyclotomicNumber j = jacobi_sum(MultiplicativeCharacter(p, k1), MultiplicativeCharacter(p, k2));
    const bool ok = j.norm().as_integer() == static_cast<std::int64_t>(p.value());
    rows[static_cast<std::size_t>(i)] = LocalRow{k1, k2, std::move(j), ok};
  }
  for (auto& r : rows) report.local.push_back(std::move(*r));

  if (p.value() % 4 == 1) {
    const CountResult count_result = count_points(WeierstrassCurveFp(p, -1, 0), threads);
    report.defect = DefectRow{a_p_from_jacobi(p), count_result.a_p, count_result.n_points};
  }

  for (double s : s_grid) {
    for (double t : s_grid) report.global.push_back({s, t, veneziano({s, t})});
  }
  return report;
}

}  // namespace periodlab
