#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "periodlab/cyclotomic.hpp"
#include "periodlab/finite_field.hpp"
#include "periodlab/quadrature.hpp"

namespace periodlab {

/// Lanczos approximation (g = 7, 9 terms) with reflection below 1/2.
/// Positive integers up to 171 take the factorial product directly.
/// Throws PoleAtNonpositiveInteger at 0, -1, -2, ...
double gamma_fn(double x);

/// Gamma(a) Gamma(b) / Gamma(a + b). Throws PoleAtNonpositiveInteger when a,
/// b or a + b is a nonpositive integer.
double beta_fn(double alpha, double beta);

/// int_0^1 t^(a-1) (1-t)^(b-1) dt for a, b > 0, with t = u^(1/a) near 0 and
/// 1 - t = v^(1/b) near 1 so both endpoint powers disappear.
QuadratureResult beta_quadrature(double alpha, double beta, const QuadratureOptions& opts = {});

/// Squared momenta s12 = (k1+k2)^2, s34 = (k3+k4)^2 in dimensionless units.
struct MandelstamInput {
  double s12;
  double s34;

  double alpha() const noexcept { return -1.0 + s12; }
  double beta() const noexcept { return -1.0 + s34; }
};

struct AmplitudeValue {
  /// Finite value, or +-infinity at a pole (sign of the limit alpha -> -n from above).
  double value;
  bool at_pole;
  std::optional<int> pole_index;
};

/// A = B(alpha, beta). Poles are tagged data, never errors.
AmplitudeValue veneziano(const MandelstamInput& m);

struct PoleResidue {
  int n;
  double residue;
  /// (-1)^n / n! * prod_{j=1..n} (beta - j).
  double closed_form;
};

/// Residue of A in alpha at alpha = -n, n = 0..n_max, as the Richardson
/// limit of eps * A(-n + eps, beta). Requires non-integer beta and n_max <= 12.
std::vector<PoleResidue> pole_scan(double beta_fixed, int n_max);

double pole_residue_closed_form(double beta, int n);

struct LocalRow {
  std::uint32_t k1;
  std::uint32_t k2;
  CyclotomicNumber jacobi;
  /// J conj(J) == p exactly.
  bool norm_ok;
};

struct DefectRow {
  std::int64_t a_p_jacobi;
  std::int64_t a_p_count;
  std::int64_t n_points;
};

struct GlobalRow {
  double s;
  double t;
  AmplitudeValue amplitude;
};

struct DictionaryRow {
  std::string global;
  std::string local;
};

struct CorrespondenceReport {
  std::uint32_t p;
  std::vector<LocalRow> local;
  /// Present when p = 1 mod 4 (curve y^2 = x^3 - x).
  std::optional<DefectRow> defect;
  std::vector<GlobalRow> global;
  std::vector<DictionaryRow> dictionary;
};

/// Fixed structural dictionary between the two sides.
std::vector<DictionaryRow> correspondence_dictionary();

/// Local side: every J(c, c') with c, c', cc' nontrivial, plus a_p when
/// p = 1 mod 4. Global side: A(s, t) on grid x grid. No numerical identity
/// between the sides is asserted. Requires p <= 97 and at most 100 grid values.
CorrespondenceReport correspondence_table(Prime p, const std::vector<double>& s_grid, int threads = 1);

}  // namespace periodlab
