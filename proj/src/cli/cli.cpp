#include "cli.hpp"

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "output.hpp"
#include "periodlab/amplitudes.hpp"
#include "periodlab/characters.hpp"
#include "periodlab/complex_periods.hpp"
#include "periodlab/curve_counts.hpp"
#include "periodlab/errors.hpp"
#include "periodlab/finite_field.hpp"
#include "periodlab/kernels.hpp"
#include "periodlab/padic.hpp"

namespace periodlab::cli {
namespace {

// Flag values shared by all subcommands; each subcommand registers the ones it reads.
struct Flags {
  std::int64_t p = 0;
  std::int64_t k1 = 0, k2 = 0;
  std::optional<std::int64_t> k1_set;
  std::string curve;
  int n = 1;
  double s = 0.0, t = 0.0;
  std::string t_list = "1/4,1/3,1/2,2/3,3/4";
  std::string grid;
  int precision = 8;
  double tol = 1e-11;
  std::string format;
  int jobs = 1;
  std::string x, y;
  std::string rule = "both";
  bool have_s = false, have_t = false, have_y = false, have_grid = false;
};

// Exact rational from "n", "n/d" or a finite decimal such as "-0.25".
std::optional<mpq_class> parse_rational(const std::string& text) {
  static const std::regex frac(R"(([+-]?\d+)(?:/(\d+))?)");
  static const std::regex dec(R"(([+-]?)(\d*)\.(\d+))");
  std::smatch m;
  if (std::regex_match(text, m, frac)) {
    mpq_class q;
    // Base 10 explicitly: GMP would read a leading 0 as octal.
    q.get_num() = mpz_class(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str(), 10);
    q.get_den() = m[2].matched ? mpz_class(m[2].str(), 10) : mpz_class(1);
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return q;
  }
  if (std::regex_match(text, m, dec)) {
    const mpz_class num(m[2].str() + m[3].str(), 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, m[3].length());
    mpq_class q(m[1].str() == "-" ? mpz_class(-num) : num, den);
    q.canonicalize();
    return q;
  }
  return std::nullopt;
}

mpz_class parse_integer(const std::string& text) {
  return mpz_class(!text.empty() && text.front() == '+' ? text.substr(1) : text, 10);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  if (s.empty()) return parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (s.back() == sep) parts.emplace_back();
  return parts;
}

std::optional<std::vector<mpq_class>> parse_rational_list(const std::string& s) {
  std::vector<mpq_class> out;
  for (const auto& part : split(s, ',')) {
    auto q = parse_rational(part);
    if (!q) return std::nullopt;
    out.push_back(*q);
  }
  return out;
}

std::optional<std::vector<double>> parse_real_list(const std::string& s) {
  std::vector<double> out;
  for (const auto& part : split(s, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (used != part.size() || !std::isfinite(v)) return std::nullopt;
    out.push_back(v);
  }
  return out;
}

// CLI11 validators return an empty string on success.
std::string check_prime(const std::string& v) {
  try {
    std::size_t used = 0;
    const long long n = std::stoll(v, &used);
    if (used == v.size() && n > 1 && is_prime(static_cast<std::uint64_t>(n))) return {};
  } catch (const std::exception&) {
  }
  return v + " is not a prime";
}

std::string check_curve(const std::string& v) {
  const auto parts = split(v, ',');
  if (parts.size() == 2 && parse_rational(parts[0]) && parse_rational(parts[1])) return {};
  return "expected a,b (two rationals separated by a comma), got '" + v + "'";
}

std::string check_rational_list(const std::string& v) {
  return parse_rational_list(v) ? std::string() : "expected comma-separated rationals, got '" + v + "'";
}

std::string check_real_list(const std::string& v) {
  return parse_real_list(v) ? std::string() : "expected comma-separated reals, got '" + v + "'";
}

std::string check_integer(const std::string& v) {
  return std::regex_match(v, std::regex(R"([+-]?\d+)")) ? std::string() : "expected an integer, got '" + v + "'";
}

std::pair<mpq_class, mpq_class> curve_rationals(const Flags& f) {
  const auto parts = split(f.curve, ',');
  return {*parse_rational(parts[0]), *parse_rational(parts[1])};
}

// Local curves take residues; a fraction n/d is read as n * d^-1 mod p.
std::pair<std::int64_t, std::int64_t> curve_residues(const Flags& f) {
  const auto [a, b] = curve_rationals(f);
  const mpz_class p(static_cast<long>(f.p));
  auto residue = [&](const mpq_class& q) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), p.get_mpz_t()) == 0) {
      throw Error(Errc::DivisionByZero, "denominator of " + q.get_str() + " vanishes mod " + p.get_str());
    }
    mpz_class r = q.get_num() * inv % p;
    if (r < 0) r += p;
    return static_cast<std::int64_t>(r.get_si());
  };
  return {residue(a), residue(b)};
}

Json complex_json(Json& row, const std::string& key, std::complex<double> z) {
  row[key + "_re"] = number(z.real());
  row[key + "_im"] = number(z.imag());
  return row;
}

Json matrix_json(const Sl2z& m) { return Json::array({m.a, m.b, m.c, m.d}); }

Json amplitude_json(const AmplitudeValue& a) {
  Json row = Json::object();
  row["A"] = number(a.value);
  row["at_pole"] = a.at_pole;
  row["n"] = a.pole_index ? Json(*a.pole_index) : Json(nullptr);
  return row;
}

// ---- subcommands

Report cmd_gauss(const Flags& f) {
  const Prime p = Prime::checked(f.p);
  Report r{"gauss", {}, {{"gauss", {}}}, {}};
  const auto tables = CharacterTables::for_prime(p);
  std::vector<std::uint32_t> ks;
  std::vector<std::complex<double>> values;
  if (f.k1_set) {
    const MultiplicativeCharacter c(p, f.k1);
    ks.push_back(c.exponent());
    values.push_back(gauss_sum(c).value);
  } else {
    values = f.jobs == 1 ? kernels::serial::gauss_sums(*tables) : kernels::omp::gauss_sums(*tables, f.jobs);
    for (std::uint32_t k = 0; k < values.size(); ++k) ks.push_back(k);
  }
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const MultiplicativeCharacter c(p, ks[i]);
    Json row = {{"p", f.p}, {"k", ks[i]}, {"order", c.order()}};
    complex_json(row, "g", values[i]);
    const double norm = std::norm(values[i]);
    row["norm"] = number(norm);
    row["norm_error"] = c.is_trivial() ? Json(nullptr) : number(std::abs(norm - static_cast<double>(f.p)));
    r.tables[0].rows.push_back(std::move(row));
  }
  return r;
}

Report cmd_jacobi(const Flags& f) {
  const Prime p = Prime::checked(f.p);
  const MultiplicativeCharacter c1(p, f.k1), c2(p, f.k2);
  const CyclotomicNumber j = jacobi_sum(c1, c2);
  const auto norm = j.norm().as_integer();
  Json row = {{"p", f.p}, {"k1", c1.exponent()}, {"k2", c2.exponent()}, {"m", j.m()}, {"J", j.coeffs()},
              {"norm", norm ? Json(*norm) : Json(nullptr)}};
  complex_json(row, "J", j.embed());
  const bool defined = !c1.is_trivial() && !c2.is_trivial() && !(c1 * c2).is_trivial();
  row["residual"] = defined ? number(gauss_jacobi_relation_check(c1, c2)) : Json(nullptr);
  return {"jacobi", {}, {{"jacobi", {row}}}, {}};
}

Report cmd_count(const Flags& f) {
  const auto [a, b] = curve_residues(f);
  const WeierstrassCurveFp c(Prime::checked(f.p), a, b);
  const auto res = count_points(c, f.jobs);
  Json row = {{"p", f.p}, {"a", c.a().value()}, {"b", c.b().value()}, {"Np", res.n_points}, {"ap", res.a_p}};
  if (f.n != 1) {
    row["n"] = f.n;
    row["Npn"] = count_points_ext(c, f.n, f.jobs);
  }
  return {"count", {}, {{"count", {row}}}, {}};
}

Report cmd_zeta(const Flags& f) {
  const auto [a, b] = curve_residues(f);
  const WeierstrassCurveFp c(Prime::checked(f.p), a, b);
  const auto z = zeta_data(c, f.jobs);
  Json row = {{"p", f.p}, {"a", c.a().value()}, {"b", c.b().value()}, {"Np", f.p + 1 - z.a_p}, {"ap", z.a_p}};
  complex_json(row, "alpha", z.alpha);
  complex_json(row, "beta", z.beta);
  row["abs_alpha"] = number(std::abs(z.alpha));
  const std::int64_t s2 = zeta_power_sum(z.a_p, f.p, 2);
  row["alpha2_plus_beta2"] = s2;
  row["Np2_from_zeta"] = f.p * f.p + 1 - s2;
  return {"zeta", {}, {{"zeta", {row}}}, {}};
}

Report cmd_apjacobi(const Flags& f) {
  const Prime p = Prime::checked(f.p);
  const auto d = a_p_from_jacobi_detail(p);
  const auto count = count_points(WeierstrassCurveFp(p, -1, 0), f.jobs);
  Json row = {{"p", f.p},
              {"J_re", d.j_re},
              {"J_im", d.j_im},
              {"primary_re", d.primary_re},
              {"primary_im", d.primary_im},
              {"ap", d.a_p},
              {"Np", count.n_points},
              {"ap_count", count.a_p},
              {"match", d.a_p == count.a_p}};
  return {"apjacobi", {}, {{"apjacobi", {row}}}, {}};
}

Json lattice_row(const PeriodLattice& l) {
  Json row = {{"method", l.method == PeriodMethod::agm ? "agm" : "quadrature"}};
  complex_json(row, "omega1", l.omega1);
  complex_json(row, "omega2", l.omega2);
  row["error_estimate"] = number(l.error_estimate);
  return row;
}

Report cmd_periods(const Flags& f) {
  const auto [a, b] = curve_rationals(f);
  const EllipticCurveQ c(a, b);
  QuadratureOptions opts;
  opts.abs_tol = f.tol;
  return {"periods", {}, {{"periods", {lattice_row(periods_agm(c)), lattice_row(periods_quadrature(c, opts))}}}, {}};
}

Report cmd_tau(const Flags& f) {
  const auto [a, b] = curve_rationals(f);
  const EllipticCurveQ c(a, b);
  const auto lattice = periods_agm(c);
  const auto t = tau_normalize(lattice);
  Json row = {{"a", a.get_str()}, {"b", b.get_str()}};
  complex_json(row, "omega1", lattice.omega1);
  complex_json(row, "omega2", lattice.omega2);
  complex_json(row, "tau_raw", t.raw);
  row["tau_re"] = number(t.tau.real());
  row["tau_im"] = number(t.tau.imag());
  row["matrix"] = matrix_json(t.transform);
  return {"tau", {}, {{"tau", {row}}}, {}};
}

Report cmd_periodmap(const Flags& f) {
  Report r{"periodmap", {}, {{"periodmap", {}}}, {}};
  for (const auto& pt : period_map_legendre(*parse_rational_list(f.t_list), f.jobs)) {
    r.tables[0].rows.push_back({{"t", pt.t.get_str()},
                                {"t_value", number(pt.t.get_d())},
                                {"tau_re", number(pt.tau.tau.real())},
                                {"tau_im", number(pt.tau.tau.imag())},
                                {"matrix", matrix_json(pt.tau.transform)}});
  }
  return r;
}

Report cmd_catalog(const Flags& f) {
  Report r{"catalog", {}, {{"catalog", {}}}, {}};
  for (const auto& e : numeric_periods_catalog(f.n)) {
    r.tables[0].rows.push_back({{"name", e.name},
                                {"value", number(e.value)},
                                {"abs_error", number(e.abs_error)},
                                {"variety", e.variety},
                                {"divisor", e.divisor},
                                {"form", e.form},
                                {"chain", e.chain}});
  }
  return r;
}

Json veneziano_row(double s, double t) {
  const MandelstamInput m{s, t};
  Json row = {{"s", number(s)}, {"t", number(t)}, {"alpha", number(m.alpha())}, {"beta", number(m.beta())}};
  row.update(amplitude_json(veneziano(m)));
  return row;
}

Report cmd_veneziano(const Flags& f) {
  Report r{"veneziano", {}, {{"veneziano", {}}}, {}};
  if (f.have_grid) {
    const auto grid = *parse_real_list(f.grid);
    for (double s : grid) {
      for (double t : grid) r.tables[0].rows.push_back(veneziano_row(s, t));
    }
  } else {
    r.tables[0].rows.push_back(veneziano_row(f.s, f.t));
  }
  return r;
}

Report cmd_beta(const Flags& f) {
  const double a = f.s, b = f.t;
  Json row = {{"alpha", number(a)}, {"beta", number(b)}};
  const double gamma_form = beta_fn(a, b);
  row["B"] = number(gamma_form);
  if (a > 0.0 && b > 0.0) {
    QuadratureOptions opts;
    opts.abs_tol = f.tol;
    const auto q = beta_quadrature(a, b, opts);
    row["quadrature"] = number(q.value);
    row["abs_error"] = number(q.abs_error);
    row["difference"] = number(std::abs(q.value - gamma_form));
  } else {
    row["quadrature"] = nullptr;
    row["abs_error"] = nullptr;
    row["difference"] = nullptr;
  }
  return {"beta", {}, {{"beta", {row}}}, {}};
}

Report cmd_poles(const Flags& f) {
  Report r{"poles", {}, {{"poles", {}}}, {}};
  for (const auto& pr : pole_scan(f.t, f.n)) {
    r.tables[0].rows.push_back({{"n", pr.n},
                                {"residue", number(pr.residue)},
                                {"closed_form", number(pr.closed_form)},
                                {"difference", number(std::abs(pr.residue - pr.closed_form))}});
  }
  return r;
}

Report cmd_correspond(const Flags& f) {
  const auto grid = *parse_real_list(f.grid);
  const auto rep = correspondence_table(Prime::checked(f.p), grid, f.jobs);
  Report r{"correspond", {}, {}, {}};
  Table local{"local", {}}, defect{"defect", {}}, global{"global", {}}, dict{"dictionary", {}};
  for (const auto& row : rep.local) {
    local.rows.push_back({{"k1", row.k1}, {"k2", row.k2}, {"m", row.jacobi.m()}, {"J", row.jacobi.coeffs()},
                          {"norm_ok", row.norm_ok}});
  }
  if (rep.defect) {
    defect.rows.push_back({{"curve", "y^2 = x^3 - x"},
                           {"a_p_jacobi", rep.defect->a_p_jacobi},
                           {"a_p_count", rep.defect->a_p_count},
                           {"Np", rep.defect->n_points}});
  }
  for (const auto& g : rep.global) {
    Json row = {{"s", number(g.s)}, {"t", number(g.t)}};
    row.update(amplitude_json(g.amplitude));
    global.rows.push_back(std::move(row));
  }
  for (const auto& d : rep.dictionary) dict.rows.push_back({{"global", d.global}, {"local", d.local}});
  r.tables = {std::move(local), std::move(defect), std::move(global), std::move(dict)};
  return r;
}

Report cmd_delta(const Flags& f) {
  const Prime p = Prime::checked(f.p);
  const PadicInt x(p, f.precision, parse_integer(f.x));
  Report r{"delta", {}, {{"delta", {}}}, {}};
  Json row = {{"p", f.p}, {"N", f.precision}, {"x", x.value().get_str()}};
  if (!f.have_y) {
    const auto d = delta_p(x);
    const auto v1 = frobenius_lift_check(FrobeniusLift::phi1, x);
    const auto v2 = frobenius_lift_check(FrobeniusLift::phi2, x);
    row["delta"] = d.value().get_str();
    row["delta_precision"] = d.precision();
    row["phi1"] = v1.phi.value().get_str();
    row["phi2"] = v2.phi.value().get_str();
    row["phi2_delta"] = v2.delta_component.value().get_str();
    row["phi1_reduces_to_frobenius"] = v1.reduces_to_frobenius;
    row["phi2_reduces_to_frobenius"] = v2.reduces_to_frobenius;
    row["lift_deltas_ok"] = v1.delta_matches_lift && v2.delta_matches_lift;
    r.tables[0].rows.push_back(std::move(row));
    return r;
  }
  const PadicInt y(p, f.precision, parse_integer(f.y));
  const auto v = delta_rules_check(x, y);
  row["y"] = y.value().get_str();
  row["delta_x"] = v.delta_x.value().get_str();
  row["delta_y"] = v.delta_y.value().get_str();
  row["delta_precision"] = v.delta_x.precision();
  if (f.rule != "product") {
    mpz_class cp = cp_cocycle(p, x.value(), y.value()) % v.delta_x.modulus();
    if (cp < 0) cp += v.delta_x.modulus();
    row["delta_sum"] = v.delta_sum.value().get_str();
    row["cp"] = cp.get_str();
    row["sum_rule"] = v.sum_rule;
  }
  if (f.rule != "sum") {
    row["delta_product"] = v.delta_product.value().get_str();
    row["product_rule"] = v.product_rule;
  }
  r.tables[0].rows.push_back(std::move(row));
  return r;
}

// ---- registration

struct Command {
  CLI::App* app;
  std::function<Report(const Flags&)> handler;
  Format default_format;
};

void add_p(CLI::App* s, Flags& f) {
  s->add_option("--p", f.p, "prime")->required()->check(CLI::Validator(check_prime, "PRIME"));
}
void add_curve(CLI::App* s, Flags& f, const char* help) {
  s->add_option("--curve", f.curve, help)->required()->check(CLI::Validator(check_curve, "A,B"));
}
void add_jobs(CLI::App* s, Flags& f) {
  s->add_option("--jobs", f.jobs, "threads (0 = OpenMP default, 1 = serial)")->check(CLI::NonNegativeNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periods, characters and p-adic tools", "periodlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PERIODLAB_VERSION);
  Flags f;
  std::map<std::string, Command> commands;

  auto sub = [&](const std::string& name, const std::string& help, auto handler, Format fmt = Format::json) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--format", f.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
    commands[name] = {s, handler, fmt};
    return s;
  };

  auto* gauss = sub("gauss", "Gauss sums g(c_k)", cmd_gauss);
  add_p(gauss, f);
  gauss->add_option("--k1", f.k1_set, "character exponent (default: all)");
  add_jobs(gauss, f);

  auto* jacobi = sub("jacobi", "exact Jacobi sum J(c_k1, c_k2)", cmd_jacobi);
  add_p(jacobi, f);
  jacobi->add_option("--k1", f.k1)->required();
  jacobi->add_option("--k2", f.k2)->required();

  auto* count = sub("count", "point count of y^2 = x^3 + ax + b over F_p", cmd_count);
  add_p(count, f);
  add_curve(count, f, "residues a,b");
  count->add_option("--n", f.n, "extension degree (1 or 2)");
  add_jobs(count, f);

  auto* zeta = sub("zeta", "zeta numerator 1 - a_p T + p T^2", cmd_zeta);
  add_p(zeta, f);
  add_curve(zeta, f, "residues a,b");
  add_jobs(zeta, f);

  auto* ap = sub("apjacobi", "a_p of y^2 = x^3 - x from J(chi_4, chi_2)", cmd_apjacobi);
  add_p(ap, f);
  add_jobs(ap, f);

  auto* periods = sub("periods", "period lattice by AGM and by quadrature", cmd_periods);
  add_curve(periods, f, "rationals a,b");
  periods->add_option("--tol", f.tol, "quadrature tolerance")->check(CLI::PositiveNumber);

  auto* tau = sub("tau", "reduced tau = omega2 / omega1", cmd_tau);
  add_curve(tau, f, "rationals a,b");

  auto* pmap = sub("periodmap", "tau(t) for y^2 = x(x-1)(x-t)", cmd_periodmap);
  pmap->add_option("--t", f.t_list, "comma-separated rationals in (0, 1)")
      ->check(CLI::Validator(check_rational_list, "T,..."));
  add_jobs(pmap, f);

  auto* catalog = sub("catalog", "elementary periods pi, 2 pi, log n", cmd_catalog, Format::md);
  catalog->add_option("--n", f.n, "largest n for log n (default 10)");

  auto* ven = sub("veneziano", "A(s, t) = B(s - 1, t - 1)", cmd_veneziano);
  ven->add_option("--s", f.s, "s12")->each([&](const std::string&) { f.have_s = true; });
  ven->add_option("--t", f.t, "s34")->each([&](const std::string&) { f.have_t = true; });
  ven->add_option("--grid", f.grid, "comma-separated reals; evaluates grid x grid")
      ->check(CLI::Validator(check_real_list, "S,..."))
      ->each([&](const std::string&) { f.have_grid = true; });

  auto* beta = sub("beta", "B(alpha, beta) by Gamma and by quadrature", cmd_beta);
  beta->add_option("--s", f.s, "alpha")->required();
  beta->add_option("--t", f.t, "beta")->required();
  beta->add_option("--tol", f.tol, "quadrature tolerance")->check(CLI::PositiveNumber);

  auto* poles = sub("poles", "residues of A at alpha = -n", cmd_poles);
  poles->add_option("--t", f.t, "fixed beta (non-integer)")->required();
  poles->add_option("--n", f.n, "largest n (default 5)");

  auto* corr = sub("correspond", "Jacobi sums beside Veneziano amplitudes", cmd_correspond, Format::md);
  add_p(corr, f);
  corr->add_option("--grid", f.grid, "comma-separated s values")->check(CLI::Validator(check_real_list, "S,..."));
  add_jobs(corr, f);

  auto* delta = sub("delta", "p-derivation, Frobenius lifts and the sum/product rules", cmd_delta);
  add_p(delta, f);
  delta->add_option("--precision", f.precision, "p-adic digits N (2..64)")->check(CLI::Range(2, 64));
  delta->add_option("--x", f.x, "integer")->required()->check(CLI::Validator(check_integer, "INT"));
  delta->add_option("--y", f.y, "second integer for the sum and product rules")
      ->check(CLI::Validator(check_integer, "INT"))
      ->each([&](const std::string&) { f.have_y = true; });
  delta->add_option("--rule", f.rule, "sum, product or both")->check(CLI::IsMember({"sum", "product", "both"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);  // --help, --help-all, --version
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const auto it = std::find_if(commands.begin(), commands.end(), [](const auto& c) { return c.second.app->parsed(); });
  Command& cmd = it->second;
  const std::string name = it->first;

  // Per-subcommand defaults and cross-flag checks.
  if (name == "catalog" && !catalog->count("--n")) f.n = 10;
  if (name == "poles" && !poles->count("--n")) f.n = 5;
  if (name == "veneziano" && !f.have_grid && !(f.have_s && f.have_t)) {
    err << "usage error: veneziano needs --s and --t, or --grid\n";
    return 2;
  }
  if (name == "delta" && f.rule != "both" && !f.have_y) {
    err << "usage error: --rule needs --y\n";
    return 2;
  }

  // Flags as given, in registration order; --format and --jobs do not change results.
  Json params = Json::object();
  for (const CLI::Option* opt : cmd.app->get_options()) {
    const std::string flag = opt->get_name();
    if (opt->count() == 0 || flag == "--help" || flag == "--format" || flag == "--jobs") continue;
    params[flag.substr(2)] = opt->as<std::string>();
  }

  Format format = cmd.default_format;
  if (f.format == "json") format = Format::json;
  if (f.format == "csv") format = Format::csv;
  if (f.format == "md") format = Format::md;

  try {
    Report r = cmd.handler(f);
    r.params = std::move(params);
    write(r, format, out);
    return 0;
  } catch (const Error& e) {
    if (format == Format::json) {
      Report r{name, std::move(params), {}, {e.what()}};
      r.tables.push_back({name, {}});
      write(r, format, out);
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace periodlab::cli
