#include "periodlab/padic.hpp"

#include <string>

namespace periodlab {
namespace {

mpz_class power_of(Prime p, int n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p.value(), static_cast<unsigned long>(n));
  return r;
}

mpz_class reduce(const mpz_class& v, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

void require_delta_precision(const PadicInt& x) {
  if (x.precision() < 2) {
    throw Error(Errc::InsufficientPrecision, "p-derivation needs N >= 2, got N = " + std::to_string(x.precision()));
  }
}

}  // namespace

PadicInt::PadicInt(Prime p, int precision, const mpz_class& value) : p_(p), n_(precision) {
  if (precision < 1 || precision > kMaxPrecision) {
    throw Error(Errc::InvalidArgument, "precision must lie in [1, 64], got " + std::to_string(precision));
  }
  mod_ = power_of(p, precision);
  v_ = reduce(value, mod_);
}

int PadicInt::valuation() const {
  if (v_ == 0) return n_;
  return static_cast<int>(mpz_remove(mpz_class().get_mpz_t(), v_.get_mpz_t(), mpz_class(p_.value()).get_mpz_t()));
}

void PadicInt::require_same(const PadicInt& o) const {
  if (p_ != o.p_ || n_ != o.n_) {
    throw Error(Errc::MismatchedStructure, "Z_" + std::to_string(p_.value()) + "/p^" + std::to_string(n_) +
                                               " vs Z_" + std::to_string(o.p_.value()) + "/p^" +
                                               std::to_string(o.n_));
  }
}

PadicInt PadicInt::operator+(const PadicInt& o) const {
  require_same(o);
  return {p_, n_, mpz_class(v_ + o.v_)};
}

PadicInt PadicInt::operator-(const PadicInt& o) const {
  require_same(o);
  return {p_, n_, mpz_class(v_ - o.v_)};
}

PadicInt PadicInt::operator*(const PadicInt& o) const {
  require_same(o);
  return {p_, n_, mpz_class(v_ * o.v_)};
}

PadicInt PadicInt::operator-() const { return {p_, n_, mpz_class(-v_)}; }

PadicInt PadicInt::pow(unsigned long e) const {
  mpz_class r;
  mpz_powm_ui(r.get_mpz_t(), v_.get_mpz_t(), e, mod_.get_mpz_t());
  return {p_, n_, r};
}

PadicInt PadicInt::inv() const {
  if (!is_unit()) {
    throw Error(Errc::NonUnit, "inverse of an element with valuation " + std::to_string(valuation()));
  }
  // Inverse mod p, then Newton steps with doubling precision.
  const mpz_class p(p_.value());
  mpz_class x;
  mpz_invert(x.get_mpz_t(), mpz_class(v_ % p).get_mpz_t(), p.get_mpz_t());
  for (int digits = 1; digits < n_;) {
    digits = std::min(2 * digits, n_);
    const mpz_class m = power_of(p_, digits);
    x = reduce(x * (2 - v_ * x), m);
  }
  return {p_, n_, x};
}

PadicInt PadicInt::divide_by_p() const {
  if (n_ < 2) throw Error(Errc::InsufficientPrecision, "cannot divide by p at precision 1");
  if (is_unit()) throw Error(Errc::InvalidArgument, "division by p of a unit");
  mpz_class q;
  mpz_divexact_ui(q.get_mpz_t(), v_.get_mpz_t(), p_.value());
  return {p_, n_ - 1, q};
}

PadicInt PadicInt::truncate(int precision) const {
  if (precision > n_) {
    throw Error(Errc::InsufficientPrecision,
                "cannot raise precision " + std::to_string(n_) + " to " + std::to_string(precision));
  }
  return {p_, precision, v_};
}

PadicInt teichmuller(const PadicInt& a) {
  if (!a.is_unit()) throw Error(Errc::NonUnit, "Teichmuller lift of a non-unit");
  PadicInt x = a;
  // Each step fixes one more digit, so N + 1 steps always suffice.
  for (int it = 0; it <= a.precision(); ++it) {
    PadicInt next = x.pow(a.prime().value());
    if (next == x) break;
    x = std::move(next);
  }
  return x;
}

PadicInt delta_p(const PadicInt& x) {
  require_delta_precision(x);
  // x^p = x mod p (Fermat), so the difference is divisible by p.
  const PadicInt diff = x - x.pow(x.prime().value());
  if (diff.value() == 0) return {x.prime(), x.precision() - 1, 0L};
  return diff.divide_by_p();
}

mpz_class cp_cocycle(Prime p, const mpz_class& x, const mpz_class& y) {
  const unsigned long e = p.value();
  mpz_class xp, yp, sp;
  mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), e);
  mpz_pow_ui(yp.get_mpz_t(), y.get_mpz_t(), e);
  mpz_pow_ui(sp.get_mpz_t(), mpz_class(x + y).get_mpz_t(), e);
  mpz_class num = xp + yp - sp;
  mpz_class q;
  mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), e);
  return q;
}

FrobeniusVerdict frobenius_lift_check(FrobeniusLift variant, const PadicInt& x) {
  require_delta_precision(x);
  const Prime p = x.prime();
  const int n = x.precision();
  const PadicInt frob = x.pow(p.value());
  const PadicInt phi = variant == FrobeniusLift::phi1 ? frob : frob + PadicInt(p, n, static_cast<long>(p.value())) * x;

  const mpz_class pz(p.value());
  const bool reduces = mpz_class(phi.value() % pz) == mpz_class(frob.value() % pz);
  const PadicInt diff = phi - frob;
  const PadicInt delta = diff.value() == 0 ? PadicInt(p, n - 1, 0L) : diff.divide_by_p();
  const PadicInt expected = variant == FrobeniusLift::phi1 ? PadicInt(p, n - 1, 0L) : x.truncate(n - 1);
  return {phi, delta, reduces, delta == expected};
}

DeltaRulesVerdict delta_rules_check(const PadicInt& x, const PadicInt& y) {
  require_delta_precision(x);
  require_delta_precision(y);
  if (x.prime() != y.prime() || x.precision() != y.precision()) {
    throw Error(Errc::MismatchedStructure, "delta rules need operands of equal (p, N)");
  }
  const Prime p = x.prime();
  const int low = x.precision() - 1;
  const unsigned long e = p.value();

  const PadicInt dx = delta_p(x), dy = delta_p(y);
  const PadicInt ds = delta_p(x + y), dm = delta_p(x * y);

  const PadicInt cocycle(p, low, cp_cocycle(p, x.value(), y.value()));
  const bool sum_rule = ds == dx + dy + cocycle;

  const PadicInt xp = x.truncate(low).pow(e), yp = y.truncate(low).pow(e);
  const PadicInt pp(p, low, static_cast<long>(e));
  const bool product_rule = dm == xp * dy + yp * dx + pp * dx * dy;
  return {dx, dy, ds, dm, sum_rule, product_rule};
}

}  // namespace periodlab
