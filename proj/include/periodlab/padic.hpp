#pragma once

#include <gmpxx.h>

#include <string>

#include "periodlab/finite_field.hpp"

namespace periodlab {

/// Element of Z_p known modulo p^N, stored as one residue in [0, p^N).
class PadicInt {
 public:
  static constexpr int kMaxPrecision = 64;

  /// Reduces any integer mod p^N. Throws InvalidArgument unless 1 <= N <= 64.
  PadicInt(Prime p, int precision, const mpz_class& value);
  PadicInt(Prime p, int precision, long value) : PadicInt(p, precision, mpz_class(value)) {}

  Prime prime() const noexcept { return p_; }
  int precision() const noexcept { return n_; }
  const mpz_class& value() const noexcept { return v_; }
  /// p^N.
  const mpz_class& modulus() const noexcept { return mod_; }

  /// Largest k <= N with p^k | value; N for zero ("at least N").
  int valuation() const;
  bool is_unit() const { return valuation() == 0; }

  PadicInt operator+(const PadicInt& o) const;
  PadicInt operator-(const PadicInt& o) const;
  PadicInt operator*(const PadicInt& o) const;
  PadicInt operator-() const;
  PadicInt pow(unsigned long e) const;

  /// Newton iteration x <- x (2 - a x) from the inverse mod p; digits double per step.
  /// Throws NonUnit when v > 0.
  PadicInt inv() const;

  /// value / p at precision N - 1. Throws InvalidArgument when v = 0 and
  /// InsufficientPrecision when N = 1.
  PadicInt divide_by_p() const;

  /// Same element at a lower precision.
  PadicInt truncate(int precision) const;

  friend bool operator==(const PadicInt& a, const PadicInt& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.v_ == b.v_;
  }

 private:
  void require_same(const PadicInt& o) const;

  Prime p_;
  int n_;
  mpz_class mod_;
  mpz_class v_;
};

/// The unique omega = a (mod p) with omega^p = omega, by iterating x <- x^p.
PadicInt teichmuller(const PadicInt& a);

/// delta(x) = (x - x^p) / p at precision N - 1 (Frobenius on Z_p is the identity).
PadicInt delta_p(const PadicInt& x);

/// [x^p + y^p - (x + y)^p] / p, exact.
mpz_class cp_cocycle(Prime p, const mpz_class& x, const mpz_class& y);

enum class FrobeniusLift { phi1, phi2 };

struct FrobeniusVerdict {
  /// phi(x) mod p^N.
  PadicInt phi;
  /// (phi(x) - x^p) / p at precision N - 1: 0 for phi1, x for phi2.
  PadicInt delta_component;
  bool reduces_to_frobenius;
  bool delta_matches_lift;
};

/// phi1(x) = x^p, phi2(x) = x^p + p x.
FrobeniusVerdict frobenius_lift_check(FrobeniusLift variant, const PadicInt& x);

struct DeltaRulesVerdict {
  PadicInt delta_x;
  PadicInt delta_y;
  PadicInt delta_sum;
  PadicInt delta_product;
  /// delta(x+y) = delta(x) + delta(y) + C_p(x, y) mod p^(N-1).
  bool sum_rule;
  /// delta(xy) = x^p delta(y) + y^p delta(x) + p delta(x) delta(y) mod p^(N-1).
  bool product_rule;
};

DeltaRulesVerdict delta_rules_check(const PadicInt& x, const PadicInt& y);

}  // namespace periodlab
