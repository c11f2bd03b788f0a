#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace periodlab {

/// Coefficients (constant term first) of the m-th cyclotomic polynomial.
/// Computed once per m by dividing x^m - 1 by the lower Phi_d, then cached.
const std::vector<std::int64_t>& cyclotomic_polynomial(int m);

/// Euler phi, i.e. deg Phi_m.
int euler_phi(int m);

/// Exact element of Z[zeta_m] = Z[x]/(Phi_m(x)), x <-> zeta_m.
///
/// Coefficients are always kept reduced modulo Phi_m, so two equal elements
/// have identical coefficient vectors (length phi(m)). Arithmetic is checked
/// and throws Errc::Overflow instead of wrapping.
class CyclotomicNumber {
 public:
  /// Reduces an arbitrary-length polynomial in zeta_m.
  CyclotomicNumber(int m, std::vector<std::int64_t> poly);

  static CyclotomicNumber zero(int m) { return {m, {}}; }
  static CyclotomicNumber integer(int m, std::int64_t v) { return {m, {v}}; }
  /// zeta_m^k for any integer k.
  static CyclotomicNumber root_power(int m, std::int64_t k);

  int m() const noexcept { return m_; }
  const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }

  CyclotomicNumber operator+(const CyclotomicNumber& o) const;
  CyclotomicNumber operator-(const CyclotomicNumber& o) const;
  CyclotomicNumber operator*(const CyclotomicNumber& o) const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& o);

  /// The automorphism zeta -> zeta^{-1} (complex conjugation under any embedding).
  CyclotomicNumber conj() const;
  /// z * conj(z).
  CyclotomicNumber norm() const { return *this * conj(); }

  /// Image under zeta_m -> exp(2 pi i / m).
  std::complex<double> embed() const;

  bool is_zero() const noexcept;
  /// Value when the element lies in Z.
  std::optional<std::int64_t> as_integer() const noexcept;

  /// Same element viewed in Z[zeta_target]; target must be a multiple of m.
  CyclotomicNumber lift_to(int target) const;

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.m_ == b.m_ && a.c_ == b.c_;
  }

 private:
  void require_same(const CyclotomicNumber& o) const;

  int m_;
  std::vector<std::int64_t> c_;
};

}  // namespace periodlab
