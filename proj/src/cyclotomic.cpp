#include "periodlab/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "periodlab/errors.hpp"

namespace periodlab {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "cyclotomic coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "cyclotomic coefficient overflow");
  return r;
}

using Poly = std::vector<std::int64_t>;

// Exact quotient of num by a monic divisor.
Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

Poly compute_cyclotomic(int m) {
  Poly num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) num = divide_exact(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

void require_order(int m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "root-of-unity order must be >= 1, got " + std::to_string(m));
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int m) {
  require_order(m);
  static std::mutex mu;
  static std::map<int, Poly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  // Computed outside the lock: the recursion re-enters for each divisor.
  Poly phi = compute_cyclotomic(m);
  std::lock_guard lock(mu);
  return cache.try_emplace(m, std::move(phi)).first->second;
}

int euler_phi(int m) {
  require_order(m);
  int result = m;
  int n = m;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      while (n % q == 0) n /= q;
      result -= result / q;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicNumber::CyclotomicNumber(int m, std::vector<std::int64_t> poly) : m_(m) {
  const Poly& phi = cyclotomic_polynomial(m);
  const std::size_t d = phi.size() - 1;
  // x^m = 1, so fold exponents mod m before dividing by Phi_m.
  if (poly.size() > static_cast<std::size_t>(m)) {
    for (std::size_t i = static_cast<std::size_t>(m); i < poly.size(); ++i) {
      auto& dst = poly[i % static_cast<std::size_t>(m)];
      dst = checked_add(dst, poly[i]);
    }
    poly.resize(static_cast<std::size_t>(m));
  }
  for (std::size_t i = poly.size(); i-- > d;) {
    const std::int64_t c = poly[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      auto& dst = poly[i - d + j];
      dst = checked_add(dst, -checked_mul(c, phi[j]));
    }
    poly[i] = 0;
  }
  poly.resize(d, 0);
  c_ = std::move(poly);
}

CyclotomicNumber CyclotomicNumber::root_power(int m, std::int64_t k) {
  require_order(m);
  std::int64_t e = k % m;
  if (e < 0) e += m;
  Poly poly(static_cast<std::size_t>(e) + 1, 0);
  poly[static_cast<std::size_t>(e)] = 1;
  return {m, std::move(poly)};
}

void CyclotomicNumber::require_same(const CyclotomicNumber& o) const {
  if (m_ != o.m_) {
    throw Error(Errc::MismatchedStructure,
                "Z[zeta_" + std::to_string(m_) + "] vs Z[zeta_" + std::to_string(o.m_) + "]");
  }
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  require_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
  CyclotomicNumber r = *this;
  r += o;
  return r;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
  require_same(o);
  CyclotomicNumber r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_add(c_[i], -o.c_[i]);
  return r;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
  require_same(o);
  Poly prod(c_.size() + o.c_.size(), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      prod[i + j] = checked_add(prod[i + j], checked_mul(c_[i], o.c_[j]));
    }
  }
  return {m_, std::move(prod)};
}

CyclotomicNumber CyclotomicNumber::conj() const {
  Poly poly(static_cast<std::size_t>(m_), 0);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    poly[(static_cast<std::size_t>(m_) - j) % static_cast<std::size_t>(m_)] = c_[j];
  }
  return {m_, std::move(poly)};
}

std::complex<double> CyclotomicNumber::embed() const {
  std::complex<double> z{0.0, 0.0};
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / m_;
    z += static_cast<double>(c_[j]) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

bool CyclotomicNumber::is_zero() const noexcept {
  for (auto c : c_) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<std::int64_t> CyclotomicNumber::as_integer() const noexcept {
  for (std::size_t j = 1; j < c_.size(); ++j) {
    if (c_[j] != 0) return std::nullopt;
  }
  return c_.empty() ? 0 : c_[0];
}

CyclotomicNumber CyclotomicNumber::lift_to(int target) const {
  require_order(target);
  if (target % m_ != 0) {
    throw Error(Errc::MismatchedStructure,
                std::to_string(m_) + " does not divide " + std::to_string(target));
  }
  const std::size_t step = static_cast<std::size_t>(target / m_);
  Poly poly(c_.size() == 0 ? 0 : (c_.size() - 1) * step + 1, 0);
  for (std::size_t j = 0; j < c_.size(); ++j) poly[j * step] = c_[j];
  return {target, std::move(poly)};
}

}  // namespace periodlab
