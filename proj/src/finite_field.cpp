#include "periodlab/finite_field.hpp"

#include <array>
#include <cmath>
#include <string>

namespace periodlab {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // This base set is a proven witness set for all 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Prime Prime::checked(std::int64_t p) {
  if (p >= kLimit) {
    throw Error(Errc::UnsupportedPrime, std::to_string(p) + " exceeds 2^31");
  }
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  }
  return Prime(static_cast<std::uint32_t>(p));
}

PrimeFieldElem::PrimeFieldElem(Prime p, std::int64_t value) : p_(p), v_(0) {
  if (p.value() == 2) throw Error(Errc::NotPrime, "F_p requires an odd prime, got 2");
  const std::int64_t m = p.value();
  std::int64_t r = value % m;
  if (r < 0) r += m;
  v_ = static_cast<std::uint32_t>(r);
}

void PrimeFieldElem::require_same(const PrimeFieldElem& o) const {
  if (p_ != o.p_) {
    throw Error(Errc::MismatchedModulus,
                "operands in F_" + std::to_string(p_.value()) + " and F_" + std::to_string(o.p_.value()));
  }
}

PrimeFieldElem PrimeFieldElem::operator+(const PrimeFieldElem& o) const {
  require_same(o);
  return {p_, static_cast<std::int64_t>(v_) + o.v_};
}

PrimeFieldElem PrimeFieldElem::operator-(const PrimeFieldElem& o) const {
  require_same(o);
  return {p_, static_cast<std::int64_t>(v_) - o.v_};
}

PrimeFieldElem PrimeFieldElem::operator*(const PrimeFieldElem& o) const {
  require_same(o);
  return {p_, static_cast<std::int64_t>(mul_mod(v_, o.v_, p_.value()))};
}

PrimeFieldElem PrimeFieldElem::operator-() const { return {p_, -static_cast<std::int64_t>(v_)}; }

PrimeFieldElem PrimeFieldElem::pow(std::uint64_t exp) const {
  return {p_, static_cast<std::int64_t>(pow_mod(v_, exp, p_.value()))};
}

PrimeFieldElem PrimeFieldElem::inv() const {
  if (v_ == 0) throw Error(Errc::DivisionByZero, "inverse of 0 in F_" + std::to_string(p_.value()));
  // Extended Euclid on (v, p).
  std::int64_t r0 = p_.value(), r1 = v_;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  return {p_, t0};
}

std::uint64_t PrimeFieldElem::order() const {
  if (v_ == 0) return 0;
  std::uint64_t ord = p_.value() - 1;
  for (std::uint64_t q : prime_factors(ord)) {
    while (ord % q == 0 && pow_mod(v_, ord / q, p_.value()) == 1) ord /= q;
  }
  return ord;
}

PrimeFieldElem find_primitive_root(Prime p) {
  const std::uint64_t n = p.value() - 1;
  const auto factors = prime_factors(n);
  for (std::uint64_t g = 2; g < p.value(); ++g) {
    bool generator = true;
    for (std::uint64_t q : factors) {
      if (pow_mod(g, n / q, p.value()) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return {p, static_cast<std::int64_t>(g)};
  }
  // p = 3: 2 is caught by the loop; nothing else reaches here for odd p.
  return {p, 1};
}

int legendre_symbol(const PrimeFieldElem& a) {
  if (a.is_zero()) return 0;
  const std::uint32_t p = a.prime().value();
  return pow_mod(a.value(), (p - 1) / 2, p) == 1 ? 1 : -1;
}

PrimeFieldElem GaussianQuotient::reduce(std::int64_t x, std::int64_t y) const {
  const Prime p = sqrt_minus_one.prime();
  return PrimeFieldElem(p, x) + PrimeFieldElem(p, y) * sqrt_minus_one;
}

GaussianQuotient iso_gaussian_residue(Prime p) {
  if (p.value() % 4 != 1) {
    throw Error(Errc::BadCongruence, std::to_string(p.value()) + " is not 1 mod 4");
  }
  const PrimeFieldElem u = find_primitive_root(p).pow((p.value() - 1) / 4);

  // Cornacchia: Euclid on (p, u) down to the first remainder below sqrt(p).
  std::int64_t r0 = p.value(), r1 = u.value();
  while (r1 * r1 > static_cast<std::int64_t>(p.value())) {
    const std::int64_t r = r0 % r1;
    r0 = r1;
    r1 = r;
  }
  const std::int64_t a = r1;
  const std::int64_t b2 = static_cast<std::int64_t>(p.value()) - a * a;
  auto b = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(b2))));
  while (b * b > b2) --b;
  while ((b + 1) * (b + 1) <= b2) ++b;

  // Pick the associate of a +/- b*i that lies in the kernel and has re > |im|.
  for (std::int64_t sign : {1, -1}) {
    const std::int64_t x = a, y = sign * b;
    const std::array<std::array<std::int64_t, 2>, 4> associates{{{x, y}, {-y, x}, {-x, -y}, {y, -x}}};
    for (const auto& [re, im] : associates) {
      GaussianQuotient q{u, re, im};
      if (re > 0 && re > (im < 0 ? -im : im) && q.reduce(re, im).is_zero()) return q;
    }
  }
  throw Error(Errc::InvalidArgument, "no Gaussian factor found for " + std::to_string(p.value()));
}

}  // namespace periodlab
