#include "periodlab/characters.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "periodlab/kernels.hpp"

namespace periodlab {

CharacterTables::CharacterTables(Prime p) : p_(p), dlog_(p.value(), 0), power_(p.value() - 1, 0) {
  const std::uint64_t g = find_primitive_root(p).value();
  std::uint64_t x = 1;
  for (std::uint32_t j = 0; j + 1 < p.value(); ++j) {
    power_[j] = static_cast<std::uint32_t>(x);
    dlog_[x] = j;
    x = mul_mod(x, g, p.value());
  }
}

std::shared_ptr<const CharacterTables> CharacterTables::for_prime(Prime p) {
  if (p.value() > kMaxPrime) {
    throw Error(Errc::UnsupportedPrime,
                "character tables are limited to p <= " + std::to_string(kMaxPrime));
  }
  if (p.value() == 2) throw Error(Errc::NotPrime, "characters require an odd prime");
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const CharacterTables>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[p.value()];
  if (!slot) slot = std::make_shared<const CharacterTables>(p);
  return slot;
}

MultiplicativeCharacter::MultiplicativeCharacter(Prime p, std::int64_t k)
    : tables_(CharacterTables::for_prime(p)), k_(0) {
  const std::int64_t n = static_cast<std::int64_t>(p.value()) - 1;
  std::int64_t r = k % n;
  if (r < 0) r += n;
  k_ = static_cast<std::uint32_t>(r);
}

int MultiplicativeCharacter::order() const noexcept {
  const std::uint32_t n = prime().value() - 1;
  return static_cast<int>(n / std::gcd(k_, n));
}

std::uint32_t MultiplicativeCharacter::exponent_at(std::uint32_t a, int ring) const {
  const std::uint64_t n = prime().value() - 1;
  if (ring <= 0 || ring % order() != 0) {
    throw Error(Errc::MismatchedStructure,
                "ring order " + std::to_string(ring) + " is not a multiple of character order " +
                    std::to_string(order()));
  }
  // zeta_{p-1}^{k j} = zeta_ring^{k j ring / (p-1)}; (p-1) divides k * ring.
  const std::uint64_t kj = mul_mod(k_, tables_->dlog(a), n);
  return static_cast<std::uint32_t>(static_cast<unsigned __int128>(kj) * static_cast<std::uint64_t>(ring) / n %
                                    static_cast<std::uint64_t>(ring));
}

MultiplicativeCharacter MultiplicativeCharacter::operator*(const MultiplicativeCharacter& o) const {
  if (prime() != o.prime()) {
    throw Error(Errc::MismatchedModulus, "characters of F_" + std::to_string(prime().value()) + " and F_" +
                                             std::to_string(o.prime().value()));
  }
  return {prime(), static_cast<std::int64_t>(k_) + o.k_};
}

CyclotomicNumber char_eval(const MultiplicativeCharacter& c, const PrimeFieldElem& a) {
  return char_eval(c, a, c.order());
}

CyclotomicNumber char_eval(const MultiplicativeCharacter& c, const PrimeFieldElem& a, int ring) {
  if (a.prime() != c.prime()) {
    throw Error(Errc::MismatchedModulus, "character of F_" + std::to_string(c.prime().value()) +
                                             " evaluated in F_" + std::to_string(a.prime().value()));
  }
  if (a.is_zero()) return CyclotomicNumber::zero(ring);
  return CyclotomicNumber::root_power(ring, c.exponent_at(a.value(), ring));
}

GaussSumValue gauss_sum(const MultiplicativeCharacter& c) {
  return {kernels::serial::gauss_sum(c.tables(), c.exponent()), c.prime().value()};
}

CyclotomicNumber jacobi_sum(const MultiplicativeCharacter& c, const MultiplicativeCharacter& c2) {
  if (c.prime() != c2.prime()) {
    throw Error(Errc::MismatchedModulus, "characters of F_" + std::to_string(c.prime().value()) + " and F_" +
                                             std::to_string(c2.prime().value()));
  }
  const std::uint32_t p = c.prime().value();
  const int n = std::lcm(c.order(), c2.order());
  // t = 0 and t = 1 contribute 0 since c(0) = 0.
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  for (std::uint32_t t = 2; t < p; ++t) {
    const std::uint32_t e = (c.exponent_at(t, n) + c2.exponent_at(p + 1 - t, n)) % static_cast<std::uint32_t>(n);
    ++counts[e];
  }
  return {n, std::move(counts)};
}

double gauss_jacobi_relation_check(const MultiplicativeCharacter& c, const MultiplicativeCharacter& c2) {
  const MultiplicativeCharacter prod = c * c2;
  if (c.is_trivial() || c2.is_trivial() || prod.is_trivial()) {
    throw Error(Errc::TrivialCharacter, "relation needs c, c' and cc' nontrivial (k1=" +
                                            std::to_string(c.exponent()) + ", k2=" +
                                            std::to_string(c2.exponent()) + ")");
  }
  const std::complex<double> rhs = gauss_sum(c).value * gauss_sum(c2).value / gauss_sum(prod).value;
  return std::abs(jacobi_sum(c, c2).embed() - rhs);
}

}  // namespace periodlab
