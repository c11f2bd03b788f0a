#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "periodlab/cyclotomic.hpp"
#include "periodlab/finite_field.hpp"

namespace periodlab {

/// Discrete-log and power tables of F_p^x against the canonical primitive
/// root. Built once per prime and shared read-only between threads.
class CharacterTables {
 public:
  /// Largest prime for which tables are built (two word arrays of size p).
  static constexpr std::uint32_t kMaxPrime = 1U << 22;

  static std::shared_ptr<const CharacterTables> for_prime(Prime p);

  Prime prime() const noexcept { return p_; }
  std::uint32_t generator() const noexcept { return power_[1]; }
  /// log_g(a) for a in [1, p-1].
  std::uint32_t dlog(std::uint32_t a) const { return dlog_[a]; }
  /// g^j for j in [0, p-2].
  std::uint32_t power(std::uint32_t j) const { return power_[j]; }

  explicit CharacterTables(Prime p);

 private:
  Prime p_;
  std::vector<std::uint32_t> dlog_;
  std::vector<std::uint32_t> power_;
};

/// c(g^j) = zeta_{p-1}^{k j}, c(0) = 0.
class MultiplicativeCharacter {
 public:
  /// k is taken mod p-1.
  MultiplicativeCharacter(Prime p, std::int64_t k);

  Prime prime() const noexcept { return tables_->prime(); }
  std::uint32_t exponent() const noexcept { return k_; }
  int order() const noexcept;
  bool is_trivial() const noexcept { return k_ == 0; }
  const CharacterTables& tables() const noexcept { return *tables_; }

  /// For a != 0: the e with c(a) = zeta_ring^e. ring must be a multiple of order().
  std::uint32_t exponent_at(std::uint32_t a, int ring) const;

  /// Pointwise product; exponents add mod p-1.
  MultiplicativeCharacter operator*(const MultiplicativeCharacter& o) const;

  friend bool operator==(const MultiplicativeCharacter& a, const MultiplicativeCharacter& b) {
    return a.prime() == b.prime() && a.k_ == b.k_;
  }

 private:
  std::shared_ptr<const CharacterTables> tables_;
  std::uint32_t k_;
};

/// c(a) in Z[zeta_order(c)].
CyclotomicNumber char_eval(const MultiplicativeCharacter& c, const PrimeFieldElem& a);
/// c(a) in Z[zeta_ring]; ring must be a multiple of order(c).
CyclotomicNumber char_eval(const MultiplicativeCharacter& c, const PrimeFieldElem& a, int ring);

struct GaussSumValue {
  std::complex<double> value;
  std::uint32_t p;
};

/// g(c) = sum_{t=1}^{p-1} c(t) exp(2 pi i t / p), summed in ascending t.
GaussSumValue gauss_sum(const MultiplicativeCharacter& c);

/// J(c, c') = sum_t c(t) c'(1 - t), exact in Z[zeta_n], n = lcm(order c, order c').
CyclotomicNumber jacobi_sum(const MultiplicativeCharacter& c, const MultiplicativeCharacter& c2);

/// |J(c,c') - g(c) g(c') / g(cc')| under zeta_n -> exp(2 pi i / n).
/// Throws TrivialCharacter when c, c' or cc' is trivial.
double gauss_jacobi_relation_check(const MultiplicativeCharacter& c, const MultiplicativeCharacter& c2);

}  // namespace periodlab
