#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace kmd {

/// Arbitrary-precision non-negative integer.
using Natural = mpz_class;

struct PrimePower {
  Natural prime;
  std::uint64_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes and positive exponents.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> factors);

  const std::vector<PrimePower>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }
  auto begin() const { return factors_.begin(); }
  auto end() const { return factors_.end(); }

  Natural value() const;
  Natural radical() const;
  /// Exponent of `p`, zero when absent.
  std::uint64_t exponent_of(const Natural& p) const;

  /// Multiset union: exponents of shared primes add.
  void merge(const Factorization& other);
  /// Drops every prime dividing `m`.
  Factorization without_primes_of(const Natural& m) const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> factors_;
};

// Primality and factorization.

/// Primes up to 10^6, built once on first use.
std::span<const std::uint32_t> small_primes();

/// Miller-Rabin. Deterministic below 2^64; above that the fixed base set makes
/// a composite slipping through astronomically unlikely.
bool is_prime(const Natural& n);
bool is_prime(std::uint64_t n);

/// Rejects n = 0. factorize(1) is empty.
Factorization factorize(const Natural& n);

Natural radical(const Natural& n);
Natural largest_prime_factor(const Natural& n);

// Valuations and parts.

/// Largest e with p^e | n. Rejects n = 0.
std::uint64_t nu(const Natural& p, const Natural& n);

/// (A, m^inf): the part of A supported on primes dividing m.
Natural m_part(const Natural& a, const Natural& m);
/// A / (A, m^inf); always coprime to m.
Natural coprime_part(const Natural& a, const Natural& m);

Natural digit_sum(const Natural& n, unsigned long base);
/// Legendre: nu_p(n!) = (n - s_p(n)) / (p - 1).
Natural factorial_valuation(const Natural& n, unsigned long p);
/// nu_p(C(2n, n)).
Natural binomial_central_valuation(const Natural& n, unsigned long p);
/// Number of carries when adding n + n in base p (Kummer).
std::uint64_t doubling_carries(const Natural& n, unsigned long p);

// Multiplicative orders.

/// Least tau >= 1 with a^tau = 1 (mod q); order(a, 1) = 1.
/// Rejects gcd(a, q) != 1 and q = 0.
Natural order(const Natural& a, const Natural& q);
Natural order(const Natural& a, const Factorization& q);

/// Order of a modulo a prime p, by divisor descent over p - 1.
Natural order_mod_prime(const Natural& a, const Natural& p);

/// Order of a modulo p^k. Odd p lifts ord_p(a) with the exponent overhead,
/// p = 2 squares within the 2-group directly. Rejects p | a.
Natural order_prime_power(const Natural& a, const Natural& p, std::uint64_t k);

/// nu_p(a^{ord_p(a)} - 1) for odd p, p not dividing a, a^{ord_p(a)} != 1.
std::uint64_t lifting_overhead(const Natural& a, const Natural& p);

/// t_2(a) = nu_2(a^2 - 1) - 1 for odd a != +-1.
std::uint64_t two_adic_overhead(const Natural& a);

Natural lcm_of(const Natural& a, const Natural& b);

/// Largest e with base^e <= x, for x >= 1 and base >= 2.
std::uint64_t floor_log(const Natural& base, const Natural& x);
std::uint64_t floor_log(const Natural& base, const mpq_class& x);

}  // namespace kmd
