#include <algorithm>
#include <stdexcept>

#include "kmd/numtheory.hpp"

namespace kmd {

namespace {

void require_positive(const Natural& n, const char* what) {
  if (sgn(n) <= 0) throw std::invalid_argument(std::string(what) + ": argument must be positive");
}

Natural pow_ui(const Natural& base, std::uint64_t e) {
  Natural out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Natural pow_mod(const Natural& base, const Natural& e, const Natural& mod) {
  Natural out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  return out;
}

Natural gcd_of(const Natural& a, const Natural& b) {
  Natural g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].exponent == 0) throw std::invalid_argument("Factorization: zero exponent");
    if (i > 0 && factors_[i].prime == factors_[i - 1].prime) {
      throw std::invalid_argument("Factorization: repeated prime");
    }
  }
}

Natural Factorization::value() const {
  Natural out = 1;
  for (const auto& [p, e] : factors_) out *= pow_ui(p, e);
  return out;
}

Natural Factorization::radical() const {
  Natural out = 1;
  for (const auto& f : factors_) out *= f.prime;
  return out;
}

std::uint64_t Factorization::exponent_of(const Natural& p) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                             [](const PrimePower& f, const Natural& q) { return f.prime < q; });
  return (it != factors_.end() && it->prime == p) ? it->exponent : 0;
}

void Factorization::merge(const Factorization& other) {
  std::vector<PrimePower> out;
  out.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->prime < b->prime)) {
      out.push_back(*a++);
    } else if (a == factors_.end() || b->prime < a->prime) {
      out.push_back(*b++);
    } else {
      out.push_back({a->prime, a->exponent + b->exponent});
      ++a;
      ++b;
    }
  }
  factors_ = std::move(out);
}

Factorization Factorization::without_primes_of(const Natural& m) const {
  std::vector<PrimePower> kept;
  for (const auto& f : factors_) {
    if (!mpz_divisible_p(m.get_mpz_t(), f.prime.get_mpz_t())) kept.push_back(f);
  }
  return Factorization(std::move(kept));
}

Natural radical(const Natural& n) {
  require_positive(n, "radical");
  return factorize(n).radical();
}

Natural largest_prime_factor(const Natural& n) {
  require_positive(n, "largest_prime_factor");
  const auto f = factorize(n);
  return f.empty() ? Natural(1) : f.factors().back().prime;
}

std::uint64_t nu(const Natural& p, const Natural& n) {
  require_positive(n, "nu");
  if (p < 2) throw std::invalid_argument("nu: p must be at least 2");
  Natural rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

Natural m_part(const Natural& a, const Natural& m) {
  require_positive(a, "m_part");
  if (m < 2) throw std::invalid_argument("m_part: m must be at least 2");
  Natural part = 1;
  Natural rest = a;
  for (Natural g = gcd_of(rest, m); g > 1; g = gcd_of(rest, m)) {
    rest /= g;
    part *= g;
  }
  return part;
}

Natural coprime_part(const Natural& a, const Natural& m) { return a / m_part(a, m); }

Natural digit_sum(const Natural& n, unsigned long base) {
  if (base < 2) throw std::invalid_argument("digit_sum: base must be at least 2");
  if (sgn(n) < 0) throw std::invalid_argument("digit_sum: n must be non-negative");
  Natural rest = n;
  Natural sum = 0;
  while (sgn(rest) > 0) sum += mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), base);
  return sum;
}

Natural factorial_valuation(const Natural& n, unsigned long p) {
  if (p < 2) throw std::invalid_argument("factorial_valuation: p must be prime");
  return (n - digit_sum(n, p)) / (p - 1);
}

Natural binomial_central_valuation(const Natural& n, unsigned long p) {
  require_positive(n, "binomial_central_valuation");
  return factorial_valuation(2 * n, p) - 2 * factorial_valuation(n, p);
}

std::uint64_t doubling_carries(const Natural& n, unsigned long p) {
  Natural rest = n;
  unsigned long carry = 0;
  std::uint64_t carries = 0;
  while (sgn(rest) > 0 || carry > 0) {
    const unsigned long digit = mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    carry = (2 * digit + carry) >= p ? 1 : 0;
    carries += carry;
  }
  return carries;
}

Natural lcm_of(const Natural& a, const Natural& b) {
  Natural out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Natural order_mod_prime(const Natural& a, const Natural& p) {
  const Natural residue = a % p;
  if (residue == 0) throw std::domain_error("order_mod_prime: p divides a");
  Natural d = p - 1;
  if (d == 1) return d;
  for (const auto& [r, e] : factorize(d)) {
    for (std::uint64_t i = 0; i < e; ++i) {
      const Natural candidate = d / r;
      if (pow_mod(residue, candidate, p) != 1) break;
      d = candidate;
    }
  }
  return d;
}

Natural order_prime_power(const Natural& a, const Natural& p, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("order_prime_power: k must be positive");
  if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
    throw std::domain_error("order_prime_power: p divides a");
  }
  if (p == 2) {
    // (Z/2^k)^x is a 2-group, so squaring reaches 1 within k steps.
    const Natural mod = pow_ui(2, k);
    Natural x = a % mod;
    std::uint64_t s = 0;
    while (x != 1) {
      x = x * x % mod;
      ++s;
    }
    return pow_ui(2, s);
  }
  const Natural d = order_mod_prime(a, p);
  if (k == 1) return d;
  // Only whether t >= k matters, so a^d - 1 is examined modulo p^(k+1).
  const Natural x = pow_mod(a, d, pow_ui(p, k + 1));
  const std::uint64_t t = (x == 1) ? k + 1 : nu(p, x - 1);
  return t >= k ? d : d * pow_ui(p, k - t);
}

std::uint64_t lifting_overhead(const Natural& a, const Natural& p) {
  if (p == 2) throw std::invalid_argument("lifting_overhead: p must be odd");
  if (a == 1) throw std::domain_error("lifting_overhead: a^d - 1 vanishes for a = 1");
  const Natural d = order_mod_prime(a, p);
  std::uint64_t t = 1;
  for (Natural mod = p * p; pow_mod(a, d, mod) == 1; mod *= p) ++t;
  return t;
}

std::uint64_t two_adic_overhead(const Natural& a) {
  if (mpz_even_p(a.get_mpz_t()) || a <= 1) {
    throw std::domain_error("two_adic_overhead: a must be odd and greater than 1");
  }
  return nu(2, a * a - 1) - 1;
}

Natural order(const Natural& a, const Factorization& q) {
  Natural result = 1;
  for (const auto& [p, e] : q) {
    result = lcm_of(result, order_prime_power(a, p, e));
  }
  return result;
}

Natural order(const Natural& a, const Natural& q) {
  require_positive(q, "order");
  if (gcd_of(a, q) != 1) throw std::domain_error("order: gcd(a, q) must be 1");
  if (q == 1) return 1;
  return order(a, factorize(q));
}

std::uint64_t floor_log(const Natural& base, const Natural& x) {
  if (base < 2) throw std::invalid_argument("floor_log: base must be at least 2");
  if (x < 1) throw std::invalid_argument("floor_log: x must be at least 1");
  std::uint64_t e = 0;
  for (Natural pw = base; pw <= x; pw *= base) ++e;
  return e;
}

std::uint64_t floor_log(const Natural& base, const mpq_class& x) {
  // base^e is an integer, so base^e <= x iff base^e <= floor(x).
  Natural whole;
  mpz_fdiv_q(whole.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return floor_log(base, whole);
}

}  // namespace kmd
