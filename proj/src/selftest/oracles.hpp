#pragma once

// Brute-force references used by the property suites and unit tests. Each one
// takes the slow, obvious route and shares no code with the library kernels.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace kmd::oracle {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Least e >= 1 with a^e = 1 (mod q) by stepping; 0 if none within q steps.
inline std::uint64_t order(std::uint64_t a, std::uint64_t q) {
  if (q == 1) return 1;
  const std::uint64_t step = a % q;
  std::uint64_t x = step;
  for (std::uint64_t e = 1; e <= q; ++e) {
    if (x == 1) return e;
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * step % q);
  }
  return 0;
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
  unsigned __int128 result = 1 % q, base = a % q;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
  }
  return static_cast<std::uint64_t>(result);
}

/// Least divisor e of `phi` with a^e = 1 (mod q), trying every divisor in
/// increasing order. For moduli where stepping through all powers is too slow.
inline std::uint64_t order_by_divisors(std::uint64_t a, std::uint64_t q, std::uint64_t phi) {
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= phi; ++d) {
    if (phi % d == 0) {
      divisors.push_back(d);
      divisors.push_back(phi / d);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  for (std::uint64_t d : divisors) {
    if (pow_mod(a, d, q) == 1 % q) return d;
  }
  return 0;
}

inline std::uint64_t valuation(const mpz_class& p, mpz_class n) {
  std::uint64_t e = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

inline std::uint64_t radical(std::uint64_t n) {
  std::uint64_t out = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out *= p;
      while (n % p == 0) n /= p;
    }
  }
  return n > 1 ? out * n : out;
}

/// Largest prime factor by trial division; 1 for n = 1.
inline mpz_class largest_prime(mpz_class n) {
  mpz_class best = 1;
  for (mpz_class p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      best = p;
      n /= p;
    }
  }
  return n > 1 ? n : best;
}

/// Digits of x = u/v via x -> frac(m x) on exact rationals.
inline std::vector<std::uint32_t> digits(const mpz_class& u, const mpz_class& v, unsigned m, std::size_t count) {
  mpq_class x(u, v);
  x.canonicalize();
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < count; ++i) {
    x *= m;
    mpz_class d = x.get_num() / x.get_den();
    out.push_back(static_cast<std::uint32_t>(d.get_ui()));
    x -= d;
  }
  return out;
}

struct RationalWalk {
  bool member = false;
  std::optional<std::size_t> first_offending;  // 1-based
  std::size_t pre_period = 0;
  std::size_t period = 0;
};

/// Membership of u/v (v not dividing m^inf) in K_{m,D} by walking exact
/// rational states until one repeats or a digit falls outside D.
inline RationalWalk walk(const mpz_class& u, const mpz_class& v, unsigned m, const std::vector<unsigned>& allowed,
                         bool stop_at_offending = true) {
  mpq_class x(u, v);
  x.canonicalize();
  std::vector<mpq_class> seen;
  std::set<mpq_class> states;
  RationalWalk out;
  while (true) {
    if (states.count(x) != 0) {
      for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i] == x) {
          out.pre_period = i;
          out.period = seen.size() - i;
        }
      }
      out.member = !out.first_offending;
      return out;
    }
    states.insert(x);
    seen.push_back(x);
    x *= m;
    mpz_class d = x.get_num() / x.get_den();
    x -= d;
    bool ok = false;
    for (unsigned a : allowed) ok |= (d == a);
    if (!ok && !out.first_offending) {
      out.first_offending = seen.size();
      if (stop_at_offending) return out;
    }
  }
}

}  // namespace kmd::oracle
