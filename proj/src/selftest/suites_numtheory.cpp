#include <algorithm>
#include <map>
#include <random>

#include "kmd/numtheory.hpp"
#include "oracles.hpp"
#include "suites.hpp"

namespace kmd::selftest {

namespace {

Natural random_prime(std::mt19937_64& rng, unsigned bits) {
  Natural x = rng() >> (64 - bits);
  x += Natural(1) << (bits - 1);
  mpz_nextprime(x.get_mpz_t(), x.get_mpz_t());
  return x;
}

}  // namespace

void suite_primes(Recorder& rec, const Options&) {
  for (std::uint64_t n = 0; n < 200'000; ++n) {
    const bool want = oracle::is_prime(n);
    rec.check(is_prime(n) == want, "is_prime(", n, ") word path");
    if (n % 7 == 0) rec.check(is_prime(Natural(n)) == want, "is_prime(", n, ") big path");
  }
  // Strong pseudoprimes to small base sets, Carmichael numbers, and Mersenne primes.
  for (std::uint64_t n : {561ULL, 1105ULL, 41041ULL, 3215031751ULL, 2152302898747ULL, 3474749660383ULL,
                          341550071728321ULL, 3825123056546413051ULL}) {
    rec.check(!is_prime(n), n, " is composite");
    rec.check(!is_prime(Natural(n)), n, " is composite (big path)");
  }
  rec.check(!is_prime(Natural("318665857834031151167461")), "3.18e23 pseudoprime is composite");
  for (unsigned e : {31U, 61U, 89U, 107U, 127U}) {
    Natural mersenne = (Natural(1) << e) - 1;
    rec.check(is_prime(mersenne), "2^", e, " - 1 is prime");
  }
  std::mt19937_64 rng(20240501);
  for (int i = 0; i < 3000; ++i) {
    const std::uint64_t n = rng() | 1;
    const bool want = mpz_probab_prime_p(Natural(n).get_mpz_t(), 40) != 0;
    rec.check(is_prime(n) == want, "is_prime(", n, ") vs GMP");
  }
}

void suite_factorize(Recorder& rec, const Options&) {
  rec.check(factorize(Natural(1)).empty(), "factorize(1) is empty");
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    const auto f = factorize(Natural(n));
    rec.check(f.value() == n, "product of factorize(", n, ")");
    for (const auto& pp : f) rec.check(oracle::is_prime(pp.prime.get_ui()), "factor of ", n, " is prime");
    const Natural r = radical(Natural(n));
    rec.check(n % r.get_ui() == 0, "radical(", n, ") divides it");
    rec.check(r == oracle::radical(n), "radical(", n, ")");
    for (const auto& pp : factorize(r)) rec.check(pp.exponent == 1, "radical(", n, ") is squarefree");
  }
  std::mt19937_64 rng(77);
  for (int i = 0; i < 300; ++i) {
    // 2 to 4 primes of 12 to 36 bits, with repeats; products run past 2^64.
    std::map<Natural, std::uint64_t> want;
    Natural n = 1;
    const int count = 2 + static_cast<int>(rng() % 3);
    for (int j = 0; j < count; ++j) {
      const Natural p = random_prime(rng, 12 + static_cast<unsigned>(rng() % 25));
      const std::uint64_t e = 1 + rng() % 2;
      want[p] += e;
      for (std::uint64_t k = 0; k < e; ++k) n *= p;
    }
    const auto f = factorize(n);
    std::map<Natural, std::uint64_t> got;
    for (const auto& pp : f) got[pp.prime] = pp.exponent;
    rec.check(got == want, "factorize(", n.get_str(), ")");
    rec.check(largest_prime_factor(n) == want.rbegin()->first, "largest_prime_factor(", n.get_str(), ")");
  }
}

void suite_legendre(Recorder& rec, const Options&) {
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
    for (std::uint64_t n = 0; n <= 500; ++n) {
      const Natural v = factorial_valuation(Natural(n), p);
      std::uint64_t sum = 0;
      for (std::uint64_t pk = p; pk <= n; pk *= p) sum += n / pk;
      rec.check(v == sum, "Legendre sum n=", n, " p=", p);
      rec.check(v == (Natural(n) - digit_sum(Natural(n), p)) / (p - 1), "digit-sum form n=", n, " p=", p);
      if (n <= 200) {
        Natural f;
        mpz_fac_ui(f.get_mpz_t(), n);
        rec.check(v == oracle::valuation(p, f), "nu_p(n!) literal n=", n, " p=", p);
      }
    }
  }
}

void suite_lifting(Recorder& rec, const Options&) {
  for (std::uint64_t p = 3; p < 50; p += 2) {
    if (!oracle::is_prime(p)) continue;
    for (std::uint64_t a = 2; a <= 30; ++a) {
      if (a % p == 0) continue;
      const std::uint64_t t = lifting_overhead(Natural(a), Natural(p));
      const std::uint64_t base_order = oracle::order(a, p);
      rec.check(order_mod_prime(Natural(a), Natural(p)) == base_order, "ord_", p, "(", a, ")");
      for (std::uint64_t k = 1; k <= 6; ++k) {
        const std::uint64_t q = oracle::ipow(p, k);
        const Natural got = order_prime_power(Natural(a), Natural(p), k);
        const std::uint64_t want =
            q <= 1'000'000 ? oracle::order(a, q) : oracle::order_by_divisors(a, q, q / p * (p - 1));
        rec.check(got == want, "order_prime_power(", a, ", ", p, ", ", k, ")");
        // ord_{p^k}(a) = ord_p(a) p^{max(0, k - t)}
        const std::uint64_t lift = k > t ? oracle::ipow(p, k - t) : 1;
        rec.check(got == base_order * lift, "lifting formula a=", a, " p=", p, " k=", k);
        rec.check(nu(Natural(p), got) >= (k > t ? k - t : 0), "valuation bound a=", a, " p=", p, " k=", k);
      }
    }
  }
}

void suite_two_adic(Recorder& rec, const Options&) {
  for (std::uint64_t a = 3; a <= 201; a += 2) {
    const Natural x = a;
    const std::uint64_t t2 = two_adic_overhead(x);
    rec.check(t2 == nu(2, x * x - 1) - 1, "t2(", a, ") definition");
    rec.check(t2 == std::max(oracle::valuation(2, x - 1), oracle::valuation(2, x + 1)), "t2(", a, ") maximum form");
    for (std::uint64_t k = 1; k <= 12; ++k) {
      const std::uint64_t q = std::uint64_t{1} << k;
      const Natural got = order(x, Natural(q));
      rec.check(got == oracle::order(a, q), "ord_{2^", k, "}(", a, ")");
      rec.check(order_prime_power(x, 2, k) == got, "order_prime_power(", a, ", 2, ", k, ")");
      rec.check(nu(2, got) >= (k > t2 ? k - t2 : 0), "2-adic valuation bound a=", a, " k=", k);
    }
  }
}

void suite_crt(Recorder& rec, const Options&) {
  for (std::uint64_t a = 2; a <= 12; ++a) {
    for (std::uint64_t q = 1; q <= 3000; ++q) {
      if (std::gcd(a, q) != 1) continue;
      rec.check(order(Natural(a), Natural(q)) == oracle::order(a, q), "order(", a, ", ", q, ")");
    }
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 10ULL}) {
    std::vector<Natural> orders(201);
    for (std::uint64_t q = 1; q <= 200; ++q) {
      if (std::gcd(a, q) == 1) orders[q] = order(Natural(a), Natural(q));
    }
    for (std::uint64_t q1 = 1; q1 <= 200; ++q1) {
      for (std::uint64_t q2 = q1; q2 <= 200; ++q2) {
        if (std::gcd(q1, q2) != 1 || std::gcd(a, q1 * q2) != 1) continue;
        rec.check(order(Natural(a), Natural(q1 * q2)) == lcm_of(orders[q1], orders[q2]),
                  "CRT a=", a, " q1=", q1, " q2=", q2);
      }
    }
  }
}

void suite_kummer(Recorder& rec, const Options&) {
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    for (unsigned long n = 1; n <= 300; ++n) {
      Natural c;
      mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
      const std::uint64_t want = oracle::valuation(p, c);
      rec.check(binomial_central_valuation(Natural(n), p) == want, "nu_p(C(2n,n)) n=", n, " p=", p);
      rec.check(doubling_carries(Natural(n), p) == want, "carries n=", n, " p=", p);
    }
  }
}

}  // namespace kmd::selftest
