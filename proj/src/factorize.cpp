#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "kmd/numtheory.hpp"

namespace kmd {

namespace {

constexpr std::uint32_t kSieveLimit = 1'000'000;

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::vector<std::uint32_t> build_sieve() {
  std::vector<bool> composite(kSieveLimit + 1, false);
  std::vector<std::uint32_t> primes;
  primes.reserve(78'500);
  for (std::uint32_t i = 2; i <= kSieveLimit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j <= kSieveLimit; j += i) {
      composite[j] = true;
    }
  }
  return primes;
}

u64 mul_mod(u64 a, u64 b, u64 n) { return static_cast<u64>(u128{a} * b % n); }

u64 pow_mod(u64 base, u64 exp, u64 n) {
  u64 result = 1 % n;
  base %= n;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return result;
}

constexpr std::uint32_t kWitnesses[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                        37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                                        83, 89, 97, 101, 103, 107, 109, 113, 127, 131};
// The first twelve prime bases are a deterministic witness set below 3.3e24.
constexpr std::size_t kDeterministicWitnessCount = 12;

bool miller_rabin_u64(u64 n) {
  if (n < 2) return false;
  for (std::uint32_t p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::size_t i = 0; i < kDeterministicWitnessCount; ++i) {
    u64 x = pow_mod(kWitnesses[i], d, n);
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

bool miller_rabin_big(const Natural& n) {
  for (std::uint32_t p : kWitnesses) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  const Natural n_minus_1 = n - 1;
  Natural d = n_minus_1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Natural x;
  for (std::uint32_t base : kWitnesses) {
    mpz_powm(x.get_mpz_t(), Natural(base).get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (mp_bitcnt_t r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool fits_u64(const Natural& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const Natural& n) {
  u64 out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

Natural from_u64(u64 v) {
  Natural out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

// Brent's variant of Pollard rho. Returns a divisor, possibly n itself on failure.
u64 brent_u64(u64 n, u64 c) {
  auto step = [&](u64 x) { return static_cast<u64>((u128{x} * x + c) % n); };
  auto dist = [](u64 a, u64 b) { return a > b ? a - b : b - a; };
  constexpr u64 kBatch = 128;
  u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
  for (u64 r = 1; g == 1; r <<= 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = step(y);
    for (u64 k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
        y = step(y);
        q = mul_mod(q, dist(x, y), n);
      }
      g = std::gcd(q, n);
    }
  }
  if (g == n) {
    do {
      ys = step(ys);
      g = std::gcd(dist(x, ys), n);
    } while (g == 1);
  }
  return g;
}

Natural brent_big(const Natural& n, unsigned long c) {
  mpz_srcptr mod = n.get_mpz_t();
  Natural y = 2, x = 2, ys = 2, q = 1, g = 1, diff;
  auto step = [&](Natural& v) {
    mpz_mul(v.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
    mpz_add_ui(v.get_mpz_t(), v.get_mpz_t(), c);
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), mod);
  };
  constexpr unsigned long kBatch = 128;
  for (unsigned long r = 1; g == 1; r <<= 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    for (unsigned long k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      for (unsigned long i = 0; i < std::min(kBatch, r - k); ++i) {
        step(y);
        mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        mpz_mul(q.get_mpz_t(), q.get_mpz_t(), diff.get_mpz_t());
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), mod);
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), mod);
    }
  }
  if (g == n) {
    do {
      step(ys);
      mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), ys.get_mpz_t());
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), mod);
    } while (g == 1);
  }
  return g;
}

// Nontrivial divisor of a composite n with no prime factors below the sieve limit.
Natural split(const Natural& n) {
  if (fits_u64(n)) {
    const u64 v = to_u64(n);
    for (u64 c = 1;; ++c) {
      const u64 d = brent_u64(v, c);
      if (d != 1 && d != v) return from_u64(d);
    }
  }
  Natural root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
  }
  for (unsigned long c = 1;; ++c) {
    Natural d = brent_big(n, c);
    if (d != 1 && d != n) return d;
  }
}

}  // namespace

std::span<const std::uint32_t> small_primes() {
  static const std::vector<std::uint32_t> primes = build_sieve();
  return primes;
}

bool is_prime(std::uint64_t n) { return miller_rabin_u64(n); }

bool is_prime(const Natural& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return miller_rabin_u64(to_u64(n));
  return miller_rabin_big(n);
}

Factorization factorize(const Natural& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("factorize: n must be positive");
  std::map<Natural, std::uint64_t> found;
  Natural rest = n;

  const auto primes = small_primes();
  std::size_t i = 0;
  // Above 2^64 no sieve prime squared can exceed the cofactor.
  for (; i < primes.size() && !fits_u64(rest); ++i) {
    const std::uint32_t p = primes[i];
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      found[Natural(p)] += mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), Natural(p).get_mpz_t());
    }
  }
  if (fits_u64(rest)) {
    u64 r = to_u64(rest);
    bool cofactor_prime = false;
    for (; i < primes.size(); ++i) {
      const u64 p = primes[i];
      if (p * p > r) {
        cofactor_prime = true;
        break;
      }
      if (r % p != 0) continue;
      std::uint64_t e = 0;
      while (r % p == 0) {
        r /= p;
        ++e;
      }
      found[Natural(p)] += e;
    }
    if (cofactor_prime && r > 1) {
      found[from_u64(r)] += 1;
      r = 1;
    }
    rest = from_u64(r);
  }

  std::vector<Natural> pending;
  if (rest > 1) pending.push_back(rest);
  while (!pending.empty()) {
    Natural cur = std::move(pending.back());
    pending.pop_back();
    if (is_prime(cur)) {
      found[cur] += 1;
      continue;
    }
    Natural d = split(cur);
    pending.push_back(cur / d);
    pending.push_back(std::move(d));
  }

  std::vector<PrimePower> factors;
  factors.reserve(found.size());
  for (auto& [p, e] : found) factors.push_back({p, e});
  return Factorization(std::move(factors));
}

}  // namespace kmd
