#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kmd/criterion.hpp"
#include "kmd/expansion.hpp"
#include "kmd/numtheory.hpp"

namespace kmd {

/// Integer polynomial f(x) = c_d x^d + ... + c_0, coefficients highest degree first.
class PolynomialSpec {
 public:
  explicit PolynomialSpec(std::vector<long> coefficients);
  /// Parses "c_d,...,c_0", e.g. "1,0,1" for x^2 + 1.
  static PolynomialSpec parse(std::string_view text);

  const std::vector<long>& coefficients() const { return coefficients_; }
  std::size_t degree() const { return coefficients_.size() - 1; }
  /// C_f = sum of |c_i|, so 0 < f(k) <= C_f k^d for k >= 1 when f is positive there.
  Natural coefficient_norm() const;
  mpz_class eval(std::uint64_t k) const;
  std::string to_string() const;

  friend bool operator==(const PolynomialSpec&, const PolynomialSpec&) = default;

 private:
  std::vector<long> coefficients_;
};

struct AuxiliaryPrime {
  Natural p0;
  Natural residue;     // b = k mod p0, with f(b) = 0 (mod p0)
  std::uint64_t k = 0; // first index whose value has a prime factor not dividing m
};

/// Smallest k with a prime factor of f(k) not dividing m; the smallest such
/// factor wins. Throws std::runtime_error once `search_limit` is exceeded.
AuxiliaryPrime find_auxiliary_prime(const PolynomialSpec& f, unsigned base,
                                    std::uint64_t search_limit = 100'000);

/// A product family a_n = term(1) * ... * term(n) together with the data the
/// finiteness criterion needs for one (m, D, p0).
struct FamilySpec {
  std::string name;
  std::string formula;
  ObstructionParams params;
  std::function<Natural(std::uint64_t)> term;
  CutoffBounds bounds;
  /// Index from which the published proofs exclude membership; only known
  /// for the configurations worked out there.
  std::optional<std::uint64_t> certified_cutoff;
  /// Members reported for those configurations. Test data, never consulted by logic.
  std::optional<std::set<std::uint64_t>> known_members;

  const MissingDigitSet& digit_set() const { return params.set; }
  unsigned base() const { return params.base(); }
  Natural value(std::uint64_t n) const;
};

FamilySpec factorial_family(const MissingDigitSet& set, std::optional<Natural> p0 = std::nullopt);
FamilySpec superfactorial_family(const MissingDigitSet& set, std::optional<Natural> p0 = std::nullopt);
/// Rejects constant f, a non-positive leading coefficient and f(k) <= 0 for k in [1, 10^4].
FamilySpec polynomial_family(const PolynomialSpec& f, const MissingDigitSet& set);
/// Rejects even bases.
FamilySpec fibonacci_family(const MissingDigitSet& set);
FamilySpec mk_minus_one_family(const MissingDigitSet& set);

/// By name: factorial, superfactorial, polynomial, fibonacci, mk.
FamilySpec make_family(std::string_view name, const MissingDigitSet& set,
                       const std::optional<PolynomialSpec>& poly = std::nullopt,
                       std::optional<Natural> p0 = std::nullopt);

/// Smallest prime not dividing m.
Natural default_auxiliary_prime(unsigned base);

/// a_1, ..., a_{n_max}.
std::vector<Natural> prefix_values(const FamilySpec& family, std::uint64_t n_max);

/// Q_n and nu_{p0}(Q_n) for n = 1..n_max (index n - 1), accumulated term by term.
struct CoprimeProfile {
  std::vector<Natural> coprime_part;
  std::vector<std::uint64_t> p0_valuation;
};
CoprimeProfile coprime_profile(const FamilySpec& family, std::uint64_t n_max);

/// Factorizations of Q_1..Q_{n_max}, merged from factorized terms.
std::vector<Factorization> coprime_factorizations(const FamilySpec& family, std::uint64_t n_max);

// Fibonacci 2-adic bookkeeping.

Natural fibonacci(std::uint64_t k);
Natural lucas(std::uint64_t k);
/// S(n) = sum_{k<=n} nu_2(F_k), computed directly.
std::uint64_t fib_two_adic_sum(std::uint64_t n);
/// floor(n/3) + 2 floor(n/6) + sum_{j>=2, 3*2^j<=n} floor(n/(3*2^j)).
std::uint64_t fib_two_adic_lower_bound(std::uint64_t n);
/// ceil(5n/6) - floor(log2 n) - 5, an integer lowering of 5n/6 - log2 n - 4.
std::int64_t fib_alpha(std::uint64_t n);

/// nu_{p0}(lcm(1..n)) = floor(log_{p0} n); 0 for n = 0. Rejects p0 | m.
std::uint64_t radical_order_bound_mk(std::uint64_t n, unsigned base, const Natural& p0);

// Families outside the criterion's reach.

struct PrimorialDemo {
  std::uint64_t n = 0;
  Natural primorial;
  bool coprime_part_squarefree = false;
  /// (p0, nu_{p0}(Q_n)) for each sampled p0 below 10 not dividing m.
  std::vector<std::pair<Natural, std::uint64_t>> valuations;
  /// Even alpha = max valuation and gamma = 0 miss the structural cutoff for every sampled p0.
  bool cutoff_unreachable = false;
};
PrimorialDemo nonexample_primorial(std::uint64_t n, const MissingDigitSet& set = MissingDigitSet::cantor());

struct CentralBinomialDemo {
  std::uint64_t k = 0;
  Natural p0;
  Natural n;                  // p0^k
  std::uint64_t valuation = 0;  // nu_{p0}(C(2n, n))
  std::uint64_t expected = 0;   // 1 for p0 = 2, else 0
  /// Present when p0 does not divide m: the cutoff fails with gamma = 0.
  std::optional<bool> cutoff_unreachable;
};
CentralBinomialDemo nonexample_central_binomial(std::uint64_t k, const Natural& p0,
                                                const MissingDigitSet& set = MissingDigitSet::cantor());

}  // namespace kmd
