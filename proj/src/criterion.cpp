#include <stdexcept>

#include "kmd/criterion.hpp"

namespace kmd {

Rational korobov_constant(unsigned base, std::size_t digit_count) {
  if (digit_count <= 1 || digit_count >= base) {
    throw std::invalid_argument("korobov_constant: need 1 < |D| < m");
  }
  Rational ratio(static_cast<unsigned long>(digit_count),
                 static_cast<unsigned long>(base - digit_count));
  ratio.canonicalize();
  const Rational factor = ratio < 1 ? ratio : Rational(1);
  return Rational(2 * (base - 1)) * factor;
}

Rational korobov_constant(const MissingDigitSet& set) {
  return korobov_constant(set.base(), set.size());
}

std::uint64_t overhead(unsigned base, const Natural& p0) {
  if (p0 < 2) throw std::invalid_argument("overhead: p0 must be prime");
  if (Natural(base) % p0 == 0) {
    throw std::domain_error("overhead: p0 must not divide m");
  }
  if (p0 == 2) return two_adic_overhead(Natural(base));
  return lifting_overhead(Natural(base), p0);
}

ObstructionParams ObstructionParams::make(const MissingDigitSet& set, const Natural& p0) {
  if (!is_prime(p0)) throw std::invalid_argument("auxiliary p0 must be prime");
  return ObstructionParams{set, p0, overhead(set.base(), p0), korobov_constant(set)};
}

Rational power_of(const Natural& p0, std::int64_t exponent) {
  Natural magnitude;
  mpz_pow_ui(magnitude.get_mpz_t(), p0.get_mpz_t(),
             static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Rational(magnitude);
  Rational out(Natural(1), magnitude);
  out.canonicalize();
  return out;
}

ObstructionCheck obstruction_holds(const Factorization& q, const ObstructionParams& params) {
  const Natural m = params.base();
  if (q.empty()) throw std::invalid_argument("obstruction_holds: Q must be at least 2");
  for (const auto& f : q) {
    if (m % f.prime == 0) throw std::domain_error("obstruction_holds: gcd(Q, m) must be 1");
  }
  std::vector<PrimePower> radical_factors;
  radical_factors.reserve(q.size());
  for (const auto& f : q) radical_factors.push_back({f.prime, 1});
  const Natural radical_order = order(m, Factorization(std::move(radical_factors)));

  ObstructionCheck out;
  out.valuation = q.exponent_of(params.p0);
  out.t = params.t;
  out.radical_order_valuation = nu(params.p0, radical_order);
  out.c = params.c;
  const auto exponent = static_cast<std::int64_t>(out.valuation) - static_cast<std::int64_t>(out.t) -
                        static_cast<std::int64_t>(out.radical_order_valuation);
  out.holds = power_of(params.p0, exponent) <= params.c;
  return out;
}

ObstructionCheck obstruction_holds(const Natural& q, const ObstructionParams& params) {
  if (q < 2) throw std::invalid_argument("obstruction_holds: Q must be at least 2");
  return obstruction_holds(factorize(q), params);
}

bool structural_cutoff_holds(std::int64_t alpha, std::int64_t gamma, const ObstructionParams& params) {
  return power_of(params.p0, alpha - static_cast<std::int64_t>(params.t) - gamma) > params.c;
}

bool lpf_cutoff_holds(std::int64_t alpha, const Rational& beta, const ObstructionParams& params) {
  if (beta < 2) throw std::invalid_argument("lpf_cutoff_holds: beta must be at least 2");
  return power_of(params.p0, alpha - static_cast<std::int64_t>(params.t)) > params.c * (beta - 1);
}

std::string to_string(BoundKind kind) {
  return kind == BoundKind::Structural ? "structural" : "largest-prime";
}

Rational cutoff_rhs(const CutoffBounds& bounds, const ObstructionParams& params, std::uint64_t n) {
  if (bounds.kind == BoundKind::Structural) {
    return params.c * power_of(params.p0, bounds.gamma(n));
  }
  return params.c * (bounds.beta(n) - 1);
}

bool cutoff_holds_at(const CutoffBounds& bounds, const ObstructionParams& params, std::uint64_t n) {
  if (bounds.kind == BoundKind::Structural) {
    return structural_cutoff_holds(bounds.alpha(n), bounds.gamma(n), params);
  }
  return lpf_cutoff_holds(bounds.alpha(n), bounds.beta(n), params);
}

TailCheck verify_tail(const CutoffBounds& bounds, const ObstructionParams& params,
                      std::uint64_t n_from, std::uint64_t n_to) {
  if (n_from > n_to) throw std::invalid_argument("verify_tail: empty range");
  for (std::uint64_t n = n_from; n <= n_to; ++n) {
    if (!cutoff_holds_at(bounds, params, n)) return {false, n};
  }
  return {};
}

}  // namespace kmd
