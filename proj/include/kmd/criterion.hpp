#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include <gmpxx.h>

#include "kmd/expansion.hpp"
#include "kmd/numtheory.hpp"

namespace kmd {

using Rational = mpq_class;

/// c_{m,D} = 2(m-1) min{1, |D|/(m-|D|)}.
Rational korobov_constant(unsigned base, std::size_t digit_count);
Rational korobov_constant(const MissingDigitSet& set);

/// t(m, p0): nu_{p0}(m^{ord_{p0}(m)} - 1) for odd p0, nu_2(m^2 - 1) - 1 for p0 = 2.
/// Rejects p0 | m.
std::uint64_t overhead(unsigned base, const Natural& p0);

/// Everything the cutoff inequalities need for one (m, D, p0).
struct ObstructionParams {
  MissingDigitSet set;
  Natural p0;
  std::uint64_t t = 0;
  Rational c;

  /// Derives t and c; rejects composite p0 and p0 | m.
  static ObstructionParams make(const MissingDigitSet& set, const Natural& p0);

  unsigned base() const { return set.base(); }
};

/// Outcome of nu_{p0}(Q) <= t + nu_{p0}(ord_{rad Q}(m)) + log_{p0} c.
struct ObstructionCheck {
  bool holds = false;
  std::uint64_t valuation = 0;                 // nu_{p0}(Q)
  std::uint64_t t = 0;
  std::uint64_t radical_order_valuation = 0;   // nu_{p0}(ord_{rad Q}(m))
  Rational c;
};

/// Evaluated as p0^{nu - t - nu_ord} <= c. Rejects gcd(Q, m) != 1 and Q < 2.
ObstructionCheck obstruction_holds(const Natural& q, const ObstructionParams& params);
/// Same, reusing a known factorization of Q.
ObstructionCheck obstruction_holds(const Factorization& q, const ObstructionParams& params);

/// p0^{a} as an exact rational, for any integer a.
Rational power_of(const Natural& p0, std::int64_t exponent);

/// alpha > t + gamma + log_{p0} c, decided as p0^{alpha - t - gamma} > c.
bool structural_cutoff_holds(std::int64_t alpha, std::int64_t gamma, const ObstructionParams& params);

/// alpha > t + log_{p0}(beta - 1) + log_{p0} c, decided as p0^{alpha - t} > c (beta - 1).
/// Rejects beta < 2.
bool lpf_cutoff_holds(std::int64_t alpha, const Rational& beta, const ObstructionParams& params);

enum class BoundKind { Structural, LargestPrime };

std::string to_string(BoundKind kind);

/// Lower bound alpha(n) for nu_{p0}(Q_n) plus either gamma(n) bounding
/// nu_{p0}(ord_{rad Q_n}(m)) or beta(n) bounding P+(Q_n).
struct CutoffBounds {
  BoundKind kind = BoundKind::LargestPrime;
  std::function<std::int64_t(std::uint64_t)> alpha;
  std::function<std::int64_t(std::uint64_t)> gamma;
  std::function<Rational(std::uint64_t)> beta;
};

/// The value p0^{alpha(n) - t} must strictly exceed at index n:
/// c (beta(n) - 1) for the largest-prime form, c p0^{gamma(n)} for the structural form.
Rational cutoff_rhs(const CutoffBounds& bounds, const ObstructionParams& params, std::uint64_t n);

bool cutoff_holds_at(const CutoffBounds& bounds, const ObstructionParams& params, std::uint64_t n);

struct TailCheck {
  bool holds = true;
  std::optional<std::uint64_t> first_failure;
};

/// Checks the applicable cutoff inequality for every n in [n_from, n_to].
TailCheck verify_tail(const CutoffBounds& bounds, const ObstructionParams& params,
                      std::uint64_t n_from, std::uint64_t n_to);

}  // namespace kmd
