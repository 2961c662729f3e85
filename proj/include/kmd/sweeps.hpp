#pragma once

// Desk-scale sweeps behind the Korobov and reduction suites, each with a
// serial reference and an OpenMP kernel.

#include <cstdint>
#include <vector>

#include "kmd/expansion.hpp"
#include "kmd/numtheory.hpp"

namespace kmd {

/// A modulus q coprime to m with some unit r for which r/q lies in K_{m,D}.
struct KorobovHit {
  std::uint64_t q = 0;
  std::uint64_t r = 0;  // least such r
  Natural order_q;      // ord_q(m)
  Natural order_radical;  // ord_{rad q}(m)

  friend bool operator==(const KorobovHit&, const KorobovHit&) = default;
};

/// Scans 2 <= q <= q_max with gcd(q, m) = 1 by splitting the units mod q into
/// orbits under multiplication by m; an orbit qualifies when every digit
/// floor(m s / q) it produces lies in D.
std::vector<KorobovHit> korobov_sweep_serial(const MissingDigitSet& set, std::uint64_t q_max);
std::vector<KorobovHit> korobov_sweep_parallel(const MissingDigitSet& set, std::uint64_t q_max,
                                               unsigned workers = 0);

/// An A with coprime part Q >= 2 and 1/A in K_{m,D}.
struct ReductionHit {
  std::uint64_t a = 0;
  Natural coprime;             // Q
  ReducedRational reduced;     // shift_reduce(A, m)
  bool reduced_member = false;

  friend bool operator==(const ReductionHit& x, const ReductionHit& y) {
    return x.a == y.a && x.coprime == y.coprime && x.reduced.numerator == y.reduced.numerator &&
           x.reduced.denominator == y.reduced.denominator && x.reduced_member == y.reduced_member;
  }
};

std::vector<ReductionHit> reduction_sweep_serial(const MissingDigitSet& set, std::uint64_t a_max);
std::vector<ReductionHit> reduction_sweep_parallel(const MissingDigitSet& set, std::uint64_t a_max,
                                                   unsigned workers = 0);

}  // namespace kmd
