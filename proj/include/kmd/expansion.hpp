#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmd/numtheory.hpp"

namespace kmd {

using Digit = std::uint32_t;

inline constexpr std::size_t kDefaultDigitCap = 1'000'000;

/// K_{m,D}: reals in [0,1] with a base-m expansion using only digits from D.
/// Requires m >= 3, 1 < |D| < m and every digit below m.
class MissingDigitSet {
 public:
  MissingDigitSet(unsigned base, std::vector<unsigned> digits);

  /// The middle-third Cantor set K_{3,{0,2}}.
  static MissingDigitSet cantor() { return MissingDigitSet(3, {0, 2}); }

  unsigned base() const { return base_; }
  std::size_t size() const { return digits_.size(); }
  const std::vector<unsigned>& digits() const { return digits_; }
  bool allows(Digit d) const { return d < mask_.size() && mask_[d]; }

  /// "{0,2}"
  std::string digits_string() const;

 private:
  unsigned base_;
  std::vector<unsigned> digits_;
  std::vector<bool> mask_;
};

/// u/v in lowest terms with 0 < u <= v; u = v = 1 stands for x = 1.
struct ReducedRational {
  Natural numerator;
  Natural denominator;

  /// Reduces u/v; rejects u = 0, v = 0 and u > v.
  static ReducedRational make(const Natural& u, const Natural& v);

  bool is_one() const { return numerator == denominator; }
};

/// Digits d_1, d_2, ... of a base-m long division (digits[0] is d_1) with
/// cycle data: the remainder after cycle_end digits equals the remainder
/// after cycle_start digits. cycle_end == 0 means no repeat was reached.
struct ExpansionReport {
  std::vector<Digit> digits;
  std::size_t cycle_start = 0;
  std::size_t cycle_end = 0;
  /// 1-based position of the first digit outside D.
  std::optional<std::size_t> first_offending;
  bool member = false;
  bool cap_exhausted = false;

  bool closed() const { return cycle_end > 0; }
  std::size_t period() const { return closed() ? cycle_end - cycle_start : 0; }
};

/// Thrown by expand() when v divides a power of m, or x = 1.
class TerminatingRegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// True iff v | m^k for some k (v >= 1).
bool terminates_in_base(const Natural& v, unsigned base);

/// Runs r_0 = u, m r_{j-1} = d_j v + r_j until a remainder repeats or `cap`
/// digits are out. Without a digit set every digit counts as allowed.
ExpansionReport expand(const ReducedRational& x, unsigned base, std::size_t cap = kDefaultDigitCap);
/// Full-cycle expansion that also marks the first digit outside D.
ExpansionReport expand(const ReducedRational& x, const MissingDigitSet& set,
                       std::size_t cap = kDefaultDigitCap);

enum class Verdict { Member, NonMember, Inconclusive };
enum class Regime { Unit, Terminating, Periodic };

struct Membership {
  Verdict verdict = Verdict::Inconclusive;
  Regime regime = Regime::Periodic;
  ExpansionReport report;
  /// Terminating regime only: the (d_L - 1)(m-1)(m-1)... expansion is the witness.
  bool via_alternate_expansion = false;

  bool is_member() const { return verdict == Verdict::Member; }
  bool conclusive() const { return verdict != Verdict::Inconclusive; }
};

/// Decides x in K_{m,D}. Stops at the first digit outside D; `lookahead`
/// extra digits are still emitted for display. Cap exhaustion before both a
/// closed cycle and an offending digit yields Verdict::Inconclusive.
Membership member(const ReducedRational& x, const MissingDigitSet& set,
                  std::size_t cap = kDefaultDigitCap, std::size_t lookahead = 0);

/// Digit occurrences over one period of a purely periodic expansion
/// (closed cycle with cycle_start == 0). Only digits that occur appear.
std::map<Digit, std::size_t> period_digit_counts(const ExpansionReport& report, unsigned base);

/// r/Q with Q = A/(A,m^inf) and r = (m^k/(A,m^inf)) mod Q for the least k
/// making that an integer, i.e. the fractional part of m^k/A. Rejects Q < 2.
ReducedRational shift_reduce(const Natural& a, unsigned base);

std::string to_string(Verdict v);
std::string to_string(Regime r);

namespace detail {

enum class Engine { Auto, Word, Big };

/// The long-division kernel. `early_exit` stops at the first digit outside
/// the set; `marks` only records it. Word is valid for v < 2^64.
ExpansionReport long_division(const Natural& u, const Natural& v, unsigned base, std::size_t cap,
                              const MissingDigitSet* marks, bool early_exit,
                              std::size_t lookahead, Engine engine = Engine::Auto);

}  // namespace detail

}  // namespace kmd
