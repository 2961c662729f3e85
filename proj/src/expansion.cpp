#include <algorithm>
#include <string_view>
#include <unordered_map>

#include "kmd/expansion.hpp"

namespace kmd {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct NaturalHash {
  std::size_t operator()(const Natural& x) const {
    const auto limbs = mpz_size(x.get_mpz_t());
    const auto* data = reinterpret_cast<const char*>(mpz_limbs_read(x.get_mpz_t()));
    return std::hash<std::string_view>{}(std::string_view(data, limbs * sizeof(mp_limb_t)));
  }
};

constexpr u64 kDenseIndexLimit = u64{1} << 16;
constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);

// Remainder -> step index. Dense table for small word-sized moduli.
class WordIndex {
 public:
  explicit WordIndex(u64 modulus) {
    if (modulus <= kDenseIndexLimit) dense_.assign(modulus, kUnseen);
  }
  // Returns the earlier index of r, or records r at j and returns kUnseen.
  std::size_t visit(u64 r, std::size_t j) {
    if (!dense_.empty()) {
      std::size_t& slot = dense_[r];
      if (slot != kUnseen) return slot;
      slot = j;
      return kUnseen;
    }
    auto [it, inserted] = sparse_.try_emplace(r, j);
    return inserted ? kUnseen : it->second;
  }

 private:
  std::vector<std::size_t> dense_;
  std::unordered_map<u64, std::size_t> sparse_;
};

class BigIndex {
 public:
  std::size_t visit(const Natural& r, std::size_t j) {
    auto [it, inserted] = seen_.try_emplace(r, j);
    return inserted ? kUnseen : it->second;
  }

 private:
  std::unordered_map<Natural, std::size_t, NaturalHash> seen_;
};

struct WordStep {
  u64 v;
  unsigned base;
  Digit operator()(u64& r) const {
    const u128 scaled = u128{r} * base;
    const auto d = static_cast<u64>(scaled / v);
    r = static_cast<u64>(scaled - u128{d} * v);
    return static_cast<Digit>(d);
  }
};

struct BigStep {
  const Natural& v;
  unsigned base;
  mutable Natural quotient;
  Digit operator()(Natural& r) const {
    r *= base;
    mpz_tdiv_qr(quotient.get_mpz_t(), r.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t());
    return static_cast<Digit>(mpz_get_ui(quotient.get_mpz_t()));
  }
};

template <class Rem, class Index, class Step>
ExpansionReport run(Rem r, Index& index, const Step& step, std::size_t cap,
                    const MissingDigitSet* marks, bool early_exit, std::size_t lookahead) {
  ExpansionReport out;
  for (std::size_t j = 0;; ++j) {
    if (const auto earlier = index.visit(r, j); earlier != kUnseen) {
      out.cycle_start = earlier;
      out.cycle_end = j;
      break;
    }
    if (j == cap) {
      out.cap_exhausted = true;
      break;
    }
    const Digit d = step(r);
    out.digits.push_back(d);
    if (marks != nullptr && !out.first_offending && !marks->allows(d)) {
      out.first_offending = j + 1;
      if (early_exit) {
        for (std::size_t i = 0; i < lookahead; ++i) out.digits.push_back(step(r));
        break;
      }
    }
  }
  out.member = out.closed() && !out.first_offending;
  return out;
}

bool fits_word(const Natural& v) { return mpz_sizeinbase(v.get_mpz_t(), 2) <= 64; }

u64 to_word(const Natural& x) {
  u64 out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, x.get_mpz_t());
  return out;
}

void require_base(unsigned base) {
  if (base < 3) throw std::invalid_argument("base must be at least 3");
}

// Positions (1-based) where an infinite expansion prefix + tail^inf first leaves D.
std::optional<std::size_t> first_outside(const std::vector<Digit>& prefix, Digit tail,
                                         const MissingDigitSet& set) {
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (!set.allows(prefix[i])) return i + 1;
  }
  if (!set.allows(tail)) return prefix.size() + 1;
  return std::nullopt;
}

}  // namespace

MissingDigitSet::MissingDigitSet(unsigned base, std::vector<unsigned> digits)
    : base_(base), digits_(std::move(digits)), mask_(base, false) {
  require_base(base);
  std::sort(digits_.begin(), digits_.end());
  digits_.erase(std::unique(digits_.begin(), digits_.end()), digits_.end());
  for (unsigned d : digits_) {
    if (d >= base) throw std::invalid_argument("digit " + std::to_string(d) + " is not below the base");
    mask_[d] = true;
  }
  if (digits_.size() <= 1 || digits_.size() >= base) {
    throw std::invalid_argument("digit set size must satisfy 1 < |D| < m");
  }
}

std::string MissingDigitSet::digits_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(digits_[i]);
  }
  return out + "}";
}

ReducedRational ReducedRational::make(const Natural& u, const Natural& v) {
  if (sgn(u) <= 0 || sgn(v) <= 0) throw std::invalid_argument("rational must be positive");
  if (u > v) throw std::invalid_argument("rational must lie in (0, 1]");
  Natural g;
  mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
  return {u / g, v / g};
}

bool terminates_in_base(const Natural& v, unsigned base) {
  return coprime_part(v, Natural(base)) == 1;
}

namespace detail {

ExpansionReport long_division(const Natural& u, const Natural& v, unsigned base, std::size_t cap,
                              const MissingDigitSet* marks, bool early_exit,
                              std::size_t lookahead, Engine engine) {
  if (engine == Engine::Auto) engine = fits_word(v) ? Engine::Word : Engine::Big;
  if (engine == Engine::Word) {
    if (!fits_word(v)) throw std::invalid_argument("word engine needs v < 2^64");
    const u64 vw = to_word(v);
    WordIndex index(vw);
    return run(to_word(u % v), index, WordStep{vw, base}, cap, marks, early_exit, lookahead);
  }
  BigIndex index;
  return run(Natural(u % v), index, BigStep{v, base, {}}, cap, marks, early_exit, lookahead);
}

}  // namespace detail

namespace {

ExpansionReport expand_checked(const ReducedRational& x, unsigned base, std::size_t cap,
                               const MissingDigitSet* marks) {
  require_base(base);
  if (x.is_one()) throw TerminatingRegimeError("x = 1 is handled as 0.(m-1), not by long division");
  if (terminates_in_base(x.denominator, base)) {
    throw TerminatingRegimeError("denominator divides a power of the base");
  }
  return detail::long_division(x.numerator, x.denominator, base, cap, marks, false, 0);
}

}  // namespace

ExpansionReport expand(const ReducedRational& x, unsigned base, std::size_t cap) {
  return expand_checked(x, base, cap, nullptr);
}

ExpansionReport expand(const ReducedRational& x, const MissingDigitSet& set, std::size_t cap) {
  return expand_checked(x, set.base(), cap, &set);
}

Membership member(const ReducedRational& x, const MissingDigitSet& set, std::size_t cap,
                  std::size_t lookahead) {
  const unsigned base = set.base();
  const Digit top = base - 1;
  Membership out;

  if (x.is_one()) {
    // 1 = 0.(m-1)(m-1)...
    out.regime = Regime::Unit;
    out.report.digits.assign(1 + lookahead, top);
    out.report.cycle_start = 0;
    out.report.cycle_end = 1;
    if (!set.allows(top)) out.report.first_offending = 1;
    out.report.member = !out.report.first_offending;
    out.verdict = out.report.member ? Verdict::Member : Verdict::NonMember;
    return out;
  }

  if (terminates_in_base(x.denominator, base)) {
    out.regime = Regime::Terminating;
    auto report = detail::long_division(x.numerator, x.denominator, base, cap, nullptr, false, 0);
    if (!report.closed()) {
      out.report = std::move(report);
      return out;
    }
    // The closed cycle is the zero tail: digits = d_1..d_L, 0.
    std::vector<Digit> finite(report.digits.begin(), report.digits.begin() + report.cycle_start);
    const auto standard = first_outside(finite, 0, set);
    std::vector<Digit> alternate = finite;
    alternate.back() -= 1;
    const auto other = first_outside(alternate, top, set);

    report.member = !standard || !other;
    out.via_alternate_expansion = standard && !other;
    if (!report.member) report.first_offending = std::max(*standard, *other);
    while (report.digits.size() < finite.size() + 1 + lookahead) report.digits.push_back(0);
    out.verdict = report.member ? Verdict::Member : Verdict::NonMember;
    out.report = std::move(report);
    return out;
  }

  out.regime = Regime::Periodic;
  out.report = detail::long_division(x.numerator, x.denominator, base, cap, &set, true, lookahead);
  if (out.report.first_offending) {
    out.verdict = Verdict::NonMember;
  } else if (out.report.closed()) {
    out.verdict = Verdict::Member;
  }
  return out;
}

std::map<Digit, std::size_t> period_digit_counts(const ExpansionReport& report, unsigned base) {
  if (!report.closed() || report.cycle_start != 0) {
    throw std::invalid_argument("period_digit_counts needs a closed, purely periodic expansion");
  }
  std::map<Digit, std::size_t> counts;
  for (std::size_t i = 0; i < report.cycle_end; ++i) {
    if (report.digits[i] >= base) throw std::invalid_argument("digit exceeds base");
    ++counts[report.digits[i]];
  }
  return counts;
}

ReducedRational shift_reduce(const Natural& a, unsigned base) {
  require_base(base);
  const Natural m = base;
  const Natural part = m_part(a, m);
  const Natural q = a / part;
  if (q < 2) throw std::invalid_argument("shift_reduce: coprime part must be at least 2");
  Natural power = 1;
  while (!mpz_divisible_p(power.get_mpz_t(), part.get_mpz_t())) power *= m;
  const Natural b = power / part;
  return ReducedRational::make(b % q, q);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Member: return "member";
    case Verdict::NonMember: return "non-member";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::Unit: return "unit";
    case Regime::Terminating: return "terminating";
    case Regime::Periodic: return "periodic";
  }
  return "?";
}

}  // namespace kmd
