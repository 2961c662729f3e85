#include <random>

#include "doctest.h"
#include "kmd/expansion.hpp"
#include "oracles.hpp"

using kmd::Natural;
using kmd::ReducedRational;

namespace {

std::vector<kmd::Digit> ds(std::initializer_list<kmd::Digit> d) { return d; }

}  // namespace

TEST_CASE("MissingDigitSet validation") {
  CHECK_THROWS(kmd::MissingDigitSet(2, {0, 1}));
  CHECK_THROWS(kmd::MissingDigitSet(3, {0}));
  CHECK_THROWS(kmd::MissingDigitSet(3, {0, 1, 2}));
  CHECK_THROWS(kmd::MissingDigitSet(3, {0, 3}));
  const kmd::MissingDigitSet s(10, {9, 0, 9});
  CHECK(s.size() == 2);
  CHECK(s.digits_string() == "{0,9}");
}

TEST_CASE("ReducedRational") {
  const auto x = ReducedRational::make(6, 8);
  CHECK(x.numerator == 3);
  CHECK(x.denominator == 4);
  CHECK(ReducedRational::make(5, 5).is_one());
  CHECK_THROWS(ReducedRational::make(0, 5));
  CHECK_THROWS(ReducedRational::make(6, 5));
  CHECK_THROWS(ReducedRational::make(1, 0));
}

TEST_CASE("expansions of 1/120, 1/2, 1/10 in base 3") {
  const auto a = kmd::expand(ReducedRational::make(1, 120), 3);
  CHECK(a.cycle_start == 1);
  CHECK(a.period() == 4);
  CHECK(std::vector<kmd::Digit>(a.digits.begin(), a.digits.begin() + 5) == ds({0, 0, 0, 0, 2}));

  const auto b = kmd::expand(ReducedRational::make(1, 2), kmd::MissingDigitSet::cantor());
  CHECK(b.digits == ds({1}));
  CHECK(b.period() == 1);
  CHECK(b.first_offending == std::size_t{1});
  CHECK_FALSE(b.member);

  const auto c = kmd::expand(ReducedRational::make(1, 10), kmd::MissingDigitSet::cantor());
  CHECK(c.digits == ds({0, 0, 2, 2}));
  CHECK(c.cycle_start == 0);
  CHECK_FALSE(c.first_offending);
  CHECK(c.member);
}

TEST_CASE("expand rejects the terminating regime") {
  CHECK_THROWS_AS(kmd::expand(ReducedRational::make(1, 9), 3), kmd::TerminatingRegimeError);
  CHECK_THROWS_AS(kmd::expand(ReducedRational::make(1, 1), 3), kmd::TerminatingRegimeError);
  CHECK_THROWS_AS(kmd::expand(ReducedRational::make(1, 8), 10), kmd::TerminatingRegimeError);
}

TEST_CASE("membership examples") {
  const auto cantor = kmd::MissingDigitSet::cantor();
  const auto one = kmd::member(ReducedRational::make(1, 1), cantor);
  CHECK(one.is_member());
  CHECK(one.regime == kmd::Regime::Unit);
  CHECK(kmd::member(ReducedRational::make(1, 120), cantor).is_member());
  const auto six = kmd::member(ReducedRational::make(1, 720), cantor);
  CHECK(six.verdict == kmd::Verdict::NonMember);
  CHECK(six.report.first_offending == std::size_t{6});
  // 1/3 = 0.1 = 0.0222...
  const auto third = kmd::member(ReducedRational::make(1, 3), cantor);
  CHECK(third.is_member());
  CHECK(third.via_alternate_expansion);
  // 2/3 = 0.2
  const auto two_thirds = kmd::member(ReducedRational::make(2, 3), cantor);
  CHECK(two_thirds.is_member());
  CHECK_FALSE(two_thirds.via_alternate_expansion);
  // 4/9 = 0.11 = 0.1022...: both expansions leave {0,2}
  const auto four_ninths = kmd::member(ReducedRational::make(4, 9), cantor);
  CHECK(four_ninths.verdict == kmd::Verdict::NonMember);
  CHECK(four_ninths.report.first_offending == std::size_t{1});
  CHECK(kmd::member(ReducedRational::make(1, 1), kmd::MissingDigitSet(3, {0, 1})).verdict ==
        kmd::Verdict::NonMember);
}

TEST_CASE("early exit stops at the offending digit with lookahead") {
  const auto cantor = kmd::MissingDigitSet::cantor();
  const auto m = kmd::member(ReducedRational::make(1, 720), cantor, kmd::kDefaultDigitCap, 2);
  CHECK(m.report.digits.size() == 8);
  CHECK_FALSE(m.report.closed());
  const auto want = kmd::oracle::digits(1, 720, 3, 8);
  CHECK(m.report.digits == want);
}

TEST_CASE("cap exhaustion is inconclusive") {
  // 1/(2^61 - 1) in base 3: long period, all leading digits are 0.
  const Natural v = (Natural(1) << 61) - 1;
  const auto m = kmd::member(ReducedRational::make(1, v), kmd::MissingDigitSet::cantor(), 30);
  CHECK(m.verdict == kmd::Verdict::Inconclusive);
  CHECK(m.report.cap_exhausted);
  CHECK(m.report.digits.size() == 30);
}

TEST_CASE("period digit counts") {
  const auto tenth = kmd::expand(ReducedRational::make(1, 10), 3);
  CHECK(kmd::period_digit_counts(tenth, 3) == std::map<kmd::Digit, std::size_t>{{0, 2}, {2, 2}});
  const auto half = kmd::expand(ReducedRational::make(1, 2), 3);
  CHECK(kmd::period_digit_counts(half, 3) == std::map<kmd::Digit, std::size_t>{{1, 1}});
  const auto seventh = kmd::expand(ReducedRational::make(1, 7), 3);
  std::size_t total = 0;
  for (const auto& [d, n] : kmd::period_digit_counts(seventh, 3)) total += n;
  CHECK(total == 6);
  CHECK_THROWS(kmd::period_digit_counts(kmd::expand(ReducedRational::make(1, 120), 3), 3));
}

TEST_CASE("shift_reduce") {
  const auto a = kmd::shift_reduce(Natural(120), 3);
  CHECK(a.numerator == 1);
  CHECK(a.denominator == 40);
  const auto b = kmd::shift_reduce(Natural(7), 3);
  CHECK((b.numerator == 1 && b.denominator == 7));
  const auto c = kmd::shift_reduce(Natural(12), 3);
  CHECK((c.numerator == 1 && c.denominator == 4));
  // 1/120 in C forces 1/40 in C.
  CHECK(kmd::member(a, kmd::MissingDigitSet::cantor()).is_member());
  CHECK_THROWS(kmd::shift_reduce(Natural(9), 3));
}

TEST_CASE("word and big engines on the dense/sparse boundary") {
  const auto cantor = kmd::MissingDigitSet::cantor();
  for (std::uint64_t v : {65'535ULL, 65'536ULL, 65'537ULL, 1'000'003ULL}) {
    const auto w = kmd::detail::long_division(1, v, 3, 200'000, &cantor, false, 0, kmd::detail::Engine::Word);
    const auto b = kmd::detail::long_division(1, v, 3, 200'000, &cantor, false, 0, kmd::detail::Engine::Big);
    CHECK(w.digits == b.digits);
    CHECK(w.cycle_start == b.cycle_start);
    CHECK(w.cycle_end == b.cycle_end);
    CHECK(w.first_offending == b.first_offending);
  }
  CHECK_THROWS(kmd::detail::long_division(1, Natural(1) << 70, 3, 10, nullptr, false, 0, kmd::detail::Engine::Word));
}

TEST_CASE("expansions past the word range") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    Natural v = (Natural(rng()) << 64) + rng();
    v |= 1;
    if (v % 3 == 0) v += 2;
    const auto r = kmd::detail::long_division(1, v, 3, 60, nullptr, false, 0);
    CHECK(r.digits == kmd::oracle::digits(1, v, 3, 60));
  }
}
