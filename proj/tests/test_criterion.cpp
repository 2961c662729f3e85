#include "doctest.h"
#include "kmd/criterion.hpp"

using kmd::Natural;
using kmd::Rational;

TEST_CASE("Korobov constants") {
  CHECK(kmd::korobov_constant(kmd::MissingDigitSet::cantor()) == 4);
  CHECK(kmd::korobov_constant(kmd::MissingDigitSet(10, {0, 1})) == Rational(9, 2));
  CHECK(kmd::korobov_constant(kmd::MissingDigitSet(4, {0, 1, 2})) == 6);
  CHECK_THROWS(kmd::korobov_constant(3, 1));
}

TEST_CASE("overheads t(m, p0)") {
  CHECK(kmd::overhead(3, Natural(2)) == 2);
  CHECK(kmd::overhead(3, Natural(5)) == 1);
  CHECK(kmd::overhead(10, Natural(3)) == 2);
  CHECK_THROWS_AS(kmd::overhead(3, Natural(3)), std::domain_error);
  CHECK_THROWS(kmd::ObstructionParams::make(kmd::MissingDigitSet::cantor(), Natural(4)));
}

TEST_CASE("obstruction examples") {
  const auto p = kmd::ObstructionParams::make(kmd::MissingDigitSet::cantor(), Natural(2));
  const auto forty = kmd::obstruction_holds(Natural(40), p);
  CHECK(forty.holds);
  CHECK(forty.valuation == 3);
  CHECK(forty.radical_order_valuation == 2);
  CHECK(kmd::obstruction_holds(Natural(7), p).holds);
  const auto big = kmd::obstruction_holds(Natural(1024 * 7), p);
  CHECK_FALSE(big.holds);
  CHECK(big.radical_order_valuation == 1);
  CHECK_THROWS_AS(kmd::obstruction_holds(Natural(6), p), std::domain_error);
  CHECK_THROWS(kmd::obstruction_holds(Natural(1), p));
}

TEST_CASE("structural and largest-prime cutoffs") {
  const auto five = kmd::ObstructionParams::make(kmd::MissingDigitSet::cantor(), Natural(5));
  CHECK(kmd::structural_cutoff_holds(3, 1, five));
  CHECK_FALSE(kmd::structural_cutoff_holds(2, 1, five));
  const auto two = kmd::ObstructionParams::make(kmd::MissingDigitSet::cantor(), Natural(2));
  CHECK(kmd::lpf_cutoff_holds(8, 10, two));   // 64 > 36
  CHECK(kmd::lpf_cutoff_holds(8, 5, two));    // 64 > 16
  CHECK(kmd::lpf_cutoff_holds(15, 1800, two)); // 8192 > 7196
  CHECK_FALSE(kmd::lpf_cutoff_holds(14, 1800, two));
  CHECK_THROWS(kmd::lpf_cutoff_holds(8, Rational(3, 2), two));
  // lpf with beta = 10 implies structural with gamma = floor(log2 9) = 3.
  CHECK(kmd::structural_cutoff_holds(8, 3, two));
  CHECK(kmd::power_of(Natural(2), -3) == Rational(1, 8));
}

TEST_CASE("verify_tail reports the first failing n") {
  const auto two = kmd::ObstructionParams::make(kmd::MissingDigitSet::cantor(), Natural(2));
  kmd::CutoffBounds b;
  b.kind = kmd::BoundKind::Structural;
  b.alpha = [](std::uint64_t n) { return static_cast<std::int64_t>(n); };
  b.gamma = [](std::uint64_t) { return std::int64_t{0}; };
  // 2^{n-2} > 4 iff n >= 5
  CHECK(kmd::verify_tail(b, two, 5, 50).holds);
  const auto tail = kmd::verify_tail(b, two, 3, 50);
  CHECK_FALSE(tail.holds);
  CHECK(tail.first_failure == std::uint64_t{3});
  CHECK_THROWS(kmd::verify_tail(b, two, 9, 8));
}
