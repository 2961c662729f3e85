#include "doctest.h"
#include "kmd/table.hpp"

using kmd::Natural;

namespace {

kmd::Membership cantor_member(unsigned long u, unsigned long v) {
  return kmd::member(kmd::ReducedRational::make(u, v), kmd::MissingDigitSet::cantor(), kmd::kDefaultDigitCap,
                     kmd::kLookahead);
}

}  // namespace

TEST_CASE("prefix rendering") {
  CHECK(kmd::render_prefix(cantor_member(1, 1), 3) == "0.(2)");
  CHECK(kmd::render_prefix(cantor_member(1, 120), 3) == "0.0(0002)");
  CHECK(kmd::render_prefix(cantor_member(1, 10), 3) == "0.(0022)");
  CHECK(kmd::render_prefix(cantor_member(1, 2), 3) == "0.[1]11...");
  CHECK(kmd::render_prefix(cantor_member(1, 720), 3) == "0.00000[1]00...");
  CHECK(kmd::render_prefix(cantor_member(1, 720), 3, kmd::MarkStyle::Bold) == "0.00000**1**00...");
  CHECK(kmd::render_prefix(cantor_member(1, 3), 3) == "0.0(2)");
  CHECK(kmd::render_prefix(cantor_member(2, 3), 3) == "0.2(0)");
  CHECK(kmd::render_digit(11) == "b");
  CHECK(kmd::render_digit(40) == "<40>");
}

TEST_CASE("long prefixes are elided") {
  // 1/3^20-ish denominators push the first 1 deep; use a factorial row.
  const auto fact = kmd::factorial_family(kmd::MissingDigitSet::cantor());
  const auto rows = kmd::compute_rows_serial(fact, 9, 9);
  CHECK(kmd::render_prefix(rows[0].membership, 3) == "0.00000000000[1]11...");
  const auto mk = kmd::mk_minus_one_family(kmd::MissingDigitSet::cantor());
  const auto deep = kmd::compute_rows_serial(mk, 11, 11);
  CHECK(deep[0].first_offending() == std::size_t{66});
  CHECK(kmd::render_prefix(deep[0].membership, 3) == "0.00...00[1]21...");
}

TEST_CASE("factorial rows") {
  const auto fact = kmd::factorial_family(kmd::MissingDigitSet::cantor());
  const auto rows = kmd::compute_rows_serial(fact, 1, 9);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0].member());
  CHECK(rows[4].member());
  CHECK(rows[6].first_offending() == std::size_t{8});
  CHECK(rows[5].first_offending() == std::size_t{6});
  CHECK(rows[4].period_length() == std::size_t{4});
  CHECK_THROWS(kmd::compute_rows_serial(fact, 0, 3));
  CHECK_THROWS(kmd::compute_rows_serial(fact, 5, 4));
}

TEST_CASE("csv rendering") {
  const auto fact = kmd::factorial_family(kmd::MissingDigitSet::cantor());
  const auto csv = kmd::render_csv(kmd::compute_rows_serial(fact, 1, 2));
  CHECK(csv ==
        "n,member,first_offending,period_length,alpha,bound_rhs_num,bound_rhs_den\n"
        "1,1,,1,0,4,1\n"
        "2,0,1,,1,4,1\n");
}

TEST_CASE("markdown rendering") {
  const auto fact = kmd::factorial_family(kmd::MissingDigitSet::cantor());
  const auto md = kmd::render_markdown(kmd::compute_rows_serial(fact, 2, 2), 3);
  CHECK(md == "| n | expansion prefix | first offending |\n|---:|:---|---:|\n| 2 | 0.**1**11... | 1 |\n");
  CHECK_THROWS(kmd::parse_format("xml"));
}

TEST_CASE("parallel rows match serial rows") {
  const auto cantor = kmd::MissingDigitSet::cantor();
  for (const auto& family : {kmd::fibonacci_family(cantor), kmd::polynomial_family(kmd::PolynomialSpec({1, 0, 1}), cantor)}) {
    const auto last = *family.certified_cutoff - 1;
    const auto serial = kmd::render_csv(kmd::compute_rows_serial(family, 1, last)) +
                        kmd::render_golden(kmd::compute_rows_serial(family, 1, last), 3);
    for (unsigned workers : {1U, 3U, 8U}) {
      const auto rows = kmd::compute_rows_parallel(family, 1, last, kmd::kDefaultDigitCap, workers);
      CHECK(kmd::render_csv(rows) + kmd::render_golden(rows, 3) == serial);
    }
  }
}

TEST_CASE("parallel kernel propagates errors") {
  const auto fact = kmd::factorial_family(kmd::MissingDigitSet::cantor());
  CHECK_THROWS(kmd::compute_rows_parallel(fact, 0, 4));
}
