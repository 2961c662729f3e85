#include <random>

#include "doctest.h"
#include "kmd/numtheory.hpp"
#include "oracles.hpp"

using kmd::Natural;

namespace {

std::vector<std::pair<unsigned long, std::uint64_t>> pairs(const kmd::Factorization& f) {
  std::vector<std::pair<unsigned long, std::uint64_t>> out;
  for (const auto& pp : f) out.emplace_back(pp.prime.get_ui(), pp.exponent);
  return out;
}

}  // namespace

TEST_CASE("factorize small values") {
  using P = std::vector<std::pair<unsigned long, std::uint64_t>>;
  CHECK(kmd::factorize(Natural(1)).empty());
  CHECK(pairs(kmd::factorize(Natural(12))) == P{{2, 2}, {3, 1}});
  CHECK(pairs(kmd::factorize(Natural(120))) == P{{2, 3}, {3, 1}, {5, 1}});
  CHECK_THROWS_AS(kmd::factorize(Natural(0)), std::invalid_argument);
}

TEST_CASE("factorize past 2^64") {
  const Natural p("1099511627791");        // prime just above 2^40
  const Natural q("18446744073709551629"); // prime above 2^64
  REQUIRE(kmd::is_prime(p));
  REQUIRE(kmd::is_prime(q));
  const auto f = kmd::factorize(p * q * 49);
  REQUIRE(f.size() == 3);
  CHECK(f.factors()[0].prime == 7);
  CHECK(f.factors()[0].exponent == 2);
  CHECK(f.factors()[1].prime == p);
  CHECK(f.factors()[2].prime == q);
  CHECK(f.value() == p * q * 49);
}

TEST_CASE("radical and largest prime factor") {
  CHECK(kmd::radical(Natural(1)) == 1);
  CHECK(kmd::radical(Natural(12)) == 6);
  CHECK(kmd::radical(Natural(120)) == 30);
  CHECK(kmd::largest_prime_factor(Natural(1)) == 1);
  CHECK(kmd::largest_prime_factor(Natural(40)) == 5);
  CHECK(kmd::largest_prime_factor(Natural(30)) == 5);
}

TEST_CASE("m-part and coprime part") {
  CHECK(kmd::m_part(Natural(120), Natural(3)) == 3);
  CHECK(kmd::m_part(Natural(7), Natural(3)) == 1);
  CHECK(kmd::m_part(Natural(120), Natural(6)) == 24);
  CHECK(kmd::coprime_part(Natural(120), Natural(3)) == 40);
  CHECK(kmd::coprime_part(Natural(9), Natural(3)) == 1);
  CHECK(kmd::coprime_part(Natural(12), Natural(3)) == 4);
}

TEST_CASE("valuations and digit sums") {
  CHECK(kmd::nu(Natural(2), Natural(80)) == 4);
  CHECK(kmd::nu(Natural(5), Natural(80)) == 1);
  CHECK(kmd::nu(Natural(7), Natural(10)) == 0);
  CHECK_THROWS(kmd::nu(Natural(2), Natural(0)));
  CHECK(kmd::digit_sum(Natural(10), 2) == 2);
  CHECK(kmd::digit_sum(Natural(0), 2) == 0);
  CHECK(kmd::digit_sum(Natural(5), 5) == 1);
  CHECK(kmd::factorial_valuation(Natural(10), 2) == 8);
  CHECK(kmd::factorial_valuation(Natural(5), 2) == 3);
  CHECK(kmd::factorial_valuation(Natural(1), 7) == 0);
}

TEST_CASE("central binomial valuations") {
  CHECK(kmd::binomial_central_valuation(Natural(4), 2) == 1);
  CHECK(kmd::binomial_central_valuation(Natural(9), 3) == 0);
  CHECK(kmd::binomial_central_valuation(Natural(3), 2) == 2);
  CHECK(kmd::doubling_carries(Natural(3), 2) == 2);
}

TEST_CASE("multiplicative orders") {
  CHECK(kmd::order(Natural(3), Natural(7)) == 6);
  CHECK(kmd::order(Natural(3), Natural(25)) == 20);
  CHECK(kmd::order(Natural(3), Natural(1)) == 1);
  CHECK(kmd::order(Natural(10), Natural(1)) == 1);
  CHECK(kmd::order_prime_power(Natural(3), Natural(5), 2) == 20);
  CHECK(kmd::order_prime_power(Natural(3), Natural(5), 1) == 4);
  CHECK(kmd::order_prime_power(Natural(3), Natural(2), 3) == 2);
  CHECK_THROWS_AS(kmd::order(Natural(3), Natural(6)), std::domain_error);
  CHECK_THROWS(kmd::order(Natural(3), Natural(0)));
}

TEST_CASE("orders agree with stepping for random moduli") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t q = 2 + rng() % 200'000;
    const std::uint64_t a = 2 + rng() % 50;
    if (std::gcd(a, q) != 1) continue;
    CHECK(kmd::order(Natural(a), Natural(q)) == kmd::oracle::order(a, q));
  }
}

TEST_CASE("overheads") {
  CHECK(kmd::two_adic_overhead(Natural(3)) == 2);
  CHECK(kmd::lifting_overhead(Natural(3), Natural(5)) == 1);
  CHECK(kmd::lifting_overhead(Natural(10), Natural(3)) == 2);
  CHECK_THROWS(kmd::two_adic_overhead(Natural(1)));
  CHECK_THROWS(kmd::two_adic_overhead(Natural(4)));
}

TEST_CASE("floor_log") {
  CHECK(kmd::floor_log(Natural(5), Natural(24)) == 1);
  CHECK(kmd::floor_log(Natural(5), Natural(25)) == 2);
  CHECK(kmd::floor_log(Natural(5), Natural(125)) == 3);
  CHECK(kmd::floor_log(Natural(2), mpq_class(1799)) == 10);
  CHECK(kmd::floor_log(Natural(2), mpq_class(9, 2)) == 2);
}

TEST_CASE("Factorization merge and filtering") {
  auto a = kmd::factorize(Natural(12));
  a.merge(kmd::factorize(Natural(90)));
  CHECK(a.value() == 1080);
  CHECK(a.exponent_of(Natural(3)) == 3);
  const auto b = a.without_primes_of(Natural(3));
  CHECK(b.value() == 40);
  CHECK(b.radical() == 10);
}
