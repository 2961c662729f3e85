#include "doctest.h"
#include "kmd/sequences.hpp"

using kmd::Natural;

TEST_CASE("polynomial parsing and evaluation") {
  const auto f = kmd::PolynomialSpec::parse("1,0,1");
  CHECK(f.degree() == 2);
  CHECK(f.coefficient_norm() == 2);
  CHECK(f.eval(3) == 10);
  CHECK(f.to_string() == "x^2+1");
  CHECK(kmd::PolynomialSpec::parse("0, 2, -3").to_string() == "2x-3");
  CHECK_THROWS(kmd::PolynomialSpec::parse("1,,2"));
  CHECK_THROWS(kmd::PolynomialSpec::parse("x"));
}

TEST_CASE("auxiliary primes") {
  const auto a = kmd::find_auxiliary_prime(kmd::PolynomialSpec({1, 0, 1}), 3);
  CHECK(a.p0 == 2);
  CHECK(a.residue == 1);
  const auto b = kmd::find_auxiliary_prime(kmd::PolynomialSpec({1, 0}), 3);
  CHECK(b.p0 == 2);
  CHECK(b.residue == 0);
  const auto c = kmd::find_auxiliary_prime(kmd::PolynomialSpec({2, 1}), 3);
  CHECK(c.p0 == 5);
  CHECK(c.k == 2);
}

TEST_CASE("polynomial family validation") {
  const auto cantor = kmd::MissingDigitSet::cantor();
  CHECK_THROWS(kmd::polynomial_family(kmd::PolynomialSpec({5}), cantor));
  CHECK_THROWS(kmd::polynomial_family(kmd::PolynomialSpec({-1, 0, 100}), cantor));
  CHECK_THROWS(kmd::polynomial_family(kmd::PolynomialSpec({1, -5}), cantor));
  CHECK_NOTHROW(kmd::polynomial_family(kmd::PolynomialSpec({1, 0}), cantor));
}

TEST_CASE("family values and bounds") {
  const auto cantor = kmd::MissingDigitSet::cantor();
  const auto fact = kmd::factorial_family(cantor);
  CHECK(fact.value(5) == 120);
  CHECK(fact.bounds.alpha(10) == 8);
  CHECK(fact.certified_cutoff == std::uint64_t{10});

  const auto sf = kmd::superfactorial_family(cantor);
  CHECK(sf.value(3) == 12);
  CHECK(sf.bounds.alpha(5) == 8);

  const auto poly = kmd::polynomial_family(kmd::PolynomialSpec({1, 0, 1}), cantor);
  CHECK(poly.value(2) == 10);
  CHECK(poly.bounds.alpha(30) == 15);
  CHECK(poly.bounds.beta(30) == 1800);

  const auto fib = kmd::fibonacci_family(cantor);
  CHECK(fib.value(5) == 30);
  CHECK(fib.bounds.beta(1) == 2);
  CHECK_THROWS(kmd::fibonacci_family(kmd::MissingDigitSet(4, {0, 3})));

  const auto mk = kmd::mk_minus_one_family(cantor);
  CHECK(mk.params.p0 == 5);
  CHECK(mk.value(2) == 16);
  CHECK(mk.bounds.gamma(24) == 1);
  CHECK(mk.bounds.gamma(4) == 0);
  CHECK(mk.bounds.gamma(125) == 3);
  // ord_5(3) = 4, so 5 | 3^k - 1 exactly when 4 | k.
  for (std::uint64_t k = 1; k <= 40; ++k) CHECK((mk.term(k) % 5 == 0) == (k % 4 == 0));
}

TEST_CASE("make_family by name") {
  const auto cantor = kmd::MissingDigitSet::cantor();
  CHECK(kmd::make_family("mk", cantor).name == "mk");
  CHECK_THROWS(kmd::make_family("polynomial", cantor));
  CHECK_THROWS(kmd::make_family("lucas", cantor));
  CHECK(kmd::make_family("factorial", cantor, std::nullopt, Natural(5)).params.p0 == 5);
  CHECK_THROWS(kmd::make_family("factorial", cantor, std::nullopt, Natural(3)));
}

TEST_CASE("Fibonacci 2-adic sums") {
  CHECK(kmd::fib_two_adic_sum(6) == 4);  // nu_2 over 1,1,2,3,5,8
  CHECK(kmd::fib_two_adic_lower_bound(12) == 9);
  CHECK(kmd::fib_two_adic_sum(12) == 9);
  CHECK(kmd::fib_two_adic_lower_bound(11) == 5);
  CHECK(kmd::fib_two_adic_sum(11) == 5);
  CHECK(kmd::fib_alpha(106) == 89 - 6 - 5);
  CHECK_THROWS(kmd::fib_alpha(0));
}

TEST_CASE("coprime profile") {
  const auto fact = kmd::factorial_family(kmd::MissingDigitSet::cantor());
  const auto p = kmd::coprime_profile(fact, 6);
  CHECK(p.coprime_part[4] == 40);
  CHECK(p.p0_valuation[4] == 3);
  CHECK(p.coprime_part[5] == 80);
  const auto f = kmd::coprime_factorizations(fact, 6);
  CHECK(f[5].value() == 80);
}

TEST_CASE("non-examples") {
  const auto d = kmd::nonexample_primorial(4);
  CHECK(d.primorial == 210);
  for (const auto& [p, v] : d.valuations) CHECK(v == 1);
  CHECK(d.coprime_part_squarefree);
  CHECK(d.cutoff_unreachable);
  for (std::uint64_t n = 1; n <= 25; ++n) CHECK(kmd::nonexample_primorial(n).coprime_part_squarefree);

  const auto a = kmd::nonexample_central_binomial(2, Natural(3));
  CHECK(a.n == 9);
  CHECK(a.valuation == 0);
  CHECK_FALSE(a.cutoff_unreachable.has_value());
  const auto b = kmd::nonexample_central_binomial(3, Natural(2));
  CHECK(b.n == 8);
  CHECK(b.valuation == 1);
  CHECK(b.cutoff_unreachable == true);
  CHECK(kmd::nonexample_central_binomial(1, Natural(5)).valuation == 0);
}
