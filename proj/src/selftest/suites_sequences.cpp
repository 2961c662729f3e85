#include "kmd/sequences.hpp"
#include "kmd/table.hpp"
#include "oracles.hpp"
#include "suites.hpp"

namespace kmd::selftest {

namespace {

struct Windowed {
  FamilySpec family;
  std::uint64_t window;
};

std::vector<Windowed> alpha_configurations() {
  const auto cantor = MissingDigitSet::cantor();
  const MissingDigitSet five(5, {0, 2, 4});
  return {
      {factorial_family(cantor), 200},
      {factorial_family(cantor, Natural(5)), 200},
      {factorial_family(five, Natural(3)), 200},
      {superfactorial_family(cantor), 200},
      {superfactorial_family(five), 200},
      {polynomial_family(PolynomialSpec({1, 0, 1}), cantor), 200},
      {polynomial_family(PolynomialSpec({2, 0, 0, 1}), cantor), 200},
      {polynomial_family(PolynomialSpec({1, 1, 1}), five), 200},
      {fibonacci_family(cantor), 150},
      {fibonacci_family(five), 150},
      {mk_minus_one_family(cantor), 200},
      {mk_minus_one_family(MissingDigitSet(7, {0, 3, 6})), 120},
  };
}

std::string label(const FamilySpec& f) {
  return f.name + " m=" + std::to_string(f.base()) + " p0=" + f.params.p0.get_str();
}

}  // namespace

void suite_alpha(Recorder& rec, const Options&) {
  for (const auto& [family, window] : alpha_configurations()) {
    const auto profile = coprime_profile(family, window);
    for (std::uint64_t n = 1; n <= window; ++n) {
      const auto exact = static_cast<std::int64_t>(profile.p0_valuation[n - 1]);
      rec.check(family.bounds.alpha(n) <= exact, "alpha(", n, ") <= nu_p0(Q_n) for ", label(family),
                " (alpha = ", family.bounds.alpha(n), ", nu = ", exact, ")");
    }
    // The running valuation agrees with a direct valuation of Q_n at a few points.
    for (std::uint64_t n : {std::uint64_t{1}, window / 2, window}) {
      rec.check(profile.p0_valuation[n - 1] == oracle::valuation(family.params.p0, profile.coprime_part[n - 1]),
                "running valuation at n=", n, " for ", label(family));
    }
  }
}

void suite_beta(Recorder& rec, const Options&) {
  for (const auto& [family, window] : alpha_configurations()) {
    if (family.bounds.kind != BoundKind::LargestPrime) continue;
    const auto factors = coprime_factorizations(family, 60);
    const auto profile = coprime_profile(family, 60);
    for (std::uint64_t n = 1; n <= 60; ++n) {
      const auto& f = factors[n - 1];
      rec.check(f.value() == profile.coprime_part[n - 1], "factored Q_n matches the product at n=", n, " for ",
                label(family));
      const Natural largest = f.empty() ? Natural(1) : f.factors().back().prime;
      rec.check(Rational(largest) <= family.bounds.beta(n), "P+(Q_", n, ") <= beta for ", label(family));
    }
  }
}

void suite_gamma(Recorder& rec, const Options&) {
  for (const auto& set : {MissingDigitSet::cantor(), MissingDigitSet(7, {0, 3, 6})}) {
    const auto family = mk_minus_one_family(set);
    const auto factors = coprime_factorizations(family, 40);
    for (std::uint64_t n = 1; n <= 40; ++n) {
      std::vector<PrimePower> rad;
      for (const auto& pp : factors[n - 1]) rad.push_back({pp.prime, 1});
      if (rad.empty()) continue;
      const Natural ord = order(Natural(set.base()), Factorization(rad));
      const auto v = static_cast<std::int64_t>(nu(family.params.p0, ord));
      rec.check(v <= family.bounds.gamma(n), "nu_p0(ord_rad(Q_", n, ")(m)) <= gamma for ", label(family), " (",
                v, " vs ", family.bounds.gamma(n), ")");
    }
  }
  // gamma(n) = nu_p0(lcm(1..n)), read off a literal lcm.
  Natural l = 1;
  for (std::uint64_t n = 1; n <= 300; ++n) {
    l = lcm_of(l, Natural(n));
    rec.check(radical_order_bound_mk(n, 3, 5) == oracle::valuation(5, l), "nu_5(lcm(1..", n, "))");
  }
}

void suite_fib2adic(Recorder& rec, const Options&) {
  std::uint64_t sum = 0;
  for (std::uint64_t n = 1; n <= 500; ++n) {
    sum += oracle::valuation(2, fibonacci(n));
    rec.check(fib_two_adic_sum(n) == sum, "S(", n, ")");
    rec.check(fib_two_adic_lower_bound(n) <= sum, "closed-form lower bound <= S(", n, ")");
    rec.check(fib_alpha(n) <= static_cast<std::int64_t>(sum), "fib alpha(", n, ") <= S(", n, ")");
  }
  for (std::uint64_t u = 1; u <= 100; ++u) {
    rec.check(fibonacci(2 * u) == fibonacci(u) * lucas(u), "F_{2u} = F_u L_u for u=", u);
  }
  // The ladder starts at j = 1; F_3 = 2 only reaches 1.
  rec.check(nu(2, fibonacci(3)) == 1, "nu_2(F_3) = 1");
  for (std::uint64_t j = 1; j <= 10; ++j) {
    rec.check(nu(2, fibonacci(3 * (std::uint64_t{1} << j))) >= j + 2, "nu_2(F_{3*2^", j, "}) >= ", j + 2);
  }
}

void suite_tails(Recorder& rec, const Options&) {
  const auto cantor = MissingDigitSet::cantor();
  const std::vector<std::pair<FamilySpec, std::uint64_t>> expected{
      {factorial_family(cantor), 10},
      {superfactorial_family(cantor), 5},
      {polynomial_family(PolynomialSpec({1, 0, 1}), cantor), 30},
      {fibonacci_family(cantor), 106},
      {mk_minus_one_family(cantor), 12},
  };
  for (const auto& [family, n0] : expected) {
    rec.check(family.certified_cutoff == n0, "certified cutoff of ", family.name);
    const auto tail = verify_tail(family.bounds, family.params, n0, n0 + 200);
    rec.check(tail.holds, "tail [N0, N0+200] for ", family.name,
              tail.first_failure ? " fails at " + std::to_string(*tail.first_failure) : std::string());
  }
  const auto poly = polynomial_family(PolynomialSpec({1, 0, 1}), cantor);
  rec.check(poly.bounds.alpha(30) == 15 && poly.params.t == 2, "x^2+1 at n=30: alpha = 15, t = 2");
  rec.check(power_of(Natural(2), 13) > Rational(4 * 1799), "2^13 > 4 * 1799");
  rec.check(cutoff_rhs(poly.bounds, poly.params, 30) == 4 * 1799, "bound at n=30 is c(beta - 1) = 4 * 1799");
  rec.check(cutoff_holds_at(poly.bounds, poly.params, 30), "x^2+1 cutoff inequality at n=30");
}

void suite_families(Recorder& rec, const Options&) {
  const auto cantor = MissingDigitSet::cantor();
  const std::vector<FamilySpec> families{factorial_family(cantor), superfactorial_family(cantor),
                                         polynomial_family(PolynomialSpec({1, 0, 1}), cantor),
                                         fibonacci_family(cantor), mk_minus_one_family(cantor)};
  for (const auto& family : families) {
    const auto rows = compute_rows_serial(family, 1, *family.certified_cutoff - 1);
    std::set<std::uint64_t> members;
    for (const auto& row : rows) {
      rec.check(row.membership.conclusive(), family.name, " row ", row.n, " is conclusive");
      if (row.member()) members.insert(row.n);
    }
    rec.check(members == *family.known_members, "intersection for ", family.name);
  }
  const auto& fact = families[0];
  rec.check(fact.params.p0 == 2 && fact.params.t == 2 && fact.params.c == 4, "factorial p0=2, t=2, c=4");
  const auto& mk = families[4];
  rec.check(mk.params.p0 == 5 && mk.params.t == 1 && mk.params.c == 4, "mk p0=5, t=1, c=4");
  rec.check(mk.bounds.kind == BoundKind::Structural, "mk uses the structural form");
  const auto aux = find_auxiliary_prime(PolynomialSpec({1, 0, 1}), 3);
  rec.check(aux.p0 == 2 && aux.k == 1 && aux.residue == 1, "x^2+1 auxiliary prime 2 at k=1");
}

void suite_nonexamples(Recorder& rec, const Options&) {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    const auto demo = nonexample_primorial(n);
    rec.check(demo.coprime_part_squarefree, "primorial ", n, " has squarefree coprime part");
    rec.check(demo.cutoff_unreachable, "primorial ", n, " never meets the cutoff");
  }
  for (unsigned long p : {2UL, 5UL, 7UL}) {
    for (std::uint64_t k = 1; k <= 20; ++k) {
      const auto demo = nonexample_central_binomial(k, Natural(p));
      rec.check(demo.valuation == demo.expected, "nu_p(C(2p^k, p^k)) for p=", p, " k=", k);
      rec.check(demo.cutoff_unreachable.value_or(false), "central binomial never meets the cutoff p=", p);
    }
  }
}

}  // namespace kmd::selftest
