#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "kmd/criterion.hpp"
#include "kmd/expansion.hpp"
#include "kmd/sweeps.hpp"
#include "oracles.hpp"
#include "suites.hpp"

namespace kmd::selftest {

namespace {

// m r_{j-1} = d_j v + r_j with 0 <= r_j < v at every step, which is the
// reconstruction identity u/v = sum d_j m^-j + r_N / (v m^N) by induction;
// then the closed cycle must return to the remainder at cycle_start.
bool replay(const ExpansionReport& report, std::int64_t u, std::int64_t v, std::int64_t m) {
  std::int64_t r = u;
  std::int64_t at_start = report.cycle_start == 0 ? u : -1;
  for (std::size_t j = 0; j < report.digits.size(); ++j) {
    const std::int64_t next = m * r - static_cast<std::int64_t>(report.digits[j]) * v;
    if (next < 0 || next >= v) return false;
    r = next;
    if (j + 1 == report.cycle_start) at_start = r;
  }
  return !report.closed() || r == at_start;
}

// u m^s (m^l - 1) = v (A (m^l - 1) + B) with A, B the pre-period and period read in base m.
bool closed_form(const ExpansionReport& report, const Natural& u, const Natural& v, unsigned m) {
  const auto read = [&](std::size_t from, std::size_t to) {
    Natural out = 0;
    for (std::size_t i = from; i < to; ++i) out = out * m + report.digits[i];
    return out;
  };
  Natural ms, ml;
  mpz_ui_pow_ui(ms.get_mpz_t(), m, report.cycle_start);
  mpz_ui_pow_ui(ml.get_mpz_t(), m, report.period());
  const Natural a = read(0, report.cycle_start);
  const Natural b = read(report.cycle_start, report.cycle_end);
  return u * ms * (ml - 1) == v * (a * (ml - 1) + b);
}

void sweep_expansions(Recorder& rec, unsigned m, std::uint64_t v_max) {
  for (std::uint64_t v = 2; v <= v_max; ++v) {
    if (terminates_in_base(Natural(v), m)) continue;
    for (std::uint64_t u = 1; u < v; ++u) {
      if (std::gcd(u, v) != 1) continue;
      const auto report = expand(ReducedRational::make(u, v), m);
      if (!rec.check(report.closed(), "cycle closes for ", u, "/", v, " base ", m)) continue;
      rec.check(replay(report, static_cast<std::int64_t>(u), static_cast<std::int64_t>(v), m),
                "digit recurrence for ", u, "/", v, " base ", m);
      rec.check(closed_form(report, u, v, m), "closed form for ", u, "/", v, " base ", m);
      if (u <= 2) {
        const auto want = oracle::digits(u, v, m, std::min<std::size_t>(report.digits.size(), 40));
        rec.check(std::equal(want.begin(), want.end(), report.digits.begin()),
                  "digits vs exact rationals for ", u, "/", v, " base ", m);
      }
    }
  }
}

// Base-m digits of u/v when v | m^k, padded to k digits.
std::vector<Digit> finite_digits(std::uint64_t u, std::uint64_t v, unsigned m) {
  std::uint64_t k = 0;
  Natural power = 1;
  while (power % v != 0) {
    power *= m;
    ++k;
  }
  Natural n = Natural(u) * (power / v);
  std::vector<Digit> out(k, 0);
  for (std::uint64_t i = k; i-- > 0;) {
    out[i] = static_cast<Digit>(Natural(n % m).get_ui());
    n /= m;
  }
  return out;
}

bool all_allowed(const std::vector<Digit>& digits, Digit tail, const MissingDigitSet& set) {
  return std::all_of(digits.begin(), digits.end(), [&](Digit d) { return set.allows(d); }) && set.allows(tail);
}

void check_terminating(Recorder& rec, const MissingDigitSet& set, std::uint64_t v_max) {
  const unsigned m = set.base();
  for (std::uint64_t v = 2; v <= v_max; ++v) {
    if (!terminates_in_base(Natural(v), m)) continue;
    for (std::uint64_t u = 1; u < v; ++u) {
      if (std::gcd(u, v) != 1) continue;
      auto standard = finite_digits(u, v, m);
      auto alternate = standard;
      alternate.back() -= 1;
      const bool want = all_allowed(standard, 0, set) || all_allowed(alternate, m - 1, set);
      const auto got = member(ReducedRational::make(u, v), set);
      rec.check(got.regime == Regime::Terminating, "regime of ", u, "/", v);
      rec.check(got.is_member() == want, "two-expansion rule for ", u, "/", v, " in K_{", m, ",",
                set.digits_string(), "}");
      rec.check(got.report.first_offending.has_value() == !want, "first offending present iff non-member ",
                u, "/", v);
    }
  }
}

}  // namespace

void suite_expansion(Recorder& rec, const Options&) {
  sweep_expansions(rec, 3, 2000);
  sweep_expansions(rec, 10, 300);
  sweep_expansions(rec, 7, 200);
}

void suite_periodic(Recorder& rec, const Options&) {
  std::mt19937_64 rng(5);
  for (unsigned m : {3U, 4U, 10U, 12U}) {
    for (std::uint64_t v = 2; v <= 2000; ++v) {
      if (terminates_in_base(Natural(v), m)) continue;
      std::uint64_t u = 1 + rng() % (v - 1);
      while (std::gcd(u, v) != 1) u = 1 + rng() % (v - 1);
      const auto report = expand(ReducedRational::make(u, v), m);
      const std::uint64_t part = coprime_part(Natural(v), Natural(m)).get_ui();
      rec.check(report.period() == order(Natural(m), Natural(part)), "period of ", u, "/", v, " base ", m);
      // Pre-period: least s with (v, m^inf) | m^s.
      std::uint64_t s = 0;
      Natural power = 1;
      while (power % (v / part) != 0) {
        power *= m;
        ++s;
      }
      rec.check(report.cycle_start == s, "pre-period of ", u, "/", v, " base ", m);
      if (std::gcd<std::uint64_t>(v, m) == 1) rec.check(report.cycle_start == 0, "purely periodic ", u, "/", v);
    }
  }
}

void suite_early_exit(Recorder& rec, const Options&) {
  const std::vector<MissingDigitSet> sets{MissingDigitSet::cantor(), MissingDigitSet(5, {1, 3}),
                                          MissingDigitSet(10, {0, 1, 8, 9})};
  for (const auto& set : sets) {
    const unsigned m = set.base();
    const std::uint64_t v_max = m == 3 ? 1000 : 300;
    for (std::uint64_t v = 2; v <= v_max; ++v) {
      if (terminates_in_base(Natural(v), m)) continue;
      for (std::uint64_t u = 1; u < v; ++u) {
        if (std::gcd(u, v) != 1) continue;
        const auto x = ReducedRational::make(u, v);
        const auto quick = member(x, set);
        const auto full = expand(x, set);
        rec.check(quick.conclusive(), "conclusive ", u, "/", v);
        rec.check(quick.is_member() == full.member, "early verdict vs full cycle ", u, "/", v, " base ", m);
        rec.check(quick.report.first_offending == full.first_offending, "first offending ", u, "/", v);
        if (u <= 3) {
          const auto walk = oracle::walk(u, v, m, set.digits());
          rec.check(walk.member == quick.is_member() && walk.first_offending == quick.report.first_offending,
                    "exact-rational walk for ", u, "/", v, " base ", m);
        }
      }
    }
  }
}

void suite_terminating(Recorder& rec, const Options&) {
  check_terminating(rec, MissingDigitSet::cantor(), 729);
  check_terminating(rec, MissingDigitSet(3, {1, 2}), 729);
  check_terminating(rec, MissingDigitSet(10, {4, 9}), 1000);
  check_terminating(rec, MissingDigitSet(10, {0, 5}), 1000);
  // x = 1 is 0.(m-1)...
  for (const auto& set : {MissingDigitSet::cantor(), MissingDigitSet(3, {0, 1}), MissingDigitSet(10, {0, 9})}) {
    const auto got = member(ReducedRational::make(1, 1), set);
    rec.check(got.regime == Regime::Unit, "x = 1 regime");
    rec.check(got.is_member() == set.allows(set.base() - 1), "x = 1 membership in ", set.digits_string());
  }
  rec.check(member(ReducedRational::make(1, 3), MissingDigitSet::cantor()).via_alternate_expansion,
            "1/3 = 0.0222... is a member through the alternate expansion");
}

void suite_engines(Recorder& rec, const Options&) {
  using detail::Engine;
  const auto set = MissingDigitSet::cantor();
  std::mt19937_64 rng(11);
  std::vector<std::uint64_t> moduli;
  for (std::uint64_t v = 65'530; v <= 65'545; ++v) moduli.push_back(v);
  for (int i = 0; i < 400; ++i) {
    const unsigned bits = 4 + static_cast<unsigned>(rng() % 61);
    moduli.push_back((rng() >> (64 - bits)) | 2);
  }
  moduli.push_back(~std::uint64_t{0});
  for (const std::uint64_t v : moduli) {
    const Natural nv = v;
    const Natural u = Natural(rng() % v);
    for (bool early : {false, true}) {
      for (unsigned base : {3U, 10U}) {
        const auto word = detail::long_division(u, nv, base, 3000, &set, early, 2, Engine::Word);
        const auto big = detail::long_division(u, nv, base, 3000, &set, early, 2, Engine::Big);
        rec.check(word.digits == big.digits && word.cycle_start == big.cycle_start &&
                      word.cycle_end == big.cycle_end && word.first_offending == big.first_offending &&
                      word.cap_exhausted == big.cap_exhausted && word.member == big.member,
                  "word and big engines agree on ", u.get_str(), "/", v, " base ", base);
      }
    }
  }
}

void suite_korobov(Recorder& rec, const Options&) {
  const auto set = MissingDigitSet::cantor();
  const Rational c = korobov_constant(set);
  rec.check(c == 4, "c_{3,{0,2}} = 4");
  const auto hits = korobov_sweep_serial(set, 3000);
  rec.check(!hits.empty(), "the sweep finds members");
  for (const auto& hit : hits) {
    rec.check(Rational(hit.order_q) <= c * hit.order_radical, "ord_q(3) <= c ord_rad(q)(3) for q = ", hit.q);
    rec.check(hit.order_q == oracle::order(3, hit.q), "ord_", hit.q, "(3)");
    rec.check(hit.order_radical == oracle::order(3, oracle::radical(hit.q)), "ord_rad(", hit.q, ")(3)");
    rec.check(member(ReducedRational::make(hit.r, hit.q), set).is_member(), hit.r, "/", hit.q, " is a member");
  }
  // The orbit search agrees with member() over every unit for small q.
  std::set<std::uint64_t> found;
  for (const auto& hit : hits) found.insert(hit.q);
  for (std::uint64_t q = 2; q <= 400; ++q) {
    if (q % 3 == 0) continue;
    std::optional<std::uint64_t> least;
    for (std::uint64_t r = 1; r < q && !least; ++r) {
      if (std::gcd(r, q) == 1 && member(ReducedRational::make(r, q), set).is_member()) least = r;
    }
    const auto it = std::find_if(hits.begin(), hits.end(), [&](const KorobovHit& h) { return h.q == q; });
    rec.check(least.has_value() == (found.count(q) > 0), "orbit search vs member() for q = ", q);
    if (least && it != hits.end()) rec.check(it->r == *least, "least r for q = ", q);
  }
}

void suite_reduction(Recorder& rec, const Options&) {
  const auto set = MissingDigitSet::cantor();
  const auto hits = reduction_sweep_serial(set, 5000);
  rec.check(!hits.empty(), "the sweep finds members");
  std::set<std::uint64_t> found;
  for (const auto& hit : hits) {
    found.insert(hit.a);
    rec.check(hit.reduced_member, "shift_reduce(", hit.a, ", 3) stays in the set");
  }
  for (std::uint64_t a = 2; a <= 5000; ++a) {
    if (coprime_part(Natural(a), Natural(3)) < 2) continue;
    const auto walk = oracle::walk(1, a, 3, set.digits());
    rec.check(walk.member == (found.count(a) > 0), "1/", a, " membership vs exact-rational walk");
    // Fractional part of 3^k / A for the least k clearing the 3-part.
    std::uint64_t three = 1;
    while (three % (a / coprime_part(Natural(a), Natural(3)).get_ui()) != 0) three *= 3;
    mpq_class x{Natural(three), Natural(a)};
    x.canonicalize();
    x -= Natural(x.get_num() / x.get_den());
    const auto reduced = shift_reduce(Natural(a), 3);
    rec.check(reduced.numerator == x.get_num() && reduced.denominator == x.get_den(), "shift_reduce(", a, ", 3)");
  }
  const auto example = shift_reduce(Natural(120), 3);
  rec.check(example.numerator == 1 && example.denominator == 40, "shift_reduce(120, 3) = 1/40");
}

}  // namespace kmd::selftest
