#include <cmath>
#include <random>

#include "kmd/criterion.hpp"
#include "kmd/sweeps.hpp"
#include "suites.hpp"

namespace kmd::selftest {

void suite_obstruction(Recorder& rec, const Options&) {
  const auto set = MissingDigitSet::cantor();
  std::vector<ObstructionParams> params;
  for (unsigned long p0 : {2UL, 5UL, 7UL, 11UL, 13UL}) params.push_back(ObstructionParams::make(set, Natural(p0)));

  for (const auto& hit : reduction_sweep_serial(set, 5000)) {
    for (const auto& p : params) {
      const auto check = obstruction_holds(hit.coprime, p);
      rec.check(check.holds, "obstruction holds for member 1/", hit.a, " with p0 = ", p.p0.get_str(),
                " (nu = ", check.valuation, ", t = ", check.t, ", nu_ord = ", check.radical_order_valuation, ")");
    }
  }
  for (const auto& hit : korobov_sweep_serial(set, 3000)) {
    for (const auto& p : params) {
      rec.check(obstruction_holds(Natural(hit.q), p).holds, "obstruction holds for member ", hit.r, "/", hit.q,
                " with p0 = ", p.p0.get_str());
    }
  }
  // Sanity on the other side: 2^k for large k is excluded.
  const auto two = ObstructionParams::make(set, Natural(2));
  rec.check(!obstruction_holds(Natural(1) << 20, two).holds, "2^20 is excluded");
}

void suite_cutoff_forms(Recorder& rec, const Options&) {
  std::mt19937_64 rng(2024);
  const std::vector<MissingDigitSet> sets{MissingDigitSet::cantor(), MissingDigitSet(5, {0, 2, 4}),
                                          MissingDigitSet(10, {1, 3, 5, 7, 9}), MissingDigitSet(7, {0, 6})};
  for (int i = 0; i < 10'000; ++i) {
    const auto& set = sets[rng() % sets.size()];
    unsigned long p0 = 2;
    do {
      const unsigned long choices[] = {2, 3, 5, 7, 11};
      p0 = choices[rng() % 5];
    } while (set.base() % p0 == 0);
    const auto params = ObstructionParams::make(set, Natural(p0));
    const auto alpha = static_cast<std::int64_t>(rng() % 90) - 5;
    const auto gamma = static_cast<std::int64_t>(rng() % 12);

    // Symbolic route: an integer k exceeds log_p c exactly when it exceeds floor(log_p c).
    const std::int64_t k = alpha - static_cast<std::int64_t>(params.t) - gamma;
    const bool symbolic = k > static_cast<std::int64_t>(floor_log(Natural(p0), params.c));
    const bool exact = structural_cutoff_holds(alpha, gamma, params);
    rec.check(exact == symbolic, "structural form vs symbolic log, alpha=", alpha, " gamma=", gamma, " p0=", p0);
    const long double real_log = std::log(params.c.get_d()) / std::log(static_cast<long double>(p0));
    if (std::fabs(static_cast<long double>(k) - real_log) > 1e-9L) {
      rec.check(exact == (static_cast<long double>(k) > real_log), "structural form vs floating log");
    }

    Rational beta(Natural(2 + rng() % 1'000'000), Natural(1 + rng() % 7));
    beta.canonicalize();
    if (beta < 2) beta = 2;
    const bool lpf = lpf_cutoff_holds(alpha, beta, params);
    const std::int64_t k_lpf = alpha - static_cast<std::int64_t>(params.t);
    rec.check(lpf == (k_lpf > static_cast<std::int64_t>(floor_log(Natural(p0), Rational(params.c * (beta - 1))))),
              "largest-prime form vs symbolic log");
    // nu_{p0}(ord_p(m)) <= floor(log_{p0}(p - 1)), so lpf implies the structural form with the floor.
    if (lpf) {
      const auto floor_gamma = static_cast<std::int64_t>(floor_log(Natural(p0), Rational(beta - 1)));
      rec.check(structural_cutoff_holds(alpha, floor_gamma, params), "lpf implies structural (floor), alpha=", alpha,
                " beta=", beta.get_str());
    }
  }
}

void suite_korobov_constant(Recorder& rec, const Options&) {
  for (unsigned m = 3; m <= 20; ++m) {
    for (std::size_t k = 2; k < m; ++k) {
      const Rational c = korobov_constant(m, k);
      Rational ratio(static_cast<unsigned long>(k), static_cast<unsigned long>(m - k));
      ratio.canonicalize();
      const Rational want = Rational(2 * (m - 1)) * (ratio < 1 ? ratio : Rational(1));
      rec.check(c == want, "c_{", m, ",|D|=", k, "} formula");
      rec.check(c >= 4, "c_{", m, ",|D|=", k, "} >= 4");
    }
    // Every admissible D for the smaller bases.
    if (m <= 12) {
      for (unsigned mask = 0; mask < (1U << m); ++mask) {
        std::vector<unsigned> digits;
        for (unsigned d = 0; d < m; ++d) {
          if (mask & (1U << d)) digits.push_back(d);
        }
        if (digits.size() <= 1 || digits.size() >= m) continue;
        const MissingDigitSet set(m, digits);
        rec.check(korobov_constant(set) >= 4, "c >= 4 for m=", m, " D=", set.digits_string());
      }
    }
  }
}

}  // namespace kmd::selftest
