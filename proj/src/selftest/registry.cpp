#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "suites.hpp"

namespace kmd::selftest {

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{
      {"primes", "Miller-Rabin vs trial division and GMP", suite_primes},
      {"factorize", "factorizations reconstruct n; radicals", suite_factorize},
      {"legendre", "factorial valuations three ways", suite_legendre},
      {"lifting", "odd prime-power orders vs brute force", suite_lifting},
      {"two_adic", "2-adic overhead and orders mod 2^k", suite_two_adic},
      {"crt", "orders vs brute force; lcm over coprime moduli", suite_crt},
      {"kummer", "central binomial valuations and carries", suite_kummer},
      {"expansion", "digit recurrence and closed form, v <= 2000", suite_expansion},
      {"periodic", "pre-period and period lengths", suite_periodic},
      {"early_exit", "early verdicts vs full cycles, v <= 1000", suite_early_exit},
      {"terminating", "two-expansion rule and x = 1", suite_terminating},
      {"engines", "word and big long-division engines agree", suite_engines},
      {"korobov", "ord_q(3) <= 4 ord_rad(q)(3) over members, q <= 3000", suite_korobov},
      {"reduction", "shift_reduce keeps 1/A members, A <= 5000", suite_reduction},
      {"obstruction", "obstruction holds for every member found", suite_obstruction},
      {"cutoff_forms", "exact cutoff comparisons vs logarithms", suite_cutoff_forms},
      {"korobov_constant", "c_{m,D} formula and c >= 4", suite_korobov_constant},
      {"alpha", "alpha(n) <= nu_p0(Q_n)", suite_alpha},
      {"beta", "P+(Q_n) <= beta(n), n <= 60", suite_beta},
      {"gamma", "nu_p0(ord_rad(Q_n)(m)) <= gamma(n), n <= 40", suite_gamma},
      {"fib2adic", "Fibonacci 2-adic sums and ladder", suite_fib2adic},
      {"tails", "certified cutoffs hold on [N0, N0+200]", suite_tails},
      {"families", "intersections below the cutoffs", suite_families},
      {"nonexamples", "primorials and central binomials", suite_nonexamples},
      {"goldens", "tables match the shipped golden files", suite_goldens},
      {"parallel", "OpenMP kernels match the serial ones", suite_parallel},
  };
  return suites;
}

std::vector<SuiteResult> run_suites(const Options& options, std::ostream* log) {
  const auto& suites = all_suites();
  for (const auto& name : options.suites) {
    if (std::none_of(suites.begin(), suites.end(), [&](const Suite& s) { return s.name == name; })) {
      throw std::invalid_argument("unknown suite '" + name + "'");
    }
  }
  std::vector<SuiteResult> results;
  for (const auto& suite : suites) {
    if (!options.suites.empty() &&
        std::find(options.suites.begin(), options.suites.end(), suite.name) == options.suites.end()) {
      continue;
    }
    Recorder rec;
    const auto start = std::chrono::steady_clock::now();
    try {
      suite.run(rec, options);
    } catch (const std::exception& e) {
      rec.check(false, "exception: ", e.what());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    SuiteResult result{suite.name, rec.checks(), rec.failures(), rec.messages(), elapsed.count()};
    if (log != nullptr) {
      *log << (result.passed() ? "PASS " : "FAIL ") << std::left << std::setw(18) << suite.name << std::right
           << std::setw(10) << result.checks << " checks" << std::setw(8) << result.failures << " failed"
           << std::fixed << std::setprecision(2) << std::setw(9) << result.seconds << " s  " << suite.summary
           << '\n';
      for (const auto& message : result.messages) *log << "    " << message << '\n';
      log->flush();
    }
    results.push_back(std::move(result));
  }
  return results;
}

int run_selftest(const Options& options, std::ostream& out) {
  const auto results = run_suites(options, &out);
  const bool ok = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed(); });
  out << (ok ? "all suites passed" : "some suites failed") << '\n';
  return ok ? 0 : 1;
}

}  // namespace kmd::selftest
