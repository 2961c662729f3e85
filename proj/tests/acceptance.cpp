// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "kmd/commands.hpp"
#include "kmd/selftest.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && seconds >= limit_seconds) {
    out.ok = false;
    out.note += (out.note.empty() ? "" : "; ") + std::string("over the time limit");
  }
  if (!out.ok) ++failures;
  std::cout << "AC" << std::setw(2) << std::left << id << ' ' << (out.ok ? "PASS" : "FAIL") << "  " << title
            << "  [" << std::fixed << std::setprecision(2) << seconds << " s";
  if (limit_seconds > 0) std::cout << " / limit " << limit_seconds << " s";
  std::cout << "]";
  if (!out.note.empty()) std::cout << "  " << out.note;
  std::cout << std::endl;
}

kmd::cli::RunConfig family_config(const std::string& name) {
  kmd::cli::RunConfig config;
  config.family.family = name;
  config.family.base = 3;
  config.family.digits = "0,2";
  config.workers = 1;
  return config;
}

Outcome verify_outcome(const std::string& name, const std::string& members, std::uint64_t cutoff) {
  std::ostringstream out, err;
  const int code = kmd::cli::run_verify(family_config(name), out, err);
  const std::string text = out.str();
  Outcome o;
  o.ok = code == 0 && text.find("intersection " + members + "\n") != std::string::npos &&
         text.find("certified cutoff N0 = " + std::to_string(cutoff) + ",") != std::string::npos &&
         text.find("holds") != std::string::npos;
  o.note = "members " + members + ", N0 = " + std::to_string(cutoff);
  if (!o.ok) o.note += "; got:\n" + text + err.str();
  return o;
}

Outcome suites_outcome(const std::vector<std::string>& names) {
  kmd::selftest::Options options;
  options.suites = names;
  Outcome o;
  std::uint64_t checks = 0;
  for (const auto& r : kmd::selftest::run_suites(options)) {
    checks += r.checks;
    if (!r.passed()) {
      o.ok = false;
      o.note += r.name + ": " + std::to_string(r.failures) + " failed";
      for (const auto& m : r.messages) o.note += "\n    " + m;
    }
  }
  if (o.ok) o.note = std::to_string(checks) + " checks, 0 violations";
  return o;
}

}  // namespace

int main() {
  criterion(1, "factorial intersection {1, 5}, cutoff 10", 1.0,
            [] { return verify_outcome("factorial", "{1, 5}", 10); });
  criterion(2, "superfactorial intersection {1, 3}, cutoff 5", 1.0,
            [] { return verify_outcome("superfactorial", "{1, 3}", 5); });
  criterion(3, "x^2+1 intersection {2}, cutoff 30, 2^13 > 4*1799", 5.0, [] {
    auto o = verify_outcome("polynomial", "{2}", 30);
    const auto family = kmd::cli::build_family(family_config("polynomial").family);
    const bool boundary = family.bounds.alpha(30) - static_cast<std::int64_t>(family.params.t) == 13 &&
                          kmd::cutoff_rhs(family.bounds, family.params, 30) == 4 * 1799 &&
                          kmd::cutoff_holds_at(family.bounds, family.params, 30);
    if (!boundary) o = {false, "boundary check at n = 30 failed"};
    return o;
  });
  criterion(4, "Fibonacci products {1, 2, 5}, cutoff 106, n=105 reaches 2361", 60.0, [] {
    auto o = verify_outcome("fibonacci", "{1, 2, 5}", 106);
    const auto family = kmd::cli::build_family(family_config("fibonacci").family);
    const auto rows = kmd::compute_rows_serial(family, 105, 105);
    if (rows[0].first_offending() != std::size_t{2361}) o = {false, "n = 105 first offending position differs"};
    return o;
  });
  criterion(5, "prod(3^k - 1) intersection empty, cutoff 12, p0=5 t=1 structural", 5.0, [] {
    auto o = verify_outcome("mk", "{}", 12);
    const auto family = kmd::cli::build_family(family_config("mk").family);
    bool shape = family.params.p0 == 5 && family.params.t == 1 && family.bounds.kind == kmd::BoundKind::Structural;
    for (std::uint64_t n = 1; n <= 1000 && shape; ++n) {
      shape = family.bounds.gamma(n) == static_cast<std::int64_t>(kmd::floor_log(kmd::Natural(5), kmd::Natural(n)));
    }
    if (!shape) o = {false, "auxiliary data differs"};
    return o;
  });
  criterion(6, "tables match the five golden files", 0, [] { return suites_outcome({"goldens"}); });
  criterion(7, "order lifting and 2-adic overhead suites", 30.0, [] { return suites_outcome({"lifting", "two_adic"}); });
  criterion(8, "Korobov sweep q <= 3000", 0, [] { return suites_outcome({"korobov"}); });
  criterion(9, "reduction suite A <= 5000", 0, [] { return suites_outcome({"reduction"}); });
  criterion(10, "obstruction soundness on every member found", 0, [] { return suites_outcome({"obstruction"}); });
  criterion(11, "alpha/beta/gamma soundness windows", 300.0, [] { return suites_outcome({"alpha", "beta", "gamma"}); });
  criterion(12, "Fibonacci 2-adic lower bound and ladder", 0, [] { return suites_outcome({"fib2adic"}); });

  std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance failures: " + std::to_string(failures))
            << std::endl;
  return failures == 0 ? 0 : 1;
}
