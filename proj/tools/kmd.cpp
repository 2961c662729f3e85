// kmd: membership of reciprocals in missing-digit sets.

#include <iostream>

#include "CLI11.hpp"
#include "kmd/commands.hpp"
#include "kmd/selftest.hpp"

namespace {

using kmd::cli::RunConfig;

void add_set_flags(CLI::App* sub, unsigned& base, std::optional<std::string>& digits) {
  sub->add_option("-m,--base,--m", base, "base m >= 3")->capture_default_str();
  sub->add_option("--digits", digits, "allowed digits D, e.g. 0,2 (default 0,2 in base 3)");
}

void add_family_flags(CLI::App* sub, RunConfig& config, std::string& format) {
  sub->add_option("family,--family", config.family.family,
                  "factorial | superfactorial | polynomial | fibonacci | mk")
      ->required();
  add_set_flags(sub, config.family.base, config.family.digits);
  sub->add_option("--poly", config.family.poly, "polynomial coefficients c_d,...,c_0 (default 1,0,1)");
  sub->add_option("--p0", config.family.p0, "auxiliary prime (factorial and superfactorial only)");
  sub->add_option("--from", config.from, "first n");
  sub->add_option("--to", config.to, "last n (default: certified cutoff - 1)");
  sub->add_option("--cap", config.cap, "digit cap per expansion")->capture_default_str();
  sub->add_option("--workers", config.workers, "worker threads (0 = all available)")->capture_default_str();
  sub->add_option("--format", format, "text | csv | markdown")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Membership of reciprocals of integer sequences in missing-digit sets"};
  app.require_subcommand(1);

  // expand / member
  std::string u, v;
  unsigned base = 3;
  std::optional<std::string> digits;
  std::size_t cap = kmd::kDefaultDigitCap;
  std::size_t max_display = 64;
  auto* expand = app.add_subcommand("expand", "base-m expansion of u/v with its cycle");
  auto* member = app.add_subcommand("member", "decide u/v in K_{m,D}");
  for (auto* sub : {expand, member}) {
    sub->add_option("u", u, "numerator")->required();
    sub->add_option("v", v, "denominator")->required();
    add_set_flags(sub, base, digits);
    sub->add_option("--cap", cap, "digit cap")->capture_default_str();
  }
  expand->add_option("--max-display", max_display, "digits printed before eliding")->capture_default_str();

  // verify / table / cutoff
  RunConfig config;
  std::string format = "text";
  auto* verify = app.add_subcommand("verify", "intersection of a family with K_{m,D} below its cutoff");
  auto* table = app.add_subcommand("table", "per-n expansion table");
  auto* cutoff = app.add_subcommand("cutoff", "auxiliary prime, constants and the cutoff tail check");
  for (auto* sub : {verify, table, cutoff}) add_family_flags(sub, config, format);

  // selftest
  kmd::selftest::Options selftest_options;
  auto* selftest = app.add_subcommand("selftest", "run the property suites");
  selftest->add_option("--suite", selftest_options.suites, "run only these suites (repeatable)");
  selftest->add_option("--inject-fault", selftest_options.inject_fault, "negative control: golden");
  selftest->add_option("--workers", selftest_options.workers, "extra worker count for the parallel suite");
  selftest->add_flag("--list", "list suites and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kmd::cli::kUsage;
  }

  if (*expand) return kmd::cli::run_expand(u, v, base, digits, cap, max_display, std::cout, std::cerr);
  if (*member) return kmd::cli::run_member(u, v, base, digits, cap, std::cout, std::cerr);

  if (*verify || *table || *cutoff) {
    try {
      config.format = kmd::parse_format(format);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kmd::cli::kUsage;
    }
    if (*verify) return kmd::cli::run_verify(config, std::cout, std::cerr);
    if (*table) return kmd::cli::run_table(config, std::cout, std::cerr);
    return kmd::cli::run_cutoff(config, std::cout, std::cerr);
  }

  if (selftest->count("--list") > 0) {
    for (const auto& suite : kmd::selftest::all_suites()) std::cout << suite.name << "  " << suite.summary << '\n';
    return 0;
  }
  if (selftest_options.inject_fault && *selftest_options.inject_fault != "golden") {
    std::cerr << "error: unknown fault '" << *selftest_options.inject_fault << "' (golden)\n";
    return kmd::cli::kUsage;
  }
  try {
    return kmd::selftest::run_selftest(selftest_options, std::cout);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kmd::cli::kUsage;
  }
}
