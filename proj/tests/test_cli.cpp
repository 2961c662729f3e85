#include <sstream>

#include "doctest.h"
#include "kmd/commands.hpp"

namespace cli = kmd::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run expand(const std::string& u, const std::string& v, unsigned base = 3,
           std::optional<std::string> digits = std::nullopt) {
  std::ostringstream out, err;
  const int code = cli::run_expand(u, v, base, digits, kmd::kDefaultDigitCap, 64, out, err);
  return {code, out.str(), err.str()};
}

cli::RunConfig config(const std::string& family) {
  cli::RunConfig c;
  c.family.family = family;
  c.family.digits = "0,2";
  c.workers = 2;
  return c;
}

Run verify(const cli::RunConfig& c) {
  std::ostringstream out, err;
  const int code = cli::run_verify(c, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expand prints cycle notation") {
  CHECK(expand("1", "120").out.rfind("0.0(0002)\n", 0) == 0);
  CHECK(expand("1", "2").out.rfind("0.(1)\n", 0) == 0);
  CHECK(expand("1", "10").out.rfind("0.(0022)\n", 0) == 0);
  CHECK(expand("1", "1").out.rfind("0.(2)\n", 0) == 0);
  const auto with_set = expand("1", "720", 3, "0,2");
  CHECK(with_set.out.find("first offending digit at position 6") != std::string::npos);
}

TEST_CASE("expand errors") {
  const auto terminating = expand("1", "9");
  CHECK(terminating.code == cli::kUsage);
  CHECK(terminating.err.find("terminating regime") != std::string::npos);
  CHECK(expand("0", "5").code == cli::kUsage);
  CHECK(expand("7", "5").code == cli::kUsage);
  CHECK(expand("x", "5").code == cli::kUsage);
  CHECK(expand("1", "5", 2).code == cli::kUsage);
  CHECK(expand("1", "5", 3, "0,3").code == cli::kUsage);
}

TEST_CASE("member command") {
  std::ostringstream out, err;
  CHECK(cli::run_member("1", "3", 3, std::nullopt, kmd::kDefaultDigitCap, out, err) == cli::kOk);
  CHECK(out.str().rfind("member\n", 0) == 0);
  std::ostringstream out2, err2;
  const kmd::Natural big = (kmd::Natural(1) << 61) - 1;
  CHECK(cli::run_member("1", big.get_str(), 3, std::nullopt, 20, out2, err2) == cli::kInconclusive);
  std::ostringstream out3, err3;
  CHECK(cli::run_member("1", "4", 10, std::nullopt, 20, out3, err3) == cli::kUsage);
}

TEST_CASE("verify intersections") {
  const auto fact = verify(config("factorial"));
  CHECK(fact.code == cli::kOk);
  CHECK(fact.out.find("intersection {1, 5}\n") != std::string::npos);
  CHECK(fact.out.find("certified cutoff N0 = 10,") != std::string::npos);
  CHECK(verify(config("mk")).out.find("intersection {}\n") != std::string::npos);
  CHECK(verify(config("superfactorial")).out.find("intersection {1, 3}\n") != std::string::npos);
}

TEST_CASE("verify without a certificate needs --to") {
  auto c = config("polynomial");
  c.family.poly = "1,1,1";
  CHECK(verify(c).code == cli::kUsage);
  c.to = 12;
  const auto run = verify(c);
  CHECK(run.code == cli::kOk);
  CHECK(run.out.find("certified cutoff unknown") != std::string::npos);
}

TEST_CASE("verify reports inconclusive rows") {
  auto c = config("fibonacci");
  c.cap = 10;
  c.to = 20;
  CHECK(verify(c).code == cli::kInconclusive);
}

TEST_CASE("flag validation") {
  auto c = config("mk");
  c.family.p0 = "7";
  CHECK(verify(c).code == cli::kUsage);
  auto d = config("factorial");
  d.family.poly = "1,0,1";
  CHECK(verify(d).code == cli::kUsage);
  auto e = config("factorial");
  e.from = 5;
  e.to = 4;
  CHECK(verify(e).code == cli::kUsage);
  auto f = config("factorial");
  f.family.base = 5;
  f.family.digits.reset();
  CHECK(verify(f).code == cli::kUsage);
}

TEST_CASE("cutoff reports") {
  std::ostringstream out, err;
  CHECK(cli::run_cutoff(config("factorial"), out, err) == cli::kOk);
  const auto text = out.str();
  CHECK(text.find("p0 = 2\nt = 2\nc = 4\n") != std::string::npos);
  CHECK(text.find("certified N0 = 10\n") != std::string::npos);
  CHECK(text.find("tail [10, 210] holds") != std::string::npos);
  std::ostringstream out2, err2;
  cli::run_cutoff(config("mk"), out2, err2);
  CHECK(out2.str().find("p0 = 5\nt = 1\nc = 4\nbound structural\ncertified N0 = 12\n") != std::string::npos);
  std::ostringstream out3, err3;
  cli::run_cutoff(config("superfactorial"), out3, err3);
  CHECK(out3.str().find("certified N0 = 5\n") != std::string::npos);
}

TEST_CASE("table output is independent of worker count") {
  auto c = config("fibonacci");
  c.format = kmd::Format::Csv;
  std::ostringstream one, err;
  c.workers = 1;
  CHECK(cli::run_table(c, one, err) == cli::kOk);
  std::ostringstream four;
  c.workers = 4;
  CHECK(cli::run_table(c, four, err) == cli::kOk);
  CHECK(one.str() == four.str());
  CHECK(one.str().find("105,0,2361,") != std::string::npos);
}
