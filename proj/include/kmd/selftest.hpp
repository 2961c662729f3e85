#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace kmd::selftest {

struct Options {
  /// Empty runs every suite.
  std::vector<std::string> suites;
  /// "golden" flips one digit of each loaded golden table.
  std::optional<std::string> inject_fault;
  unsigned workers = 0;
};

class Recorder {
 public:
  /// Counts one check; on failure the message parts are joined and kept.
  template <class... Parts>
  bool check(bool ok, const Parts&... parts) {
    ++checks_;
    if (ok) return true;
    ++failures_;
    if (messages_.size() < kKeptMessages) {
      std::ostringstream out;
      (out << ... << parts);
      messages_.push_back(out.str());
    }
    return false;
  }

  std::uint64_t checks() const { return checks_; }
  std::uint64_t failures() const { return failures_; }
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  static constexpr std::size_t kKeptMessages = 20;
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::vector<std::string> messages_;
};

struct Suite {
  std::string name;
  std::string summary;
  void (*run)(Recorder&, const Options&);
};

const std::vector<Suite>& all_suites();

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> messages;
  double seconds = 0;

  bool passed() const { return failures == 0 && checks > 0; }
};

/// Runs the selected suites in registry order. Throws std::invalid_argument
/// for an unknown suite name.
std::vector<SuiteResult> run_suites(const Options& options, std::ostream* log = nullptr);

/// CLI driver: prints one line per suite and returns 0, or 1 on any failure.
int run_selftest(const Options& options, std::ostream& out);

}  // namespace kmd::selftest
