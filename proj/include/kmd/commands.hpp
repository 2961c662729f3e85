#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kmd/sequences.hpp"
#include "kmd/table.hpp"

namespace kmd::cli {

enum ExitCode : int { kOk = 0, kSelftestFailure = 1, kUsage = 2, kInconclusive = 3 };

/// Thrown for malformed flags or arguments; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FamilyConfig {
  std::string family;
  unsigned base = 3;
  /// "0,2"; may be omitted for base 3, where it defaults to the Cantor digits.
  std::optional<std::string> digits;
  std::optional<std::string> poly;
  std::optional<std::string> p0;
};

struct RunConfig {
  FamilyConfig family;
  std::optional<std::uint64_t> from;
  std::optional<std::uint64_t> to;
  std::size_t cap = kDefaultDigitCap;
  Format format = Format::Text;
  unsigned workers = 0;
};

MissingDigitSet parse_digit_set(unsigned base, const std::optional<std::string>& digits);
Natural parse_natural(const std::string& text, const char* what);
FamilySpec build_family(const FamilyConfig& config);

int run_expand(const std::string& u, const std::string& v, unsigned base,
               const std::optional<std::string>& digits, std::size_t cap, std::size_t max_display,
               std::ostream& out, std::ostream& err);
int run_member(const std::string& u, const std::string& v, unsigned base,
               const std::optional<std::string>& digits, std::size_t cap, std::ostream& out,
               std::ostream& err);
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_table(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_cutoff(const RunConfig& config, std::ostream& out, std::ostream& err);

/// "{1, 5}"
std::string format_index_set(const std::vector<std::uint64_t>& values);

}  // namespace kmd::cli
