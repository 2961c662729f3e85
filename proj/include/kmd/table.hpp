#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kmd/criterion.hpp"
#include "kmd/expansion.hpp"
#include "kmd/sequences.hpp"

namespace kmd {

/// One n of a family scan: the membership of 1/a_n and the cutoff data at n.
struct TableRow {
  std::uint64_t n = 0;
  Membership membership;
  std::int64_t alpha = 0;
  Rational bound_rhs;  // p0^{alpha - t} must exceed this

  bool member() const { return membership.is_member(); }
  std::optional<std::size_t> first_offending() const { return membership.report.first_offending; }
  std::optional<std::size_t> period_length() const;
};

/// Digits shown past the first offending digit.
inline constexpr std::size_t kLookahead = 2;
/// Non-member prefixes longer than this many digits before the marked one are elided.
inline constexpr std::size_t kFullPrefixLimit = 16;

TableRow compute_row(const FamilySpec& family, std::uint64_t n, const Natural& a_n,
                     std::size_t cap = kDefaultDigitCap);

/// Reference kernel: rows n_from..n_to in order on the calling thread.
std::vector<TableRow> compute_rows_serial(const FamilySpec& family, std::uint64_t n_from,
                                          std::uint64_t n_to, std::size_t cap = kDefaultDigitCap);
/// OpenMP kernel over n; `workers` = 0 uses the runtime default. Same output as the serial one.
std::vector<TableRow> compute_rows_parallel(const FamilySpec& family, std::uint64_t n_from,
                                            std::uint64_t n_to, std::size_t cap = kDefaultDigitCap,
                                            unsigned workers = 0);

enum class MarkStyle { Brackets, Bold };

/// "0.pre(cycle)" for members, "0.00[1]21..." or "0.00...00[1]21..." for non-members.
std::string render_prefix(const Membership& membership, unsigned base,
                          MarkStyle style = MarkStyle::Brackets);
std::string render_digit(Digit d);

enum class Format { Text, Csv, Markdown };
Format parse_format(const std::string& text);

std::string render_text(const std::vector<TableRow>& rows, unsigned base);
/// Header n,member,first_offending,period_length,alpha,bound_rhs_num,bound_rhs_den.
std::string render_csv(const std::vector<TableRow>& rows);
std::string render_markdown(const std::vector<TableRow>& rows, unsigned base);
/// Tab-separated n, prefix, first offending position ("-" for members).
std::string render_golden(const std::vector<TableRow>& rows, unsigned base);
std::string render(const std::vector<TableRow>& rows, unsigned base, Format format);

}  // namespace kmd
