#include <exception>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "kmd/table.hpp"

namespace kmd {

std::optional<std::size_t> TableRow::period_length() const {
  if (!membership.report.closed()) return std::nullopt;
  return membership.report.period();
}

TableRow compute_row(const FamilySpec& family, std::uint64_t n, const Natural& a_n, std::size_t cap) {
  TableRow row;
  row.n = n;
  row.membership = member(ReducedRational::make(1, a_n), family.digit_set(), cap, kLookahead);
  row.alpha = family.bounds.alpha(n);
  row.bound_rhs = cutoff_rhs(family.bounds, family.params, n);
  return row;
}

std::vector<TableRow> compute_rows_serial(const FamilySpec& family, std::uint64_t n_from,
                                          std::uint64_t n_to, std::size_t cap) {
  if (n_from < 1 || n_from > n_to) throw std::invalid_argument("row range must satisfy 1 <= from <= to");
  const auto values = prefix_values(family, n_to);
  std::vector<TableRow> rows;
  rows.reserve(n_to - n_from + 1);
  for (std::uint64_t n = n_from; n <= n_to; ++n) rows.push_back(compute_row(family, n, values[n - 1], cap));
  return rows;
}

std::vector<TableRow> compute_rows_parallel(const FamilySpec& family, std::uint64_t n_from,
                                            std::uint64_t n_to, std::size_t cap, unsigned workers) {
  if (n_from < 1 || n_from > n_to) throw std::invalid_argument("row range must satisfy 1 <= from <= to");
  const auto values = prefix_values(family, n_to);
  const auto count = static_cast<std::int64_t>(n_to - n_from + 1);
  std::vector<TableRow> rows(static_cast<std::size_t>(count));
  std::exception_ptr failure;
  const int threads = workers == 0 ? omp_get_max_threads() : static_cast<int>(workers);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      const std::uint64_t n = n_from + static_cast<std::uint64_t>(i);
      rows[static_cast<std::size_t>(i)] = compute_row(family, n, values[n - 1], cap);
    } catch (...) {
#pragma omp critical(kmd_rows_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string render_digit(Digit d) {
  if (d < 10) return std::string(1, static_cast<char>('0' + d));
  if (d < 36) return std::string(1, static_cast<char>('a' + d - 10));
  return "<" + std::to_string(d) + ">";
}

namespace {

std::string digit_run(const std::vector<Digit>& digits, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to && i < digits.size(); ++i) out += render_digit(digits[i]);
  return out;
}

std::string mark(Digit d, MarkStyle style) {
  return style == MarkStyle::Bold ? "**" + render_digit(d) + "**" : "[" + render_digit(d) + "]";
}

}  // namespace

std::string render_prefix(const Membership& membership, unsigned base, MarkStyle style) {
  const auto& report = membership.report;
  const auto& d = report.digits;
  const Digit top = base - 1;

  if (membership.verdict == Verdict::Inconclusive) {
    return "0." + digit_run(d, 0, kFullPrefixLimit) + "...";
  }
  if (membership.verdict == Verdict::Member) {
    if (membership.regime == Regime::Unit) return "0.(" + render_digit(top) + ")";
    if (membership.regime == Regime::Terminating && membership.via_alternate_expansion) {
      std::vector<Digit> finite(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(report.cycle_start));
      finite.back() -= 1;
      return "0." + digit_run(finite, 0, finite.size()) + "(" + render_digit(top) + ")";
    }
    return "0." + digit_run(d, 0, report.cycle_start) + "(" +
           digit_run(d, report.cycle_start, report.cycle_end) + ")";
  }

  const std::size_t f = *report.first_offending;  // 1-based
  const std::size_t before = f - 1;
  std::string out = "0.";
  if (before <= kFullPrefixLimit) {
    out += digit_run(d, 0, before);
  } else {
    out += digit_run(d, 0, 2) + "..." + digit_run(d, before - 2, before);
  }
  out += mark(d[before], style);
  out += digit_run(d, f, f + kLookahead) + "...";
  return out;
}

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "csv") return Format::Csv;
  if (text == "markdown" || text == "md") return Format::Markdown;
  throw std::invalid_argument("unknown format '" + text + "' (text, csv, markdown)");
}

std::string render_text(const std::vector<TableRow>& rows, unsigned base) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "n" << std::setw(14) << "verdict" << std::setw(10) << "first"
      << "prefix\n";
  for (const auto& row : rows) {
    const auto f = row.first_offending();
    out << std::setw(6) << row.n << std::setw(14) << to_string(row.membership.verdict) << std::setw(10)
        << (f ? std::to_string(*f) : std::string("-")) << render_prefix(row.membership, base) << '\n';
  }
  return out.str();
}

std::string render_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "n,member,first_offending,period_length,alpha,bound_rhs_num,bound_rhs_den\n";
  for (const auto& row : rows) {
    const auto verdict = row.membership.verdict;
    const auto f = row.first_offending();
    const auto period = row.period_length();
    out << row.n << ','
        << (verdict == Verdict::Member ? "1" : verdict == Verdict::NonMember ? "0" : "inconclusive") << ','
        << (f ? std::to_string(*f) : "") << ',' << (period ? std::to_string(*period) : "") << ','
        << row.alpha << ',' << row.bound_rhs.get_num().get_str() << ','
        << row.bound_rhs.get_den().get_str() << '\n';
  }
  return out.str();
}

std::string render_markdown(const std::vector<TableRow>& rows, unsigned base) {
  std::ostringstream out;
  out << "| n | expansion prefix | first offending |\n|---:|:---|---:|\n";
  for (const auto& row : rows) {
    const auto f = row.first_offending();
    out << "| " << row.n << " | " << render_prefix(row.membership, base, MarkStyle::Bold) << " | "
        << (f ? std::to_string(*f) : std::string("-")) << " |\n";
  }
  return out.str();
}

std::string render_golden(const std::vector<TableRow>& rows, unsigned base) {
  std::ostringstream out;
  out << "n\tprefix\tfirst_offending\n";
  for (const auto& row : rows) {
    const auto f = row.first_offending();
    out << row.n << '\t' << render_prefix(row.membership, base) << '\t'
        << (f ? std::to_string(*f) : std::string("-")) << '\n';
  }
  return out.str();
}

std::string render(const std::vector<TableRow>& rows, unsigned base, Format format) {
  switch (format) {
    case Format::Text: return render_text(rows, base);
    case Format::Csv: return render_csv(rows);
    case Format::Markdown: return render_markdown(rows, base);
  }
  return {};
}

}  // namespace kmd
