#include <charconv>
#include <functional>
#include <ostream>

#include "kmd/commands.hpp"

namespace kmd::cli {

namespace {

constexpr std::uint64_t kTailWindow = 200;
constexpr std::uint64_t kUncertifiedScanEnd = 500;

// Runs `body`, mapping bad input to exit code 2.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

std::string set_label(const MissingDigitSet& set) {
  return "K_{" + std::to_string(set.base()) + "," + set.digits_string() + "}";
}

std::string describe_expansion(const ExpansionReport& report, std::size_t max_display) {
  const auto& d = report.digits;
  std::string out = "0.";
  if (report.closed() && report.cycle_end <= max_display) {
    for (std::size_t i = 0; i < report.cycle_start; ++i) out += render_digit(d[i]);
    out += '(';
    for (std::size_t i = report.cycle_start; i < report.cycle_end; ++i) out += render_digit(d[i]);
    return out + ')';
  }
  for (std::size_t i = 0; i < max_display && i < d.size(); ++i) out += render_digit(d[i]);
  return out + "...";
}

std::string describe_family(const FamilySpec& family) {
  return family.name + " (" + family.formula + ")";
}

void print_params(const FamilySpec& family, std::ostream& out) {
  out << "p0 = " << family.params.p0 << ", t = " << family.params.t << ", c = " << family.params.c.get_str()
      << " (" << to_string(family.bounds.kind) << " form)\n";
}

struct Range {
  std::uint64_t from;
  std::uint64_t to;
};

// Defaults to [1, N0); without a certified cutoff --to is required.
Range row_range(const RunConfig& config, const FamilySpec& family) {
  const std::uint64_t from = config.from.value_or(1);
  std::uint64_t to = 0;
  if (config.to) {
    to = *config.to;
  } else if (family.certified_cutoff) {
    to = *family.certified_cutoff - 1;
  } else {
    throw UsageError("no certified cutoff is known for this configuration; pass --to");
  }
  if (from < 1 || from > to) throw UsageError("n range must satisfy 1 <= from <= to");
  return {from, to};
}

}  // namespace

MissingDigitSet parse_digit_set(unsigned base, const std::optional<std::string>& digits) {
  if (!digits) {
    if (base == 3) return MissingDigitSet::cantor();
    throw UsageError("--digits is required when the base is not 3");
  }
  std::vector<unsigned> parsed;
  std::string_view rest = *digits;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view token = rest.substr(0, comma);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw UsageError("bad digit '" + std::string(token) + "' in --digits");
    }
    parsed.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return MissingDigitSet(base, std::move(parsed));
}

Natural parse_natural(const std::string& text, const char* what) {
  Natural out;
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos ||
      out.set_str(text, 10) != 0) {
    throw UsageError(std::string(what) + " must be a non-negative integer, got '" + text + "'");
  }
  return out;
}

FamilySpec build_family(const FamilyConfig& config) {
  const auto set = parse_digit_set(config.base, config.digits);
  std::optional<PolynomialSpec> poly;
  if (config.poly) poly = PolynomialSpec::parse(*config.poly);
  if (config.poly && config.family != "polynomial") throw UsageError("--poly only applies to the polynomial family");
  std::optional<Natural> p0;
  if (config.p0) {
    if (config.family != "factorial" && config.family != "superfactorial") {
      throw UsageError("--p0 only applies to the factorial and superfactorial families");
    }
    p0 = parse_natural(*config.p0, "--p0");
  }
  if (config.family == "polynomial" && !poly) poly = PolynomialSpec({1, 0, 1});
  return make_family(config.family, set, poly, p0);
}

std::string format_index_set(const std::vector<std::uint64_t>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

int run_expand(const std::string& u, const std::string& v, unsigned base,
               const std::optional<std::string>& digits, std::size_t cap, std::size_t max_display,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto x = ReducedRational::make(parse_natural(u, "u"), parse_natural(v, "v"));
    std::optional<MissingDigitSet> set;
    if (digits) set = parse_digit_set(base, digits);
    if (base < 3) throw UsageError("base must be at least 3");
    if (x.is_one()) {
      out << "0.(" << render_digit(base - 1) << ")\n";
      out << "pre-period 0, period 1\n";
      if (set) out << "member of " << set_label(*set) << ": " << (set->allows(base - 1) ? "yes" : "no") << '\n';
      return int{kOk};
    }
    if (terminates_in_base(x.denominator, base)) {
      err << "terminating regime: " << x.numerator << "/" << x.denominator
          << " has a finite base-" << base << " expansion; use `member` for the two-expansion rule\n";
      return int{kUsage};
    }
    const auto report = set ? expand(x, *set, cap) : expand(x, base, cap);
    out << describe_expansion(report, max_display) << '\n';
    if (report.closed()) {
      out << "pre-period " << report.cycle_start << ", period " << report.period() << '\n';
    } else {
      out << "no repeat within " << cap << " digits\n";
    }
    if (set) {
      out << "member of " << set_label(*set) << ": ";
      if (report.first_offending) {
        out << "no, first offending digit at position " << *report.first_offending << '\n';
      } else {
        out << (report.member ? "yes" : "undecided") << '\n';
      }
    }
    return int{report.closed() ? kOk : kInconclusive};
  });
}

int run_member(const std::string& u, const std::string& v, unsigned base,
               const std::optional<std::string>& digits, std::size_t cap, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const auto x = ReducedRational::make(parse_natural(u, "u"), parse_natural(v, "v"));
    const auto set = parse_digit_set(base, digits);
    const auto result = member(x, set, cap, kLookahead);
    out << to_string(result.verdict) << '\n';
    out << "regime " << to_string(result.regime) << '\n';
    if (result.report.first_offending) out << "first offending position " << *result.report.first_offending << '\n';
    if (result.via_alternate_expansion) out << "witness: the expansion ending in repeated " << base - 1 << "s\n";
    out << "prefix " << render_prefix(result, base) << '\n';
    return int{result.conclusive() ? kOk : kInconclusive};
  });
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto family = build_family(config.family);
    const auto range = row_range(config, family);
    const auto rows = compute_rows_parallel(family, range.from, range.to, config.cap, config.workers);

    std::vector<std::uint64_t> members;
    bool conclusive = true;
    for (const auto& row : rows) {
      if (row.member()) members.push_back(row.n);
      conclusive &= row.membership.conclusive();
    }

    out << "family " << describe_family(family) << '\n';
    out << "set " << set_label(family.digit_set()) << '\n';
    print_params(family, out);
    if (family.certified_cutoff) {
      const auto n0 = *family.certified_cutoff;
      const auto tail = verify_tail(family.bounds, family.params, n0, n0 + kTailWindow);
      out << "certified cutoff N0 = " << n0 << ", tail [" << n0 << ", " << n0 + kTailWindow << "] "
          << (tail.holds ? "holds" : "fails at n = " + std::to_string(*tail.first_failure)) << '\n';
    } else {
      out << "certified cutoff unknown\n";
    }
    out << "range " << range.from << ".." << range.to << '\n';
    out << render_text(rows, family.base());
    out << "intersection " << format_index_set(members) << '\n';
    if (!conclusive) {
      out << "inconclusive: some rows exhausted the digit cap\n";
      return int{kInconclusive};
    }
    return int{kOk};
  });
}

int run_table(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto family = build_family(config.family);
    const auto range = row_range(config, family);
    const auto rows = compute_rows_parallel(family, range.from, range.to, config.cap, config.workers);
    out << render(rows, family.base(), config.format);
    for (const auto& row : rows) {
      if (!row.membership.conclusive()) return int{kInconclusive};
    }
    return int{kOk};
  });
}

int run_cutoff(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto family = build_family(config.family);
    out << "family " << describe_family(family) << '\n';
    out << "set " << set_label(family.digit_set()) << '\n';
    out << "p0 = " << family.params.p0 << '\n';
    out << "t = " << family.params.t << '\n';
    out << "c = " << family.params.c.get_str() << '\n';
    out << "bound " << to_string(family.bounds.kind) << '\n';
    if (family.certified_cutoff) {
      const auto n0 = *family.certified_cutoff;
      const auto from = config.from.value_or(n0);
      const auto to = config.to.value_or(from + kTailWindow);
      if (from > to) throw UsageError("empty tail window");
      const auto tail = verify_tail(family.bounds, family.params, from, to);
      out << "certified N0 = " << n0 << '\n';
      out << "tail [" << from << ", " << to << "] "
          << (tail.holds ? "holds" : "fails at n = " + std::to_string(*tail.first_failure)) << '\n';
      return int{kOk};
    }
    // No certificate: report where the inequality starts holding through the scan window.
    const auto from = config.from.value_or(1);
    const auto to = config.to.value_or(kUncertifiedScanEnd);
    if (from > to || from < 1) throw UsageError("scan window must satisfy 1 <= from <= to");
    std::optional<std::uint64_t> start;
    for (std::uint64_t n = to + 1; n-- > from;) {
      if (!cutoff_holds_at(family.bounds, family.params, n)) break;
      start = n;
    }
    out << "certified N0 = unknown\n";
    if (start) {
      out << "inequality holds on [" << *start << ", " << to << "] (observed, not certified)\n";
    } else {
      out << "inequality fails at n = " << to << '\n';
    }
    return int{kOk};
  });
}

}  // namespace kmd::cli
