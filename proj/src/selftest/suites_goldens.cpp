#include <fstream>
#include <sstream>

#include "kmd/sequences.hpp"
#include "kmd/sweeps.hpp"
#include "kmd/table.hpp"
#include "suites.hpp"

namespace kmd::selftest {

namespace {

std::vector<FamilySpec> table_families() {
  const auto cantor = MissingDigitSet::cantor();
  return {factorial_family(cantor), superfactorial_family(cantor),
          polynomial_family(PolynomialSpec({1, 0, 1}), cantor), fibonacci_family(cantor),
          mk_minus_one_family(cantor)};
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Bumps the last character of the first non-member row, a digit of its first offending position.
void flip_digit(std::string& text) {
  auto pos = text.find('\n');
  while (pos != std::string::npos) {
    const auto end = text.find('\n', pos + 1);
    if (end == std::string::npos) break;
    if (text[end - 1] != '-') {
      char& c = text[end - 1];
      c = c == '9' ? '8' : static_cast<char>(c + 1);
      return;
    }
    pos = end;
  }
}

}  // namespace

void suite_goldens(Recorder& rec, const Options& options) {
  for (const auto& family : table_families()) {
    const std::string path = std::string(KMD_GOLDEN_DIR) + "/" + family.name + ".txt";
    std::ifstream in(path, std::ios::binary);
    if (!rec.check(in.good(), "cannot open ", path)) continue;
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string expected = buffer.str();
    if (options.inject_fault == "golden") flip_digit(expected);

    const auto rows = compute_rows_serial(family, 1, *family.certified_cutoff - 1);
    const std::string actual = render_golden(rows, family.base());

    // Row by row first, so a mismatch names the row.
    const auto want = split_lines(expected);
    const auto got = split_lines(actual);
    rec.check(want.size() == got.size(), family.name, " table has ", got.size(), " lines, golden has ", want.size());
    for (std::size_t i = 0; i < want.size() && i < got.size(); ++i) {
      rec.check(want[i] == got[i], family.name, " line ", i + 1, ": expected '", want[i], "', got '", got[i], "'");
    }
    rec.check(expected == actual, family.name, " table is byte-identical to ", path);
  }
}

void suite_parallel(Recorder& rec, const Options& options) {
  std::vector<unsigned> worker_counts{1, 2, 4};
  if (options.workers > 0) worker_counts.push_back(options.workers);
  for (const auto& family : table_families()) {
    const auto last = *family.certified_cutoff - 1;
    const auto serial = compute_rows_serial(family, 1, last);
    const auto reference = render_golden(serial, 3) + render_csv(serial);
    for (unsigned workers : worker_counts) {
      const auto parallel = compute_rows_parallel(family, 1, last, kDefaultDigitCap, workers);
      rec.check(render_golden(parallel, 3) + render_csv(parallel) == reference, family.name,
                " rows with ", workers, " workers match the serial kernel");
    }
  }
  const auto set = MissingDigitSet::cantor();
  const auto korobov = korobov_sweep_serial(set, 3000);
  const auto reduction = reduction_sweep_serial(set, 5000);
  for (unsigned workers : worker_counts) {
    rec.check(korobov_sweep_parallel(set, 3000, workers) == korobov, "Korobov sweep with ", workers, " workers");
    rec.check(reduction_sweep_parallel(set, 5000, workers) == reduction, "reduction sweep with ", workers,
              " workers");
  }
}

}  // namespace kmd::selftest
