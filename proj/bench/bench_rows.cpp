// Serial vs OpenMP timings for the row and sweep kernels.
// usage: bench_rows [workers] [repeats]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>

#include <omp.h>

#include "kmd/sequences.hpp"
#include "kmd/sweeps.hpp"
#include "kmd/table.hpp"

namespace {

double best_of(int repeats, const std::function<void()>& body) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    best = std::min(best, elapsed.count());
  }
  return best;
}

void report(const char* name, double serial, double parallel) {
  std::cout << std::left << std::setw(28) << name << std::right << std::fixed << std::setprecision(4)
            << std::setw(10) << serial << " s" << std::setw(10) << parallel << " s" << std::setprecision(2)
            << std::setw(8) << serial / parallel << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  const unsigned workers = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 0;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  std::cout << "workers " << (workers == 0 ? omp_get_max_threads() : static_cast<int>(workers)) << ", best of "
            << repeats << "\n";
  std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(12) << "serial" << std::setw(12)
            << "parallel" << std::setw(9) << "speedup\n";

  const auto cantor = kmd::MissingDigitSet::cantor();
  const auto fib = kmd::fibonacci_family(cantor);
  const auto poly = kmd::polynomial_family(kmd::PolynomialSpec({1, 0, 1}), cantor);

  report("fibonacci rows 1..105",
         best_of(repeats, [&] { kmd::compute_rows_serial(fib, 1, 105); }),
         best_of(repeats, [&] { kmd::compute_rows_parallel(fib, 1, 105, kmd::kDefaultDigitCap, workers); }));
  report("x^2+1 rows 1..29",
         best_of(repeats, [&] { kmd::compute_rows_serial(poly, 1, 29); }),
         best_of(repeats, [&] { kmd::compute_rows_parallel(poly, 1, 29, kmd::kDefaultDigitCap, workers); }));
  report("korobov sweep q <= 3000",
         best_of(repeats, [&] { kmd::korobov_sweep_serial(cantor, 3000); }),
         best_of(repeats, [&] { kmd::korobov_sweep_parallel(cantor, 3000, workers); }));
  report("reduction sweep A <= 5000",
         best_of(repeats, [&] { kmd::reduction_sweep_serial(cantor, 5000); }),
         best_of(repeats, [&] { kmd::reduction_sweep_parallel(cantor, 5000, workers); }));
  return 0;
}
