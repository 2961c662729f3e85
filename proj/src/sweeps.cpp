#include <exception>
#include <numeric>
#include <optional>
#include <stdexcept>

#include <omp.h>

#include "kmd/sweeps.hpp"

namespace kmd {

namespace {

std::optional<KorobovHit> korobov_at(const MissingDigitSet& set, std::uint64_t q) {
  const std::uint64_t m = set.base();
  if (q < 2 || std::gcd(q, m) != 1) return std::nullopt;
  std::vector<char> visited(q, 0);
  std::optional<std::uint64_t> best;
  for (std::uint64_t s = 1; s < q; ++s) {
    if (visited[s] || std::gcd(s, q) != 1) continue;
    bool ok = true;
    std::uint64_t smallest = s;
    std::uint64_t x = s;
    do {
      visited[x] = 1;
      ok &= set.allows(static_cast<Digit>(m * x / q));
      smallest = std::min(smallest, x);
      x = m * x % q;
    } while (x != s);
    if (ok && (!best || smallest < *best)) best = smallest;
  }
  if (!best) return std::nullopt;
  const Natural base = m;
  return KorobovHit{q, *best, order(base, Natural(q)), order(base, radical(Natural(q)))};
}

std::optional<ReductionHit> reduction_at(const MissingDigitSet& set, std::uint64_t a) {
  const Natural m = set.base();
  const Natural coprime = coprime_part(Natural(a), m);
  if (coprime < 2) return std::nullopt;
  const auto direct = member(ReducedRational::make(1, Natural(a)), set);
  if (!direct.conclusive()) throw std::runtime_error("reduction sweep: digit cap exhausted");
  if (!direct.is_member()) return std::nullopt;
  const auto reduced = shift_reduce(Natural(a), set.base());
  const auto second = member(reduced, set);
  if (!second.conclusive()) throw std::runtime_error("reduction sweep: digit cap exhausted");
  return ReductionHit{a, coprime, reduced, second.is_member()};
}

template <class Hit, class At>
std::vector<Hit> sweep_serial(std::uint64_t last, At at) {
  std::vector<Hit> out;
  for (std::uint64_t i = 1; i <= last; ++i) {
    if (auto hit = at(i)) out.push_back(std::move(*hit));
  }
  return out;
}

template <class Hit, class At>
std::vector<Hit> sweep_parallel(std::uint64_t last, unsigned workers, At at) {
  std::vector<std::optional<Hit>> slots(last);
  std::exception_ptr failure;
  const int threads = workers == 0 ? omp_get_max_threads() : static_cast<int>(workers);
  const auto count = static_cast<std::int64_t>(last);

#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      slots[static_cast<std::size_t>(i)] = at(static_cast<std::uint64_t>(i) + 1);
    } catch (...) {
#pragma omp critical(kmd_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<Hit> out;
  for (auto& slot : slots) {
    if (slot) out.push_back(std::move(*slot));
  }
  return out;
}

}  // namespace

std::vector<KorobovHit> korobov_sweep_serial(const MissingDigitSet& set, std::uint64_t q_max) {
  return sweep_serial<KorobovHit>(q_max, [&](std::uint64_t q) { return korobov_at(set, q); });
}

std::vector<KorobovHit> korobov_sweep_parallel(const MissingDigitSet& set, std::uint64_t q_max,
                                               unsigned workers) {
  return sweep_parallel<KorobovHit>(q_max, workers, [&](std::uint64_t q) { return korobov_at(set, q); });
}

std::vector<ReductionHit> reduction_sweep_serial(const MissingDigitSet& set, std::uint64_t a_max) {
  return sweep_serial<ReductionHit>(a_max, [&](std::uint64_t a) { return reduction_at(set, a); });
}

std::vector<ReductionHit> reduction_sweep_parallel(const MissingDigitSet& set, std::uint64_t a_max,
                                                   unsigned workers) {
  return sweep_parallel<ReductionHit>(a_max, workers, [&](std::uint64_t a) { return reduction_at(set, a); });
}

}  // namespace kmd
