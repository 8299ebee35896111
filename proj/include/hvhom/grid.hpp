#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "hvhom/report.hpp"

namespace hvhom {

struct GridOptions {
  std::size_t max_counterexamples = 5;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
};

/// Evaluates `eval(point)` on every point, possibly on several threads,
/// and records the outcome in `report`.
///
/// `points` must be enumerated in ascending Point order; failures are
/// merged back in that order, so the report does not depend on the thread
/// count. `eval` returns a counterexample for a failing point.
template <class P, class Eval>
void run_grid(CheckReport& report, const std::vector<P>& points, Eval&& eval,
              const GridOptions& options) {
  unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                          : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, points.size())));

  struct Failure {
    std::size_t position;
    Counterexample cex;
  };
  std::vector<std::vector<Failure>> found(threads);
  std::vector<std::exception_ptr> errors(threads);

  const auto work = [&](unsigned slot) {
    try {
      for (std::size_t i = slot; i < points.size(); i += threads) {
        if (std::optional<Counterexample> c = eval(points[i])) found[slot].push_back({i, std::move(*c)});
      }
    } catch (...) {
      errors[slot] = std::current_exception();
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned s = 0; s < threads; ++s) pool.emplace_back(work, s);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<Failure> merged;
  for (auto& part : found) {
    for (auto& f : part) merged.push_back(std::move(f));
  }
  std::sort(merged.begin(), merged.end(),
            [](const Failure& x, const Failure& y) { return x.position < y.position; });

  report.checked += points.size();
  report.failures += merged.size();
  const std::size_t limit = std::max<std::size_t>(1, options.max_counterexamples);
  for (auto& f : merged) {
    if (report.counterexamples.size() >= limit) break;
    report.counterexamples.push_back(std::move(f.cex));
  }
}

}  // namespace hvhom
