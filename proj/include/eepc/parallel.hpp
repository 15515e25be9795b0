// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#pragma once

#include <cstddef>
#include <span>
#include <thread>
#include <vector>

namespace eepc {

/// Worker count actually used for a requested value: 0 means "hardware
/// default", capped at 8 so results never depend on exotic machine sizes.
inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(hw == 0 ? 1 : (hw > 8 ? 8 : hw));
}

/// Runs body(i) for i in [0, n) on `workers` threads over contiguous index
/// chunks. Each index must write only its own slots, which makes the result
/// independent of the thread schedule. Loops shorter than min_parallel run
/// inline; pass 1 when each iteration is expensive.
template <typename Body>
void parallel_for(std::size_t n, int workers, Body&& body, std::size_t min_parallel = 2048) {
  const int w = resolve_workers(workers);
  if (w <= 1 || n < min_parallel || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const std::size_t chunk = (n + static_cast<std::size_t>(w) - 1) / static_cast<std::size_t>(w);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(w));
  for (int t = 0; t < w; ++t) {
    const std::size_t begin = static_cast<std::size_t>(t) * chunk;
    if (begin >= n) break;
    const std::size_t end = std::min(n, begin + chunk);
    pool.emplace_back([&body, begin, end]() {
      for (std::size_t i = begin; i < end; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

/// Pairwise summation in a fixed tree order: accurate and bit-reproducible
/// regardless of how the buffer was filled.
inline double pairwise_sum(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n <= 64) {
    double s = 0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace eepc
