// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#include "eepc/channel.hpp"

#include <cmath>
#include <numbers>

namespace eepc {

// Legendre nodes by Newton iteration from the Chebyshev-like initial guess;
// machine precision in a handful of steps. Mapped from (-1, 1) to (0, 1).
std::vector<std::pair<double, double>> gauss_legendre_unit(int nodes) {
  if (nodes < 1) throw precondition_error("gauss_legendre_unit: requires nodes >= 1");
  const int n = nodes;
  std::vector<std::pair<double, double>> table(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      // Recurrence for P_n(t) and P'_n(t).
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double step = p1 / dp;
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - t * t) * dp * dp);
    // t is in descending order over i; fill symmetric pair, mapped to (0,1).
    table[static_cast<std::size_t>(i)] = {0.5 * (1.0 - t), 0.5 * w};
    table[static_cast<std::size_t>(n - 1 - i)] = {0.5 * (1.0 + t), 0.5 * w};
  }
  return table;
}

}  // namespace eepc
