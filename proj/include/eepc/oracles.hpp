// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eepc/config.hpp"
#include "eepc/solvers.hpp"
#include "eepc/stackelberg.hpp"

// Brute-force reference implementations used to cross-check the equation
// based production paths: dense scans, sign scans and finite differences.
// Kept free of golden-section and greatest-zero machinery on purpose.

namespace eepc::oracle {

template <typename Fn>
double central_diff(Fn&& fn, double x, double h) {
  return (fn(x + h) - fn(x - h)) / (2.0 * h);
}

namespace detail {

// Left-most grid-local-maximum whose value ties the scan maximum within
// tie_rel relative; twin global maxima (sin(5x) style) then resolve
// deterministically to the left-most peak instead of by floating-point
// luck, while staying within one grid step of a true peak so the zoom
// window brackets it. Zoom passes use a strict argmax (tie_rel = 0).
inline std::size_t leftmost_max_index(const std::vector<double>& vals, double tie_rel) {
  double fmax = vals[0];
  std::size_t imax = 0;
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (vals[i] > fmax) {
      fmax = vals[i];
      imax = i;
    }
  if (tie_rel <= 0) return imax;
  const double tie = tie_rel * (1.0 + std::abs(fmax));
  const std::size_t n = vals.size();
  for (std::size_t i = 0; i < n; ++i) {
    const bool left_ok = (i == 0) || vals[i] >= vals[i - 1];
    const bool right_ok = (i == n - 1) || vals[i] >= vals[i + 1];
    if (left_ok && right_ok && vals[i] >= fmax - tie) return i;
  }
  return imax;
}

}  // namespace detail

/// Dense linear scan with iterative zoom around the best cell. Left-most
/// maximizer on (near-)ties.
template <typename Fn>
MaximizeResult dense_max(Fn&& fn, double lo, double hi, std::size_t points, int rounds = 2) {
  MaximizeResult best{lo, fn(lo)};
  std::vector<double> vals;
  for (int round = 0; round <= rounds; ++round) {
    const double step = (hi - lo) / static_cast<double>(points);
    vals.assign(points + 1, 0.0);
    for (std::size_t i = 0; i <= points; ++i)
      vals[i] = fn(lo + step * static_cast<double>(i));
    const std::size_t ibest = detail::leftmost_max_index(vals, round == 0 ? 1e-9 : 0.0);
    const double xbest = lo + step * static_cast<double>(ibest);
    if (vals[ibest] > best.value || round == 0) best = {xbest, vals[ibest]};
    lo = std::max(lo, xbest - step);
    hi = std::min(hi, xbest + step);
    points = std::max<std::size_t>(points / 100, 1000);
  }
  return best;
}

/// Dense log-spaced scan with zoom; for objectives whose maximizer location
/// is only known to within decades.
template <typename Fn>
MaximizeResult dense_max_log(Fn&& fn, double lo, double hi, std::size_t points, int rounds = 2) {
  MaximizeResult best{lo, fn(lo)};
  std::vector<double> vals;
  for (int round = 0; round <= rounds; ++round) {
    const double ratio = std::pow(hi / lo, 1.0 / static_cast<double>(points));
    vals.assign(points + 1, 0.0);
    double x = lo;
    for (std::size_t i = 0; i <= points; ++i) {
      vals[i] = fn(x);
      x *= ratio;
    }
    const std::size_t ibest = detail::leftmost_max_index(vals, round == 0 ? 1e-9 : 0.0);
    const double xbest = lo * std::pow(ratio, static_cast<double>(ibest));
    if (vals[ibest] > best.value || round == 0) best = {xbest, vals[ibest]};
    lo = xbest / ratio;
    hi = xbest * ratio;
    points = std::max<std::size_t>(points / 100, 1000);
  }
  return best;
}

/// All sign-change zeros of fn on a log grid over [lo, hi], each refined by
/// plain interval halving.
template <typename Fn>
std::vector<double> zeros_log_scan(Fn&& fn, double lo, double hi, std::size_t points) {
  std::vector<double> zeros;
  const double ratio = std::pow(hi / lo, 1.0 / static_cast<double>(points));
  double xa = lo;
  double fa = fn(xa);
  for (std::size_t i = 1; i <= points; ++i) {
    const double xb = lo * std::pow(ratio, static_cast<double>(i));
    const double fb = fn(xb);
    if (fa == 0.0) zeros.push_back(xa);
    if ((fa > 0) != (fb > 0) && fa != 0.0) {
      double l = xa, r = xb, fl = fa;
      for (int it = 0; it < 200 && (r - l) > 1e-12 * r; ++it) {
        const double m = 0.5 * (l + r);
        const double fm = fn(m);
        if (fm == 0.0) {
          l = r = m;
          break;
        }
        if ((fm > 0) == (fl > 0)) {
          l = m;
          fl = fm;
        } else {
          r = m;
        }
      }
      zeros.push_back(0.5 * (l + r));
    }
    xa = xb;
    fa = fb;
  }
  return zeros;
}

/// Brute-force optimal policy through effective noise sigma2_eff: scans the
/// priced objective over the SNR target directly.
PolicySolution policy_scan(const EfficiencyModel& model, double rate, double slot_T,
                           double lambda, double sigma2_eff, double gain, double x_hi,
                           std::size_t points);

/// Brute-force leader power: log scan of the priced leader objective with
/// the follower best-responding at every candidate.
double leader_power_scan(const EfficiencyModel& model1, const EfficiencyModel& model2,
                         const LinkParams& params1, const LinkParams& params2,
                         const GainRealization& real, std::size_t points);

struct CheckReport {
  std::string name;
  std::size_t checks = 0;
  double max_rel_dev = 0;
  double tol = 0;
  bool pass = false;
};

/// Individual cross-checks, exposed for the acceptance suite (which pins its
/// own pair counts and scan densities).
CheckReport check_single_user_policy(const ScenarioConfig& cfg, std::size_t pairs,
                                     std::size_t scan_points, double tol_scale = 1.0);
CheckReport check_follower_br(const ScenarioConfig& cfg, std::size_t pairs,
                              std::size_t scan_points, double tol_scale = 1.0);
CheckReport check_br_derivative(const ScenarioConfig& cfg, double tol_scale = 1.0);

/// Runs every brute-force cross-check at the scenario's parameters.
/// tol_scale scales all tolerances (a hook for exercising the failure path).
std::vector<CheckReport> run_oracle_suite(const ScenarioConfig& cfg, double tol_scale = 1.0);

std::string format_reports(const std::vector<CheckReport>& reports);
bool all_pass(const std::vector<CheckReport>& reports);

}  // namespace eepc::oracle
