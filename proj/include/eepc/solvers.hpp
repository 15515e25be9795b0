// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "eepc/efficiency.hpp"
#include "eepc/errors.hpp"

namespace eepc {

/// Tolerances and search limits threaded explicitly through every solver
/// call; there are no global knobs.
struct SolverConfig {
  double rel_tol = 1e-10;    // relative width at which brackets stop shrinking
  int max_iter = 200;        // hard iteration cap per bracketed search
  int grid_points = 512;     // coarse grid preceding golden-section refinement
  double expand_cap = 1e3;   // upper-bracket expansion cap, in units of x0
};

namespace detail {
inline double bracket_scale(double lo, double hi) {
  return std::max(1.0, 0.5 * (std::abs(lo) + std::abs(hi)));
}
}  // namespace detail

/// Bracketed bisection: fn must change sign on [lo, hi]. Returns the bracket
/// midpoint once its width falls below tol relative to the bracket scale.
template <typename F>
double bisect(F&& fn, double lo, double hi, double tol, int max_iter = 200) {
  if (!(lo < hi)) throw precondition_error("bisect: requires lo < hi");
  if (!(tol > 0)) throw precondition_error("bisect: requires tol > 0");
  double flo = fn(lo);
  double fhi = fn(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw bracket_error("bisect: no sign change on bracket");
  for (int it = 0; it < max_iter && (hi - lo) > tol * detail::bracket_scale(lo, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = fn(mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }
  return 0.5 * (lo + hi);
}

struct MaximizeResult {
  double x = 0;
  double value = 0;
};

namespace detail {

// Golden-section ascent on [a, b]; ties collapse leftward so flat stretches
// return their left-most point.
template <typename F>
MaximizeResult golden_max(F&& fn, double a, double b, double tol, int max_iter) {
  static constexpr double kInvPhi = 0.6180339887498949;
  MaximizeResult best{a, fn(a)};
  const double fb = fn(b);
  if (fb > best.value) best = {b, fb};
  for (int it = 0; it < max_iter && (b - a) > tol * bracket_scale(a, b); ++it) {
    const double c1 = b - kInvPhi * (b - a);
    const double c2 = a + kInvPhi * (b - a);
    const double f1 = fn(c1);
    const double f2 = fn(c2);
    if (f1 > best.value) best = {c1, f1};
    if (f2 > best.value) best = {c2, f2};
    if (f1 >= f2) {
      b = c2;
    } else {
      a = c1;
    }
  }
  const double mid = 0.5 * (a + b);
  const double fmid = fn(mid);
  if (fmid > best.value) best = {mid, fmid};
  return best;
}

inline bool better_candidate(const MaximizeResult& cand, const MaximizeResult& best) {
  const double tie = 1e-12 * std::max(1.0, std::abs(best.value));
  if (cand.value > best.value + tie) return true;
  if (cand.value >= best.value - tie && cand.x < best.x) return true;
  return false;
}

}  // namespace detail

/// Bounded scalar maximization: a coarse uniform grid locates the candidate
/// cells (every local maximum that ties the best grid value to within 1e-6
/// relative, capped at 16 cells), then golden-section refines each one.
/// Deterministic; flat objectives return their left-most maximizer.
template <typename F>
MaximizeResult maximize_scalar(F&& fn, double lo, double hi, double tol = 1e-10,
                               int grid_points = 512, int max_iter = 200) {
  if (!(lo < hi)) throw precondition_error("maximize_scalar: requires lo < hi");
  const int n = std::max(grid_points, 8);
  std::vector<double> xs(static_cast<std::size_t>(n));
  std::vector<double> fs(static_cast<std::size_t>(n));
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    xs[static_cast<std::size_t>(i)] = (i == n - 1) ? hi : lo + step * i;
    fs[static_cast<std::size_t>(i)] = fn(xs[static_cast<std::size_t>(i)]);
  }
  int ibest = 0;
  for (int i = 1; i < n; ++i)
    if (fs[static_cast<std::size_t>(i)] > fs[static_cast<std::size_t>(ibest)]) ibest = i;

  std::vector<int> cells;
  const double admit =
      fs[static_cast<std::size_t>(ibest)] -
      1e-6 * std::max(1.0, std::abs(fs[static_cast<std::size_t>(ibest)]));
  for (int i = 0; i < n; ++i) {
    const double fi = fs[static_cast<std::size_t>(i)];
    const bool left_ok = (i == 0) || fi >= fs[static_cast<std::size_t>(i - 1)];
    const bool right_ok = (i == n - 1) || fi >= fs[static_cast<std::size_t>(i + 1)];
    if (left_ok && right_ok && fi >= admit) cells.push_back(i);
  }
  if (cells.empty()) cells.push_back(ibest);
  if (cells.size() > 16) {
    std::stable_sort(cells.begin(), cells.end(), [&](int a, int b) {
      return fs[static_cast<std::size_t>(a)] > fs[static_cast<std::size_t>(b)];
    });
    cells.resize(16);
    std::sort(cells.begin(), cells.end());
  }
  if (std::find(cells.begin(), cells.end(), ibest) == cells.end()) cells.push_back(ibest);

  MaximizeResult best{xs[static_cast<std::size_t>(ibest)], fs[static_cast<std::size_t>(ibest)]};
  for (int i : cells) {
    const double a = xs[static_cast<std::size_t>(std::max(0, i - 1))];
    const double b = xs[static_cast<std::size_t>(std::min(n - 1, i + 1))];
    MaximizeResult refined = detail::golden_max(fn, a, b, tol, max_iter);
    if (detail::better_candidate(refined, best)) best = refined;
  }
  return best;
}

/// Shape analysis of F(x) = x f'(x) - f(x) - c x^2 beyond its trivial zero
/// at the origin: either F never becomes positive (silence is optimal) or it
/// has a lesser and a greater positive zero.
struct ZeroStructure {
  enum class Case { NoPositiveZero, TwoZeros };
  Case kind = Case::NoPositiveZero;
  double x1 = 0;  // lesser zero; 0 when F turns positive straight away
  double x2 = 0;  // greater zero: the transmit candidate
  double bracket_lo = 0;
  double bracket_hi = 0;
  bool expansion_capped = false;  // upper bracket hit the expansion cap
};

/// Positive zeros of F(x) = x f'(x) - f(x) - c x^2, c > 0.
/// Case analysis: if sup f'' <= 2c the origin is F's only zero. Otherwise F
/// increases exactly on the interval where f'' > 2c; a positive value of F
/// at the top of that interval yields the two zeros, bracketed by bisection
/// with geometric upper-bracket expansion (capped at expand_cap * x0).
ZeroStructure greatest_zero(const EfficiencyModel& model, double c,
                            const SolverConfig& cfg = {});

/// Greater zero only, for hot paths that never inspect x1; returns 0 when F
/// has no positive zero. Same case analysis and tolerances as greatest_zero.
double greatest_zero_top(const EfficiencyModel& model, double c,
                         const SolverConfig& cfg = {});

}  // namespace eepc
