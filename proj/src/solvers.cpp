// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#include "eepc/solvers.hpp"

#include <cmath>

namespace eepc {

namespace {

struct FShape {
  bool has_top = false;     // F positive somewhere right of the origin
  double x_lo = 0;          // left end of F's increasing interval
  double x_hi = 0;          // right end of F's increasing interval (F's max)
  bool left_crossing = true;  // f'' actually dips below 2c left of its peak
};

// F(x) = x f'(x) - f(x) - c x^2 increases exactly where f''(x) > 2c.
FShape locate_increasing_interval(const EfficiencyModel& model, double c,
                                  const SolverConfig& cfg) {
  FShape s;
  const double xs = model.max_f2_arg();
  const double x0 = model.inflection();
  auto excess = [&](double t) { return model.deriv2(t) - 2.0 * c; };

  // Right crossing: f'' falls from its peak through 2c before x0. The right
  // endpoint is nudged past x0 because the stored x0 is itself a bisection
  // result and f'' may still be marginally positive there.
  s.x_hi = bisect(excess, xs, x0 * (1.0 + 1e-6), cfg.rel_tol, cfg.max_iter);

  // Left crossing: walk down from the peak until f'' <= 2c. Models whose f''
  // supremum sits at the x -> 0 boundary (Empirical M = 2) never cross; F
  // then increases from the origin and has no positive lesser zero.
  double l = xs;
  int guard = 0;
  while (excess(l) > 0 && guard++ < 200) l *= 0.5;
  if (excess(l) > 0) {
    s.left_crossing = false;
    s.x_lo = l;
  } else {
    s.x_lo = bisect(excess, l, xs, cfg.rel_tol, cfg.max_iter);
  }
  s.has_top = true;
  return s;
}

double f_value(const EfficiencyModel& model, double c, double x) {
  return x * model.deriv1(x) - model.eval(x) - c * x * x;
}

}  // namespace

ZeroStructure greatest_zero(const EfficiencyModel& model, double c, const SolverConfig& cfg) {
  if (!(c > 0)) throw precondition_error("greatest_zero: requires c > 0");
  if (model.kind() == EfficiencyKind::Shannon)
    throw unsupported_operation("greatest_zero: Shannon mode is handled in closed form");

  ZeroStructure zs;
  if (model.max_f2_degenerate() || model.max_f2() <= 2.0 * c) return zs;

  const FShape shape = locate_increasing_interval(model, c, cfg);
  zs.bracket_lo = shape.x_lo;
  zs.bracket_hi = shape.x_hi;

  auto F = [&](double x) { return f_value(model, c, x); };
  const double f_top = F(shape.x_hi);
  if (f_top <= 0) return zs;

  // Greater zero: expand right geometrically until F < 0, capped at
  // expand_cap * x0 (F < 0 is guaranteed out there for admissible f; a cap
  // hit is reported as no-positive-zero with the expansion flag set).
  const double cap = cfg.expand_cap * model.inflection();
  double a = shape.x_hi;
  double b = 2.0 * a;
  while (F(b) >= 0) {
    a = b;
    b *= 2.0;
    if (b > cap) {
      zs.expansion_capped = true;
      return zs;
    }
  }
  const double x2 = bisect(F, a, b, cfg.rel_tol, cfg.max_iter);

  // Lesser zero: F is negative at the bottom of its decreasing phase unless
  // the increasing interval starts at the origin, in which case the lesser
  // zero collapses onto 0.
  double x1 = 0;
  const double f_bottom = F(shape.x_lo);
  if (shape.left_crossing && f_bottom < 0) {
    x1 = bisect(F, shape.x_lo, shape.x_hi, cfg.rel_tol, cfg.max_iter);
  } else if (f_bottom == 0) {
    x1 = shape.x_lo;
  }

  zs.kind = ZeroStructure::Case::TwoZeros;
  zs.x1 = x1;
  zs.x2 = x2;
  return zs;
}

double greatest_zero_top(const EfficiencyModel& model, double c, const SolverConfig& cfg) {
  if (!(c > 0)) throw precondition_error("greatest_zero_top: requires c > 0");
  if (model.kind() == EfficiencyKind::Shannon)
    throw unsupported_operation("greatest_zero_top: Shannon mode is handled in closed form");
  if (model.max_f2_degenerate() || model.max_f2() <= 2.0 * c) return 0.0;

  const double xs = model.max_f2_arg();
  const double x0 = model.inflection();
  auto excess = [&](double t) { return model.deriv2(t) - 2.0 * c; };
  const double x_hi = bisect(excess, xs, x0 * (1.0 + 1e-6), cfg.rel_tol, cfg.max_iter);

  auto F = [&](double x) { return f_value(model, c, x); };
  if (F(x_hi) <= 0) return 0.0;

  const double cap = cfg.expand_cap * x0;
  double a = x_hi;
  double b = 2.0 * a;
  while (F(b) >= 0) {
    a = b;
    b *= 2.0;
    if (b > cap) return 0.0;
  }
  return bisect(F, a, b, cfg.rel_tol, cfg.max_iter);
}

}  // namespace eepc
