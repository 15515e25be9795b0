// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#include "eepc/efficiency.hpp"

#include <cmath>

#include "eepc/errors.hpp"
#include "eepc/solvers.hpp"

namespace eepc {

namespace {

// exp(-a/x) underflows long before a/x reaches the double exp() range limit;
// beyond 700 the analytic limits (all zero) are exact to machine precision.
constexpr double kOutageUnderflowRatio = 700.0;

}  // namespace

EfficiencyModel EfficiencyModel::outage(double a) {
  if (!(a > 0)) throw precondition_error("EfficiencyModel::outage: requires a > 0");
  EfficiencyModel m;
  m.kind_ = EfficiencyKind::Outage;
  m.a_ = a;
  m.analyze();
  return m;
}

EfficiencyModel EfficiencyModel::empirical(int mm) {
  if (mm < 1) throw precondition_error("EfficiencyModel::empirical: requires M >= 1");
  EfficiencyModel m;
  m.kind_ = EfficiencyKind::Empirical;
  m.m_ = mm;
  m.analyze();
  return m;
}

EfficiencyModel EfficiencyModel::shannon() {
  EfficiencyModel m;
  m.kind_ = EfficiencyKind::Shannon;
  return m;
}

void EfficiencyModel::require_pointwise(const char* op) const {
  if (kind_ == EfficiencyKind::Shannon)
    throw unsupported_operation(std::string("EfficiencyModel::") + op +
                                ": Shannon mode has no pointwise form");
}

double EfficiencyModel::eval(double x) const {
  require_pointwise("eval");
  if (x < 0) throw precondition_error("EfficiencyModel::eval: requires x >= 0");
  if (kind_ == EfficiencyKind::Outage) {
    if (x == 0.0 || a_ / x > kOutageUnderflowRatio) return 0.0;
    return std::exp(-a_ / x);
  }
  return std::pow(-std::expm1(-x), m_);
}

double EfficiencyModel::deriv1(double x) const {
  require_pointwise("deriv1");
  if (x < 0) throw precondition_error("EfficiencyModel::deriv1: requires x >= 0");
  if (kind_ == EfficiencyKind::Outage) {
    if (x == 0.0 || a_ / x > kOutageUnderflowRatio) return 0.0;
    return (a_ / (x * x)) * std::exp(-a_ / x);
  }
  if (m_ == 1) return std::exp(-x);
  return m_ * std::pow(-std::expm1(-x), m_ - 1) * std::exp(-x);
}

double EfficiencyModel::deriv2(double x) const {
  require_pointwise("deriv2");
  if (x < 0) throw precondition_error("EfficiencyModel::deriv2: requires x >= 0");
  if (kind_ == EfficiencyKind::Outage) {
    if (x == 0.0 || a_ / x > kOutageUnderflowRatio) return 0.0;
    return (a_ / (x * x * x)) * (a_ / x - 2.0) * std::exp(-a_ / x);
  }
  if (m_ == 1) return -std::exp(-x);
  const double e = std::exp(-x);
  return m_ * e * std::pow(-std::expm1(-x), m_ - 2) * (m_ * e - 1.0);
}

double EfficiencyModel::inflection() const {
  require_pointwise("inflection");
  if (!has_inflection_)
    throw degenerate_model_error("EfficiencyModel::inflection: f'' never changes sign (M = 1)");
  return x0_;
}

double EfficiencyModel::zero_price_snr() const {
  require_pointwise("zero_price_snr");
  if (degenerate_)
    throw degenerate_model_error(
        "EfficiencyModel::zero_price_snr: x f'(x) - f(x) has no positive root (M = 1)");
  return zero_price_snr_;
}

void EfficiencyModel::analyze() {
  if (kind_ == EfficiencyKind::Empirical && m_ == 1) {
    // f'' = -exp(-x) < 0 everywhere: no inflection, sup f'' = 0 at the
    // x -> 0 boundary, and x f' - f = x e^-x - (1 - e^-x) < 0 for x > 0.
    degenerate_ = true;
    has_inflection_ = false;
    max_f2_ = 0.0;
    max_f2_arg_ = 0.0;
    return;
  }

  const double scale = (kind_ == EfficiencyKind::Outage)
                           ? a_
                           : std::max(1.0, std::log(static_cast<double>(m_)));

  // Inflection: locate the single +/- sign change of f'' on a log grid, then
  // bisect it down to 1e-10 relative.
  const int kScan = 2048;
  const double lo = scale * 1e-6;
  const double hi = scale * 1e6;
  const double ratio = std::pow(hi / lo, 1.0 / (kScan - 1));
  double prev_x = lo;
  double prev_d2 = deriv2(prev_x);
  bool seen_positive = prev_d2 > 0;
  double bracket_lo = 0, bracket_hi = 0;
  double x = lo;
  for (int i = 1; i < kScan; ++i) {
    x *= ratio;
    const double d2 = deriv2(x);
    if (seen_positive && d2 < 0) {
      bracket_lo = prev_x;
      bracket_hi = x;
      break;
    }
    if (d2 > 0) seen_positive = true;
    prev_x = x;
    prev_d2 = d2;
  }
  (void)prev_d2;
  if (bracket_hi == 0)
    throw degenerate_model_error("EfficiencyModel: no f'' sign change found on scan grid");
  x0_ = bisect([this](double t) { return deriv2(t); }, bracket_lo, bracket_hi, 1e-10);
  has_inflection_ = true;

  // sup f'' on (0, x0]: coarse grid + golden section. Models whose f''
  // supremum sits at the x -> 0 boundary (Empirical M = 2) resolve to the
  // left grid edge.
  const double eps = std::min(1e-9, 1e-3 * x0_);
  MaximizeResult peak = maximize_scalar([this](double t) { return deriv2(t); }, eps, x0_, 1e-10);
  max_f2_ = peak.value;
  max_f2_arg_ = peak.x;
  degenerate_ = !(max_f2_ > 0);

  // Zero-price SNR: x f' - f is positive at x0 and tends to -1; expand the
  // upper bracket geometrically, then bisect.
  auto h = [this](double t) { return t * deriv1(t) - eval(t); };
  double b = x0_;
  double hb = h(b);
  int guard = 0;
  while (hb > 0 && guard++ < 64) {
    b *= 2.0;
    hb = h(b);
  }
  if (hb > 0) throw degenerate_model_error("EfficiencyModel: zero-price root bracket failed");
  zero_price_snr_ = bisect(h, x0_, b, 1e-12);

  // Silence price: transmission requires both a positive greater zero and a
  // positive priced objective there; both conditions shut off monotonically
  // as c grows, so a boolean bisection pins the single switch point.
  auto transmits_at = [this](double c) {
    const double x2 = greatest_zero_top(*this, c);
    return x2 > 0 && eval(x2) / x2 - c * x2 > 0;
  };
  const double c_cap = 0.5 * max_f2_;
  double c_hi = c_cap * (1.0 - 1e-12);
  if (transmits_at(c_hi)) {
    silence_price_ = c_cap;
  } else {
    double c_lo = c_cap * 1e-12;
    if (!transmits_at(c_lo)) {
      silence_price_ = 0.0;
      degenerate_ = true;
      return;
    }
    for (int it = 0; it < 100 && c_hi - c_lo > 1e-14 * c_hi; ++it) {
      const double mid = 0.5 * (c_lo + c_hi);
      (transmits_at(mid) ? c_lo : c_hi) = mid;
    }
    silence_price_ = 0.5 * (c_lo + c_hi);
  }
}

std::string EfficiencyModel::describe() const {
  switch (kind_) {
    case EfficiencyKind::Outage:
      return "outage a=" + std::to_string(a_);
    case EfficiencyKind::Empirical:
      return "empirical M=" + std::to_string(m_);
    case EfficiencyKind::Shannon:
      return "shannon";
  }
  return "?";
}

}  // namespace eepc
