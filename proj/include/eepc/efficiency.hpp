// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#pragma once

#include <string>

namespace eepc {

enum class EfficiencyKind { Outage, Empirical, Shannon };

/// Packet-success (efficiency) function of the target SNR, together with the
/// analytic quantities every solver consumes: the inflection point x0, the
/// supremum of f'' on (0, x0), and the zero-price SNR (positive root of
/// x f'(x) = f(x)).
///
/// Three kinds:
///   Outage(a):    f(x) = exp(-a/x) for x > 0, f(0) = 0
///   Empirical(M): f(x) = (1 - exp(-x))^M
///   Shannon:      closed-form mode; pointwise evaluation is not defined and
///                 eval/deriv/analysis calls throw unsupported_operation.
///
/// The analysis values are computed once at construction (sign-change
/// bisection for x0, coarse grid plus golden section for sup f'') so that
/// models are cheap immutable values afterwards.
class EfficiencyModel {
 public:
  static EfficiencyModel outage(double a);
  static EfficiencyModel empirical(int m);
  static EfficiencyModel shannon();

  EfficiencyKind kind() const { return kind_; }
  double outage_a() const { return a_; }
  int empirical_m() const { return m_; }

  /// f(x). Continuous at 0 for Outage (returns 0). Requires x >= 0.
  double eval(double x) const;
  /// f'(x), analytic closed form; non-negative.
  double deriv1(double x) const;
  /// f''(x), analytic closed form; changes sign once, at the inflection.
  double deriv2(double x) const;

  /// Inflection point x0 of f (deriv2 > 0 below, < 0 above).
  /// Throws degenerate_model_error when none exists (Empirical M = 1).
  double inflection() const;

  /// sup_{x>0} f''(x). Returns 0 for Empirical M = 1 (f'' < 0 everywhere);
  /// that case is flagged by max_f2_degenerate().
  double max_f2() const { require_pointwise("max_f2"); return max_f2_; }
  /// Location where the supremum is attained (or approached, for models
  /// whose f'' supremum sits at the x -> 0 boundary, e.g. Empirical M = 2).
  double max_f2_arg() const { require_pointwise("max_f2_arg"); return max_f2_arg_; }
  bool max_f2_degenerate() const { require_pointwise("max_f2_degenerate"); return degenerate_; }

  /// Positive root of x f'(x) - f(x) = 0: the optimal SNR target in the
  /// zero-energy-price limit. Throws degenerate_model_error for M = 1.
  double zero_price_snr() const;

  /// Largest price coefficient c for which transmitting beats silence.
  /// The priced objective at the greater zero x2(c) of x f' - f = c x^2 has
  /// the sign of f(x2)/x2 - c x2, which is strictly decreasing in c, so one
  /// threshold separates transmission from silence for every link and gain.
  /// 0 for degenerate models (Empirical M = 1: always silent).
  double silence_price_threshold() const {
    require_pointwise("silence_price_threshold");
    return silence_price_;
  }

  std::string describe() const;

 private:
  EfficiencyModel() = default;
  void analyze();
  void require_pointwise(const char* op) const;

  EfficiencyKind kind_ = EfficiencyKind::Shannon;
  double a_ = 0;
  int m_ = 0;
  double x0_ = 0;
  double max_f2_ = 0;
  double max_f2_arg_ = 0;
  double zero_price_snr_ = 0;
  double silence_price_ = 0;
  bool degenerate_ = false;
  bool has_inflection_ = false;
};

}  // namespace eepc
