// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#include "eepc/single_user.hpp"

#include <cmath>

namespace eepc {

double priced_contribution(const EfficiencyModel& model, double rate, double slot_T,
                           double lambda, double sigma2_eff, double gain, double x) {
  if (x <= 0) return 0.0;
  return rate * gain * model.eval(x) / (sigma2_eff * x) -
         lambda * slot_T * (sigma2_eff / gain) * x;
}

PolicySolution optimal_snr_with_noise(const EfficiencyModel& model, double rate, double slot_T,
                                      double lambda, double sigma2_eff, double gain,
                                      const SolverConfig& cfg) {
  if (!(gain > 0)) throw precondition_error("optimal_snr: requires g > 0");
  if (lambda < 0) throw precondition_error("optimal_snr: requires lambda >= 0");
  if (!(rate > 0) || !(slot_T > 0) || !(sigma2_eff > 0))
    throw precondition_error("optimal_snr: requires positive rate, slot duration and noise");
  if (model.kind() == EfficiencyKind::Shannon)
    throw unsupported_operation("optimal_snr: Shannon mode uses shannon_optimal_snr");

  const double c = lambda * slot_T * sigma2_eff * sigma2_eff / (rate * gain * gain);
  double x;
  if (c < 1e-300) {
    if (model.max_f2_degenerate()) return PolicySolution{};
    x = model.zero_price_snr();
  } else {
    if (c >= model.silence_price_threshold()) return PolicySolution{};
    x = greatest_zero_top(model, c, cfg);
    if (x == 0.0) return PolicySolution{};
  }
  const double v = priced_contribution(model, rate, slot_T, lambda, sigma2_eff, gain, x);
  if (!(v > 0)) return PolicySolution{};  // ties go to silence
  return PolicySolution{x, (sigma2_eff / gain) * x, true, v};
}

PolicySolution optimal_snr(const EfficiencyModel& model, const LinkParams& params, double gain,
                           const SolverConfig& cfg) {
  return optimal_snr_with_noise(model, params.R, params.T, params.lambda, params.sigma2, gain,
                                cfg);
}

PolicySolution shannon_optimal_snr(const LinkParams& params, double gain) {
  if (!(gain > 0)) throw precondition_error("shannon_optimal_snr: requires g > 0");
  if (!(params.lambda > 0)) throw precondition_error("shannon_optimal_snr: requires lambda > 0");
  const double snr = gain / (params.lambda * params.sigma2) - 1.0;
  if (snr <= 0) return PolicySolution{};
  // Water-filling: p* = 1/lambda - sigma2/g. The objective below is the
  // rate-integrand Lagrangian density whose stationary point this is.
  const double power = (params.sigma2 / gain) * snr;
  const double v = std::log1p(snr) - params.lambda * power;
  return PolicySolution{snr, power, true, v > 0 ? v : 0};
}

PolicySolution solve_policy(const EfficiencyModel& model, const LinkParams& params, double gain,
                            const SolverConfig& cfg) {
  if (model.kind() == EfficiencyKind::Shannon) return shannon_optimal_snr(params, gain);
  return optimal_snr(model, params, gain, cfg);
}

Estimate expected_energy(const EfficiencyModel& model, const LinkParams& params,
                         const GainDistribution& dist, const McConfig& mc,
                         const SolverConfig& cfg, std::uint64_t stream_id) {
  Estimate e = expect_1d(
      [&](double g) { return solve_policy(model, params, g, cfg).power; }, dist, mc, stream_id);
  e.value *= params.T;
  e.stderr_value *= params.T;
  return e;
}

Estimate expected_utility(const EfficiencyModel& model, const LinkParams& params,
                          const GainDistribution& dist, const McConfig& mc,
                          const SolverConfig& cfg, std::uint64_t stream_id) {
  if (model.kind() == EfficiencyKind::Shannon) {
    return expect_1d(
        [&](double g) {
          const PolicySolution s = shannon_optimal_snr(params, g);
          return s.transmitting ? params.R * std::log1p(s.snr_target) : 0.0;
        },
        dist, mc, stream_id);
  }
  return expect_1d(
      [&](double g) {
        const PolicySolution s = optimal_snr(model, params, g, cfg);
        return s.transmitting ? params.R * model.eval(s.snr_target) / s.power : 0.0;
      },
      dist, mc, stream_id);
}

Estimate free_slot_probability(const EfficiencyModel& model, const LinkParams& params,
                               const GainDistribution& dist, const McConfig& mc,
                               const SolverConfig& cfg, std::uint64_t stream_id) {
  return expect_1d(
      [&](double g) { return solve_policy(model, params, g, cfg).transmitting ? 0.0 : 1.0; },
      dist, mc, stream_id);
}

double shannon_free_slot_probability(const LinkParams& params, const GainDistribution& dist) {
  return dist.cdf(params.lambda * params.sigma2);
}

BoundResult free_slot_lower_bound(const EfficiencyModel& model, const LinkParams& params,
                                  const GainDistribution& dist) {
  if (!(params.lambda >= 0)) throw precondition_error("free_slot_lower_bound: lambda >= 0");
  if (model.kind() == EfficiencyKind::Shannon)
    throw unsupported_operation("free_slot_lower_bound: use the Shannon closed form");
  if (model.max_f2_degenerate()) {
    if (model.kind() == EfficiencyKind::Empirical && model.empirical_m() == 1) {
      // x f' - f < 0 for every x > 0, so no gain ever admits a positive
      // root: the link is always silent and the bound is exactly 1.
      return BoundResult{1.0, true};
    }
    throw degenerate_model_error("free_slot_lower_bound: model has sup f'' = 0");
  }
  const double g_th =
      params.sigma2 * std::sqrt(2.0 * params.lambda * params.T / (params.R * model.max_f2()));
  return BoundResult{dist.cdf(g_th), false};
}

CalibrationResult calibrate_lambda(const EfficiencyModel& model, const LinkParams& params,
                                   const GainDistribution& dist, const McConfig& mc,
                                   const SolverConfig& cfg, double lambda_min, double lambda_max,
                                   std::uint64_t stream_id) {
  if (!params.energy_budget || !(*params.energy_budget > 0))
    throw precondition_error("calibrate_lambda: requires a positive energy_budget");
  if (!(lambda_min > 0) || !(lambda_min < lambda_max))
    throw precondition_error("calibrate_lambda: requires 0 < lambda_min < lambda_max");
  const double budget = *params.energy_budget;

  LinkParams p = params;
  auto energy_at = [&](double lambda) {
    p.lambda = lambda;
    return expected_energy(model, p, dist, mc, cfg, stream_id);
  };

  CalibrationResult res;
  Estimate e_lo = energy_at(lambda_min);
  if (e_lo.value <= budget) {
    res = {lambda_min, e_lo.value, e_lo.stderr_value, true, false};
    return res;
  }
  Estimate e_hi = energy_at(lambda_max);
  if (e_hi.value >= budget) {
    res = {lambda_max, e_hi.value, e_hi.stderr_value, false, true};
    return res;
  }

  // Energy is non-increasing in lambda and the draws are fixed, so this is
  // plain bisection on ln(lambda). The interval is driven well below the
  // 1e-3 energy tolerance so calibration round-trips recover lambda itself.
  double lo = lambda_min, hi = lambda_max;
  Estimate e_mid;
  double mid = std::sqrt(lo * hi);
  for (int it = 0; it < 200 && hi / lo > 1.0 + 1e-6; ++it) {
    mid = std::sqrt(lo * hi);
    e_mid = energy_at(mid);
    if (e_mid.value > budget) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (e_mid.samples == 0) e_mid = energy_at(mid);
  res = {mid, e_mid.value, e_mid.stderr_value, false, false};
  return res;
}

}  // namespace eepc
