// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#include "eepc/stackelberg.hpp"

#include <algorithm>
#include <cmath>

namespace eepc {

namespace {

void validate_realization(const GainRealization& r) {
  if (!(r.g11 > 0) || !(r.g22 > 0) || r.g12 < 0 || r.g21 < 0)
    throw precondition_error("GainRealization: requires g11, g22 > 0 and g12, g21 >= 0");
}

// Leader SINR when the follower best-responds with target x2.
double leader_sinr(const GainRealization& r, double sigma2, double p1, double x2) {
  if (p1 <= 0) return 0.0;
  if (x2 <= 0) return p1 * r.g11 / sigma2;
  const double den =
      sigma2 * (1.0 + (r.g21 / r.g22) * x2) + p1 * (r.g12 * r.g21 / r.g22) * x2;
  return p1 * r.g11 / den;
}

// Leader power that p1 must exceed before the follower prefers silence;
// closed form because the follower's transmit decision depends on its price
// coefficient c2 = lambda2 T (sigma^2 + p1 g12)^2 / (R2 g22^2) alone.
double follower_silence_power(const EfficiencyModel& m2, const LinkParams& p2,
                              const GainRealization& r, double p_cap) {
  if (m2.max_f2_degenerate()) return 0.0;
  const double c_tx = m2.silence_price_threshold();
  if (!(p2.lambda > 0)) return p_cap;  // zero price: never silent
  const double c2_at_0 = p2.lambda * p2.T * p2.sigma2 * p2.sigma2 / (p2.R * r.g22 * r.g22);
  if (c2_at_0 >= c_tx) return 0.0;
  if (r.g12 == 0) return p_cap;  // no coupling: decision independent of p1
  const double th = (r.g22 * std::sqrt(c_tx * p2.R / (p2.lambda * p2.T)) - p2.sigma2) / r.g12;
  return std::clamp(th, 0.0, p_cap);
}

}  // namespace

std::optional<PowerPair> powers_from_sinrs(const GainRealization& real, double sigma2,
                                           double gamma1, double gamma2) {
  validate_realization(real);
  if (gamma1 < 0 || gamma2 < 0)
    throw precondition_error("powers_from_sinrs: requires gamma1, gamma2 >= 0");
  const double denom = 1.0 - real.alpha() * gamma1 * gamma2;
  if (denom <= 1e-12) return std::nullopt;
  const double p1 =
      (sigma2 / real.g11) * (gamma1 + gamma1 * gamma2 * (real.g21 / real.g22)) / denom;
  const double p2 =
      (sigma2 / real.g22) * (gamma2 + gamma1 * gamma2 * (real.g12 / real.g11)) / denom;
  return PowerPair{p1, p2};
}

PolicySolution follower_best_response(const EfficiencyModel& model2, const LinkParams& params2,
                                      const GainRealization& real, double p1,
                                      const SolverConfig& cfg) {
  validate_realization(real);
  if (p1 < 0) throw precondition_error("follower_best_response: requires p1 >= 0");
  const double sigma2_eff = params2.sigma2 + p1 * real.g12;
  return optimal_snr_with_noise(model2, params2.R, params2.T, params2.lambda, sigma2_eff,
                                real.g22, cfg);
}

double follower_br_derivative(const EfficiencyModel& model2, const LinkParams& params2,
                              const GainRealization& real, double p1, const SolverConfig& cfg) {
  const PolicySolution br = follower_best_response(model2, params2, real, p1, cfg);
  if (!br.transmitting)
    throw precondition_error("follower_br_derivative: follower silent, derivative undefined");
  const double x2 = br.snr_target;
  const double sigma2_eff = params2.sigma2 + p1 * real.g12;
  const double k = 2.0 * params2.lambda * params2.T / (params2.R * real.g22 * real.g22);
  const double denom = model2.deriv2(x2) - k * sigma2_eff * sigma2_eff;
  return k * sigma2_eff * real.g12 * x2 / denom;
}

double leader_equation_residual(const EfficiencyModel& model1, const EfficiencyModel& model2,
                                const LinkParams& params1, const LinkParams& params2,
                                const GainRealization& real, double x, double x2) {
  const double alpha = real.alpha();
  const double s2 = params1.sigma2;
  const double s4 = s2 * s2;
  double g_term = 0;
  if (x2 > 0) {
    const double cross = 1.0 + (real.g12 / real.g11) * x;
    const double d = (1.0 - alpha * x2 * x) * (1.0 - alpha * x2 * x) *
                         (params2.R * real.g22 * real.g22 /
                          (2.0 * params2.lambda * params2.T * s4)) *
                         model2.deriv2(x2) -
                     cross * cross;
    g_term = alpha * x * cross * cross * x2 / d;
  }
  const double lhs = x * model1.deriv1(x) * (1.0 - alpha * x2 * x - g_term) - model1.eval(x);
  const double ratio = (1.0 + (real.g21 / real.g22) * x2) / (1.0 - alpha * x * x2);
  const double rhs =
      (params1.lambda * params1.T * s4 / (params1.R * real.g11 * real.g11)) * ratio * ratio * x *
      x;
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

StackelbergOutcome leader_equilibrium(const EfficiencyModel& model1,
                                      const EfficiencyModel& model2, const LinkParams& params1,
                                      const LinkParams& params2, const GainRealization& real,
                                      const SolverConfig& cfg) {
  validate_realization(real);
  if (model1.kind() == EfficiencyKind::Shannon || model2.kind() == EfficiencyKind::Shannon)
    throw unsupported_operation("leader_equilibrium: Shannon mode not defined for the game");

  StackelbergOutcome out;

  auto finish_with_silent_leader = [&]() {
    const PolicySolution br0 = follower_best_response(model2, params2, real, 0.0, cfg);
    out.p1 = 0;
    out.gamma1 = 0;
    out.leader_transmitting = false;
    out.leader_objective = 0;
    out.follower_transmitting = br0.transmitting;
    out.p2 = br0.power;
    out.gamma2 = br0.snr_target;
    out.u2_contrib =
        br0.transmitting ? params2.R * model2.eval(br0.snr_target) / br0.power : 0.0;
    out.feasible = true;
    return out;
  };

  if (model1.max_f2_degenerate()) return finish_with_silent_leader();

  // No cross gain onto the leader's receiver: the leader's problem is
  // exactly the single-user one, solved by its optimality equation.
  if (real.g21 == 0) {
    const PolicySolution su = optimal_snr(model1, params1, real.g11, cfg);
    if (!su.transmitting) return finish_with_silent_leader();
    const PolicySolution br = follower_best_response(model2, params2, real, su.power, cfg);
    out.p1 = su.power;
    out.gamma1 = su.snr_target;
    out.leader_transmitting = true;
    out.leader_objective = su.objective_value;
    out.follower_transmitting = br.transmitting;
    out.p2 = br.power;
    out.gamma2 = br.transmitting ? br.snr_target : 0.0;
    out.feasible = true;
    out.u1_contrib = params1.R * model1.eval(su.snr_target) / su.power;
    out.u2_contrib = br.transmitting ? params2.R * model2.eval(br.snr_target) / br.power : 0.0;
    out.interior_optimum = true;
    out.stationarity_residual = leader_equation_residual(model1, model2, params1, params2, real,
                                                         out.gamma1, out.gamma2);
    return out;
  }

  // Priced leader objective with the follower re-solving at each p1.
  auto objective = [&](double p1) {
    const PolicySolution br = follower_best_response(model2, params2, real, p1, cfg);
    const double g1 = leader_sinr(real, params1.sigma2, p1, br.transmitting ? br.snr_target : 0);
    return params1.R * model1.eval(g1) / p1 - params1.lambda * params1.T * p1;
  };

  const double p_ref = (params1.sigma2 / real.g11) * model1.zero_price_snr();
  double p_cap = 1e6 * p_ref;

  double best_p1 = 0;
  double best_j = 0;  // silence baseline
  double threshold_at_best = 0;
  for (int expansion = 0;; ++expansion) {
    best_p1 = 0;
    best_j = 0;
    auto consider = [&](double p1) {
      if (!(p1 > 0) || p1 > p_cap) return;
      const double j = objective(p1);
      if (j > best_j) {
        best_j = j;
        best_p1 = p1;
      }
    };

    const double th = follower_silence_power(model2, params2, real, p_cap);
    const double p_lo = 1e-8 * p_ref;

    // Follower-active branch: grid+golden in log power (the optimum sits
    // many decades below the cap).
    if (th > 2.0 * p_lo) {
      const double a_hi = th * (1.0 - 1e-9);
      const MaximizeResult res =
          maximize_scalar([&](double s) { return objective(std::exp(s)); }, std::log(p_lo),
                          std::log(a_hi), cfg.rel_tol, cfg.grid_points, cfg.max_iter);
      consider(std::exp(res.x));
    }

    // Follower-silent branch: the leader alone is a single-user problem, so
    // its interior candidate is exact; branch endpoints cover the clamped
    // cases and the jump at the silence threshold.
    if (th < p_cap) {
      const PolicySolution su = optimal_snr(model1, params1, real.g11, cfg);
      if (su.transmitting) consider(std::clamp(su.power, th * (1.0 + 1e-9), p_cap));
      if (th > 0) consider(th * (1.0 + 1e-9));
    }

    threshold_at_best = th;
    if (best_p1 < p_cap * (1.0 - 1e-6)) break;
    if (expansion >= 3) {
      out.cap_expanded = true;
      break;
    }
    p_cap *= 8.0;
  }

  if (!(best_j > 0)) return finish_with_silent_leader();

  const PolicySolution br = follower_best_response(model2, params2, real, best_p1, cfg);
  const double x2 = br.transmitting ? br.snr_target : 0.0;
  const double g1 = leader_sinr(real, params1.sigma2, best_p1, x2);
  out.p1 = best_p1;
  out.gamma1 = g1;
  out.leader_transmitting = true;
  out.leader_objective = best_j;
  out.follower_transmitting = br.transmitting;
  out.p2 = br.power;
  out.gamma2 = x2;
  out.feasible = 1.0 - real.alpha() * g1 * x2 > 0;
  out.u1_contrib = params1.R * model1.eval(g1) / best_p1;
  out.u2_contrib = br.transmitting ? params2.R * model2.eval(x2) / br.power : 0.0;
  out.interior_optimum =
      !out.cap_expanded && best_p1 < p_cap * (1.0 - 1e-6) &&
      (threshold_at_best <= 0 || std::abs(best_p1 / threshold_at_best - 1.0) > 1e-6);
  if (!out.cap_expanded)
    out.stationarity_residual =
        leader_equation_residual(model1, model2, params1, params2, real, g1, x2);
  return out;
}

UtilityEstimates equilibrium_expected_utilities(const EfficiencyModel& model1,
                                                const EfficiencyModel& model2,
                                                const LinkParams& params1,
                                                const LinkParams& params2,
                                                const std::array<GainDistribution, 4>& dists,
                                                const McConfig& mc, const SolverConfig& cfg,
                                                std::uint64_t stream_base) {
  auto contribs = [&](double g11, double g12, double g21, double g22) {
    const GainRealization r{g11, g12, g21, g22};
    const StackelbergOutcome o = leader_equilibrium(model1, model2, params1, params2, r, cfg);
    return std::array<double, 2>{o.u1_contrib, o.u2_contrib};
  };
  const auto est = expect_joint_multi<2>(contribs, dists, mc, stream_base);
  return UtilityEstimates{est[0], est[1]};
}

OrthogonalUtilities orthogonal_case_utilities(const EfficiencyModel& model1,
                                              const EfficiencyModel& model2,
                                              const LinkParams& params1,
                                              const LinkParams& params2,
                                              const GainDistribution& dist11,
                                              const GainDistribution& dist22, const McConfig& mc,
                                              const SolverConfig& cfg) {
  OrthogonalUtilities o;
  o.primary = expected_utility(model1, params1, dist11, mc, cfg, 0);
  o.free_prob = free_slot_probability(model1, params1, dist11, mc, cfg, 0);
  o.secondary_own = expected_utility(model2, params2, dist22, mc, cfg, 3);
  o.secondary = o.free_prob.value * o.secondary_own.value;
  // Independent streams: first-order error propagation for the product.
  const double a = o.free_prob.value, sa = o.free_prob.stderr_value;
  const double b = o.secondary_own.value, sb = o.secondary_own.stderr_value;
  o.secondary_stderr = std::sqrt(a * a * sb * sb + b * b * sa * sa);
  return o;
}

PowerProfile leader_power_profile(const EfficiencyModel& model1, const EfficiencyModel& model2,
                                  const LinkParams& params1, const LinkParams& params2,
                                  const GridSpec& g11_grid, const GridSpec& g22_grid,
                                  double g12_fixed, double g21_fixed, const SolverConfig& cfg,
                                  int workers) {
  if (!(g11_grid.lo > 0) || !(g11_grid.lo < g11_grid.hi) || g11_grid.points < 2 ||
      !(g22_grid.lo > 0) || !(g22_grid.lo < g22_grid.hi) || g22_grid.points < 2)
    throw precondition_error("leader_power_profile: requires positive ascending grids");

  auto log_grid = [](const GridSpec& s) {
    std::vector<double> v(static_cast<std::size_t>(s.points));
    const double ratio = std::pow(s.hi / s.lo, 1.0 / (s.points - 1));
    double x = s.lo;
    for (int i = 0; i < s.points; ++i) {
      v[static_cast<std::size_t>(i)] = (i == s.points - 1) ? s.hi : x;
      x *= ratio;
    }
    return v;
  };

  PowerProfile profile;
  profile.g11 = log_grid(g11_grid);
  profile.g22 = log_grid(g22_grid);
  const std::size_t n1 = profile.g11.size();
  const std::size_t n2 = profile.g22.size();
  profile.p1_star.assign(n1 * n2, 0.0);
  parallel_for(
      n1 * n2, workers,
      [&](std::size_t cell) {
        const std::size_t i = cell / n2;
        const std::size_t j = cell % n2;
        const GainRealization r{profile.g11[i], g12_fixed, g21_fixed, profile.g22[j]};
        profile.p1_star[cell] =
            leader_equilibrium(model1, model2, params1, params2, r, cfg).p1;
      },
      1);
  return profile;
}

}  // namespace eepc
