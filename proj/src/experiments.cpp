// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#include "eepc/experiments.hpp"

#include <cmath>

#include "eepc/csv.hpp"
#include "eepc/errors.hpp"

namespace eepc {

namespace {

void emit_header(CsvBuilder& csv, const char* experiment, const ScenarioConfig& cfg) {
  csv.comment(std::string("eepc ") + experiment);
  std::string echo = cfg.echo();
  std::size_t pos = 0;
  while (pos < echo.size()) {
    const std::size_t nl = echo.find('\n', pos);
    csv.comment(echo.substr(pos, nl - pos));
    pos = nl + 1;
  }
}

const char* pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

std::vector<double> log_spaced(double lo, double hi, int points) {
  if (!(lo > 0) || !(lo < hi) || points < 2)
    throw precondition_error("log_spaced: requires 0 < lo < hi and points >= 2");
  std::vector<double> v(static_cast<std::size_t>(points));
  const double ratio = std::pow(hi / lo, 1.0 / (points - 1));
  double x = lo;
  for (int i = 0; i < points; ++i) {
    v[static_cast<std::size_t>(i)] = (i == points - 1) ? hi : x;
    x *= ratio;
  }
  return v;
}

EnergySweep run_energy_sweep(const ScenarioConfig& cfg) {
  cfg.validate();
  const EfficiencyModel model = cfg.model1.build();
  const GainDistribution dist = cfg.dist11();
  const McConfig mc = cfg.mc();

  EnergySweep sweep;
  sweep.lambda = log_spaced(cfg.lambda_min, cfg.lambda_max, cfg.sweep_points);
  for (double lam : sweep.lambda) {
    const Estimate e = expected_energy(model, cfg.link1(lam), dist, mc);
    sweep.energy.push_back(e.value);
    sweep.energy_stderr.push_back(e.stderr_value);
  }

  sweep.nonincreasing = true;
  for (std::size_t i = 1; i < sweep.energy.size(); ++i)
    if (sweep.energy[i] > sweep.energy[i - 1]) sweep.nonincreasing = false;
  sweep.zero_tail = sweep.energy.back() == 0.0;

  CsvBuilder csv;
  emit_header(csv, "energy-sweep", cfg);
  csv.raw_line("lambda,energy_J,stderr");
  for (std::size_t i = 0; i < sweep.lambda.size(); ++i)
    csv.row(sweep.lambda[i], sweep.energy[i], sweep.energy_stderr[i]);
  csv.comment(std::string("check energy_nonincreasing = ") + pass_fail(sweep.nonincreasing));
  csv.comment(std::string("check zero_tail = ") + pass_fail(sweep.zero_tail));
  sweep.csv = csv.str();
  return sweep;
}

FreeSlotSweep run_free_slot_sweep(const ScenarioConfig& cfg) {
  cfg.validate();
  const EfficiencyModel model = cfg.model1.build();
  const GainDistribution dist = cfg.dist11();
  const McConfig mc = cfg.mc();
  const bool shannon = model.kind() == EfficiencyKind::Shannon;

  FreeSlotSweep sweep;
  sweep.lambda = log_spaced(cfg.lambda_min, cfg.lambda_max, cfg.sweep_points);
  for (double lam : sweep.lambda) {
    const LinkParams link = cfg.link1(lam);
    const Estimate e = free_slot_probability(model, link, dist, mc);
    sweep.p_exact.push_back(e.value);
    sweep.p_exact_stderr.push_back(e.stderr_value);
    // In Shannon mode the closed form is exact, and serves as the reference
    // column; otherwise the sup-f'' bound applies.
    sweep.p_bound.push_back(shannon ? shannon_free_slot_probability(link, dist)
                                    : free_slot_lower_bound(model, link, dist).value);
  }

  sweep.bound_below_exact = true;
  sweep.monotone = true;
  for (std::size_t i = 0; i < sweep.lambda.size(); ++i) {
    if (sweep.p_bound[i] > sweep.p_exact[i] + 3.0 * sweep.p_exact_stderr[i])
      sweep.bound_below_exact = false;
    if (i > 0) {
      const double slack = 3.0 * (sweep.p_exact_stderr[i] + sweep.p_exact_stderr[i - 1]);
      if (sweep.p_exact[i] < sweep.p_exact[i - 1] - slack) sweep.monotone = false;
      if (sweep.p_bound[i] < sweep.p_bound[i - 1]) sweep.monotone = false;
    }
  }

  CsvBuilder csv;
  emit_header(csv, "free-slot", cfg);
  csv.raw_line("lambda,p_exact,p_exact_stderr,p_lower_bound");
  for (std::size_t i = 0; i < sweep.lambda.size(); ++i)
    csv.row(sweep.lambda[i], sweep.p_exact[i], sweep.p_exact_stderr[i], sweep.p_bound[i]);
  csv.comment(std::string("check bound_below_exact = ") + pass_fail(sweep.bound_below_exact));
  csv.comment(std::string("check monotone = ") + pass_fail(sweep.monotone));
  sweep.csv = csv.str();
  return sweep;
}

UtilitySweep run_utility_comparison(const ScenarioConfig& cfg) {
  cfg.validate();
  const EfficiencyModel model1 = cfg.model1.build();
  const EfficiencyModel model2 = cfg.model2.build();
  const McConfig mc = cfg.mc();
  const auto dists = cfg.joint_dists();

  UtilitySweep sweep;
  sweep.lambda = log_spaced(cfg.lambda_min, cfg.lambda_max, cfg.sweep_points);
  for (double lam : sweep.lambda) {
    const LinkParams link1 = cfg.link1(lam);
    const LinkParams link2 = cfg.link2(cfg.lambda2_ratio * lam);
    const OrthogonalUtilities orth = orthogonal_case_utilities(
        model1, model2, link1, link2, cfg.dist11(), cfg.dist22(), mc);
    const UtilityEstimates eq =
        equilibrium_expected_utilities(model1, model2, link1, link2, dists, mc);
    sweep.u_orth_primary.push_back(orth.primary.value);
    sweep.se_orth_primary.push_back(orth.primary.stderr_value);
    sweep.u_orth_secondary.push_back(orth.secondary);
    sweep.se_orth_secondary.push_back(orth.secondary_stderr);
    sweep.u_leader.push_back(eq.leader.value);
    sweep.se_leader.push_back(eq.leader.stderr_value);
    sweep.u_follower.push_back(eq.follower.value);
    sweep.se_follower.push_back(eq.follower.stderr_value);
  }

  sweep.ordering_ok = true;
  for (std::size_t i = 0; i < sweep.lambda.size(); ++i) {
    const double slack_p = 3.0 * (sweep.se_orth_primary[i] + sweep.se_leader[i]);
    const double slack_s = 3.0 * (sweep.se_orth_secondary[i] + sweep.se_follower[i]);
    if (sweep.u_orth_primary[i] < sweep.u_leader[i] - slack_p) sweep.ordering_ok = false;
    if (sweep.u_follower[i] < sweep.u_orth_secondary[i] - slack_s) sweep.ordering_ok = false;
  }
  sweep.zero_tail = sweep.u_orth_primary.back() == 0.0 && sweep.u_orth_secondary.back() == 0.0 &&
                    sweep.u_leader.back() == 0.0 && sweep.u_follower.back() == 0.0;

  CsvBuilder csv;
  emit_header(csv, "utilities", cfg);
  csv.raw_line(
      "lambda,u_orth_primary,u_orth_primary_stderr,u_orth_secondary,u_orth_secondary_stderr,"
      "u_leader,u_leader_stderr,u_follower,u_follower_stderr");
  for (std::size_t i = 0; i < sweep.lambda.size(); ++i)
    csv.row(sweep.lambda[i], sweep.u_orth_primary[i], sweep.se_orth_primary[i],
            sweep.u_orth_secondary[i], sweep.se_orth_secondary[i], sweep.u_leader[i],
            sweep.se_leader[i], sweep.u_follower[i], sweep.se_follower[i]);
  csv.comment(std::string("check ordering = ") + pass_fail(sweep.ordering_ok));
  csv.comment(std::string("check zero_tail = ") + pass_fail(sweep.zero_tail));
  sweep.csv = csv.str();
  return sweep;
}

PowerProfileRun run_power_profile(const ScenarioConfig& cfg) {
  cfg.validate();
  const EfficiencyModel model1 = cfg.model1.build();
  const EfficiencyModel model2 = cfg.model2.build();
  const LinkParams link1 = cfg.link1(cfg.lambda);
  const LinkParams link2 = cfg.link2(cfg.lambda2_ratio * cfg.lambda);

  PowerProfileRun run;
  run.profile = leader_power_profile(
      model1, model2, link1, link2,
      GridSpec{cfg.profile_g11_lo, cfg.profile_g11_hi, cfg.profile_g11_points},
      GridSpec{cfg.profile_g22_lo, cfg.profile_g22_hi, cfg.profile_g22_points}, cfg.g12_mean,
      cfg.g21_mean, SolverConfig{}, cfg.workers);

  CsvBuilder csv;
  emit_header(csv, "power-profile", cfg);
  csv.raw_line("g11,g22,p1_star");
  const std::size_t n2 = run.profile.g22.size();
  for (std::size_t i = 0; i < run.profile.g11.size(); ++i)
    for (std::size_t j = 0; j < n2; ++j)
      csv.row(run.profile.g11[i], run.profile.g22[j], run.profile.p1_star[i * n2 + j]);
  run.csv = csv.str();
  return run;
}

CalibrationRun run_calibration(const ScenarioConfig& cfg) {
  cfg.validate();
  if (!cfg.energy_budget)
    throw config_error("calibrate requires point.energy_budget in the scenario");
  const EfficiencyModel model = cfg.model1.build();

  CalibrationRun run;
  run.result = calibrate_lambda(model, cfg.link1(0.0), cfg.dist11(), cfg.mc());

  CsvBuilder csv;
  emit_header(csv, "calibrate", cfg);
  csv.raw_line("lambda,energy_J,stderr");
  csv.row(run.result.lambda, run.result.energy, run.result.energy_stderr);
  if (run.result.saturated_low)
    csv.comment("warning: budget exceeds the energy spent at lambda_min (saturated low)");
  if (run.result.saturated_high)
    csv.comment("warning: budget below the energy spent at lambda_max (saturated high)");
  run.csv = csv.str();
  return run;
}

}  // namespace eepc
