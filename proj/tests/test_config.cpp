// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eepc/config.hpp"
#include "eepc/csv.hpp"
#include "eepc/errors.hpp"
#include "eepc/experiments.hpp"

using namespace eepc;

TEST_CASE("defaults reproduce the reference setting") {
  const ScenarioConfig cfg = parse_scenario_config("");
  CHECK(cfg.T == 1e-3);
  CHECK(cfg.R1 == 1e4);
  CHECK(cfg.R2 == 1e4);
  CHECK(cfg.sigma2 == 1e-12);
  CHECK(cfg.g11_mean == 1e-10);
  CHECK(cfg.g12_mean == 1e-12);
  CHECK(cfg.model1.kind == EfficiencyKind::Outage);
  CHECK(cfg.model1.a == 0.9);
  CHECK(cfg.lambda == 1e10);
  CHECK(cfg.samples == 100000);
}

TEST_CASE("full scenario parses") {
  const char* text = R"(
# comment line
[model1]
kind = "empirical"   # trailing comment
M = 3
[model2]
kind = "shannon"
[link]
T = 2e-3
R1 = 2e4
sigma2 = 1e-13
[gains]
g11_mean = 2e-10
[sweep]
lambda_min = 1e7
lambda_max = 1e12
points = 17
[point]
lambda = 5e9
lambda2_ratio = 0.5
energy_budget = 1e-6
[mc]
samples = 5000
seed = 777
workers = 2
quadrature = true
[profile]
g11_points = 10
g22_points = 11
[output]
path = "run.csv"
)";
  const ScenarioConfig cfg = parse_scenario_config(text);
  CHECK(cfg.model1.kind == EfficiencyKind::Empirical);
  CHECK(cfg.model1.m == 3);
  CHECK(cfg.model2.kind == EfficiencyKind::Shannon);
  CHECK(cfg.T == 2e-3);
  CHECK(cfg.R1 == 2e4);
  CHECK(cfg.R2 == 1e4);
  CHECK(cfg.sigma2 == 1e-13);
  CHECK(cfg.g11_mean == 2e-10);
  CHECK(cfg.sweep_points == 17);
  CHECK(cfg.lambda == 5e9);
  CHECK(cfg.lambda2_ratio == 0.5);
  REQUIRE(cfg.energy_budget.has_value());
  CHECK(*cfg.energy_budget == 1e-6);
  CHECK(cfg.samples == 5000);
  CHECK(cfg.seed == 777);
  CHECK(cfg.workers == 2);
  CHECK(cfg.quadrature);
  CHECK(cfg.profile_g11_points == 10);
  CHECK(cfg.output_path == "run.csv");
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_scenario_config("[link]\nT = 1e-3\nbogus line\n");
    FAIL("expected config_error");
  } catch (const config_error& e) {
    CHECK(e.line == 3);
  }
  try {
    parse_scenario_config("[link]\nT = not_a_number\n");
    FAIL("expected config_error");
  } catch (const config_error& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_scenario_config("[link\nT = 1\n"), config_error);
  CHECK_THROWS_AS(parse_scenario_config("[link]\nwhatever = 1\n"), config_error);  // unknown key
  CHECK_THROWS_AS(parse_scenario_config("[link]\nT = 1\nT = 2\n"), config_error);  // duplicate
  CHECK_THROWS_AS(parse_scenario_config("[mc]\nquadrature = yes\n"), config_error);
  CHECK_THROWS_AS(parse_scenario_config("[model1]\nkind = \"cubic\"\n"), config_error);
}

TEST_CASE("validation rejects out-of-range scenarios") {
  CHECK_THROWS_AS(parse_scenario_config("[sweep]\npoints = 1\n"), config_error);
  CHECK_THROWS_AS(parse_scenario_config("[sweep]\nlambda_min = 1e9\nlambda_max = 1e8\n"),
                  config_error);
  CHECK_THROWS_AS(parse_scenario_config("[mc]\nsamples = 100\n"), config_error);
  CHECK_THROWS_AS(parse_scenario_config("[link]\nsigma2 = -1\n"), config_error);
  CHECK_THROWS_AS(parse_scenario_config("[point]\nenergy_budget = 0\n"), config_error);
}

TEST_CASE("format_double is shortest round-trip") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-10) == "1e-10");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
  const double v = 7.5742008823272151e-3;
  CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("csv builder layout") {
  CsvBuilder csv;
  csv.comment("hello");
  csv.raw_line("a,b");
  csv.row(1.5, 2.5);
  csv.row("x", 0.25);
  CHECK(csv.str() == "# hello\na,b\n1.5,2.5\nx,0.25\n");
}

TEST_CASE("experiments are deterministic and carry provenance") {
  ScenarioConfig cfg;
  cfg.samples = 2000;
  cfg.sweep_points = 6;
  cfg.seed = 4242;

  const EnergySweep a = run_energy_sweep(cfg);
  const EnergySweep b = run_energy_sweep(cfg);
  CHECK(a.csv == b.csv);

  ScenarioConfig one = cfg, eight = cfg;
  one.workers = 1;
  eight.workers = 8;
  CHECK(run_energy_sweep(one).csv == run_energy_sweep(eight).csv);
  CHECK(run_free_slot_sweep(one).csv == run_free_slot_sweep(eight).csv);

  CHECK(a.csv.find("# mc.seed = 4242") != std::string::npos);
  CHECK(a.csv.find("# model1 = outage a=0.9") != std::string::npos);
  CHECK(a.csv.find("lambda,energy_J,stderr") != std::string::npos);

  // different seed, different bytes
  ScenarioConfig other = cfg;
  other.seed = 4243;
  CHECK(run_energy_sweep(other).csv != a.csv);
}

TEST_CASE("free-slot sweep embeds its bound and monotonicity checks") {
  ScenarioConfig cfg;
  cfg.samples = 2000;
  cfg.sweep_points = 8;
  const FreeSlotSweep s = run_free_slot_sweep(cfg);
  CHECK(s.bound_below_exact);
  CHECK(s.monotone);
  CHECK(s.csv.find("# check bound_below_exact = PASS") != std::string::npos);
  // default sweep spans the whole S-curve
  CHECK(s.p_exact.front() < 0.1);
  CHECK(s.p_bound.front() < 0.1);
  CHECK(s.p_exact.back() > 0.9);
  CHECK(s.p_bound.back() > 0.9);
}

TEST_CASE("utility traces rise at most once, then fall to an exact zero tail") {
  ScenarioConfig cfg;
  cfg.samples = 2000;
  cfg.sweep_points = 8;
  const UtilitySweep s = run_utility_comparison(cfg);
  auto unimodal_then_zero = [](const std::vector<double>& u, const std::vector<double>& se) {
    std::size_t peak = 0;
    for (std::size_t i = 1; i < u.size(); ++i)
      if (u[i] > u[peak]) peak = i;
    for (std::size_t i = peak + 1; i < u.size(); ++i)
      if (u[i] > u[i - 1] + 3.0 * (se[i] + se[i - 1])) return false;
    return u.back() == 0.0;
  };
  CHECK(unimodal_then_zero(s.u_orth_primary, s.se_orth_primary));
  CHECK(unimodal_then_zero(s.u_orth_secondary, s.se_orth_secondary));
  CHECK(unimodal_then_zero(s.u_leader, s.se_leader));
  CHECK(unimodal_then_zero(s.u_follower, s.se_follower));
  // the orthogonal secondary peaks strictly inside the sweep: the free-slot
  // fraction rises while the per-slot utility falls
  std::size_t peak = 0;
  for (std::size_t i = 1; i < s.u_orth_secondary.size(); ++i)
    if (s.u_orth_secondary[i] > s.u_orth_secondary[peak]) peak = i;
  CHECK(peak > 0);
  CHECK(peak + 1 < s.u_orth_secondary.size());
}

TEST_CASE("calibration run requires a budget") {
  ScenarioConfig cfg;
  cfg.samples = 2000;
  CHECK_THROWS_AS(run_calibration(cfg), config_error);
  cfg.energy_budget = 2e-6;
  const CalibrationRun run = run_calibration(cfg);
  CHECK(run.result.lambda > 0.0);
  CHECK(run.csv.find("lambda,energy_J,stderr") != std::string::npos);
}

TEST_CASE("power profile csv is long-format") {
  ScenarioConfig cfg;
  cfg.profile_g11_points = 4;
  cfg.profile_g22_points = 3;
  const PowerProfileRun run = run_power_profile(cfg);
  CHECK(run.profile.p1_star.size() == 12);
  CHECK(run.csv.find("g11,g22,p1_star") != std::string::npos);
  // 12 data rows plus comments plus header line
  std::size_t rows = 0;
  for (char ch : run.csv)
    if (ch == '\n') ++rows;
  CHECK(rows >= 13);
}
