// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "eepc/csv.hpp"
#include "eepc/errors.hpp"
#include "eepc/experiments.hpp"
#include "eepc/oracles.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitToleranceBreach = 1;
constexpr int kExitConfigError = 2;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("failed writing output file '" + path + "'");
}

struct CommonFlags {
  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  int workers = -1;
  int points = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "scenario file (defaults reproduce the paper-style setting)");
    cmd->add_option("--out", out_path, "output CSV path");
    cmd->add_option("--seed", seed, "override mc.seed");
    cmd->add_option("--samples", samples, "override mc.samples");
    cmd->add_option("--workers", workers, "override mc.workers (0 = auto)");
    cmd->add_option("--points", points, "override sweep.points");
    seed_opt = cmd->get_option("--seed");
    samples_opt = cmd->get_option("--samples");
    workers_opt = cmd->get_option("--workers");
    points_opt = cmd->get_option("--points");
  }

  eepc::ScenarioConfig load() const {
    eepc::ScenarioConfig cfg;
    if (!config_path.empty()) cfg = eepc::load_scenario_config(config_path);
    if (seed_opt->count() > 0) cfg.seed = seed;
    if (samples_opt->count() > 0) cfg.samples = samples;
    if (workers_opt->count() > 0) cfg.workers = workers;
    if (points_opt->count() > 0) cfg.sweep_points = points;
    if (!out_path.empty()) cfg.output_path = out_path;
    cfg.validate();
    return cfg;
  }

  CLI::Option* seed_opt = nullptr;
  CLI::Option* samples_opt = nullptr;
  CLI::Option* workers_opt = nullptr;
  CLI::Option* points_opt = nullptr;
};

std::string out_or_default(const eepc::ScenarioConfig& cfg, const std::string& fallback) {
  return cfg.output_path.empty() ? fallback : cfg.output_path;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eepc: energy-efficiency-optimal power control under a long-term energy budget"};
  app.require_subcommand(1);

  CommonFlags energy_flags, free_flags, util_flags, profile_flags, cal_flags, oracle_flags;
  double tolerance_scale = 1.0;

  CLI::App* energy = app.add_subcommand("energy-sweep", "expected per-slot energy vs lambda");
  energy_flags.attach(energy);
  CLI::App* free_slot = app.add_subcommand("free-slot", "free-slot probability vs lambda, with its lower bound");
  free_flags.attach(free_slot);
  CLI::App* utilities = app.add_subcommand("utilities", "orthogonal vs Stackelberg expected utilities vs lambda");
  util_flags.attach(utilities);
  CLI::App* profile = app.add_subcommand("power-profile", "leader equilibrium power over a (g11, g22) grid");
  profile_flags.attach(profile);
  CLI::App* calibrate = app.add_subcommand("calibrate", "solve lambda for a given energy budget");
  cal_flags.attach(calibrate);
  CLI::App* oracle = app.add_subcommand("oracle-suite", "run all brute-force cross-checks");
  oracle_flags.attach(oracle);
  oracle->add_option("--tolerance-scale", tolerance_scale,
                     "scale factor applied to every oracle tolerance (testing hook)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    if (energy->parsed()) {
      const auto cfg = energy_flags.load();
      const auto sweep = eepc::run_energy_sweep(cfg);
      write_file(out_or_default(cfg, "energy_sweep.csv"), sweep.csv);
      std::cout << "energy-sweep: " << sweep.lambda.size() << " points, nonincreasing="
                << (sweep.nonincreasing ? "PASS" : "FAIL")
                << ", zero_tail=" << (sweep.zero_tail ? "PASS" : "FAIL") << "\n";
      return kExitOk;
    }
    if (free_slot->parsed()) {
      const auto cfg = free_flags.load();
      const auto sweep = eepc::run_free_slot_sweep(cfg);
      write_file(out_or_default(cfg, "free_slot.csv"), sweep.csv);
      std::cout << "free-slot: " << sweep.lambda.size() << " points, bound_below_exact="
                << (sweep.bound_below_exact ? "PASS" : "FAIL")
                << ", monotone=" << (sweep.monotone ? "PASS" : "FAIL") << "\n";
      return sweep.bound_below_exact ? kExitOk : kExitToleranceBreach;
    }
    if (utilities->parsed()) {
      const auto cfg = util_flags.load();
      const auto sweep = eepc::run_utility_comparison(cfg);
      write_file(out_or_default(cfg, "utilities.csv"), sweep.csv);
      std::cout << "utilities: " << sweep.lambda.size() << " points, ordering="
                << (sweep.ordering_ok ? "PASS" : "FAIL")
                << ", zero_tail=" << (sweep.zero_tail ? "PASS" : "FAIL") << "\n";
      return sweep.ordering_ok ? kExitOk : kExitToleranceBreach;
    }
    if (profile->parsed()) {
      const auto cfg = profile_flags.load();
      const auto run = eepc::run_power_profile(cfg);
      write_file(out_or_default(cfg, "power_profile.csv"), run.csv);
      std::cout << "power-profile: " << run.profile.g11.size() << "x" << run.profile.g22.size()
                << " grid\n";
      return kExitOk;
    }
    if (calibrate->parsed()) {
      const auto cfg = cal_flags.load();
      const auto run = eepc::run_calibration(cfg);
      write_file(out_or_default(cfg, "calibrate.csv"), run.csv);
      std::cout << "calibrate: lambda = " << eepc::format_double(run.result.lambda)
                << ", energy = " << eepc::format_double(run.result.energy) << " J";
      if (run.result.saturated_low) std::cout << " (saturated at lambda_min)";
      if (run.result.saturated_high) std::cout << " (saturated at lambda_max)";
      std::cout << "\n";
      return kExitOk;
    }
    if (oracle->parsed()) {
      const auto cfg = oracle_flags.load();
      const auto reports = eepc::oracle::run_oracle_suite(cfg, tolerance_scale);
      std::cout << eepc::oracle::format_reports(reports);
      return eepc::oracle::all_pass(reports) ? kExitOk : kExitToleranceBreach;
    }
  } catch (const eepc::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitToleranceBreach;
  }
  return kExitConfigError;
}
