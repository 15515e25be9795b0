// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "eepc/channel.hpp"
#include "eepc/efficiency.hpp"
#include "eepc/single_user.hpp"

namespace eepc {

struct ModelSpec {
  EfficiencyKind kind = EfficiencyKind::Outage;
  double a = 0.9;
  int m = 2;

  EfficiencyModel build() const;
  std::string describe() const;
};

/// Full experiment scenario. Defaults reproduce the reference setting:
/// T = 1 ms, R = 10^4 bits/s, sigma^2 = 10^-12 W, direct gain means 10^-10,
/// cross gain means 10^-12, outage efficiency with a = 0.9.
struct ScenarioConfig {
  ModelSpec model1;
  ModelSpec model2;

  double T = 1e-3;
  double R1 = 1e4;
  double R2 = 1e4;
  double sigma2 = 1e-12;

  double g11_mean = 1e-10;
  double g22_mean = 1e-10;
  double g12_mean = 1e-12;
  double g21_mean = 1e-12;

  double lambda_min = 1e8;
  double lambda_max = 1e14;
  int sweep_points = 50;

  double lambda = 1e10;        // single-point experiments (power profile)
  double lambda2_ratio = 1.0;  // lambda2 = lambda2_ratio * lambda
  std::optional<double> energy_budget;

  std::size_t samples = 100000;
  std::uint64_t seed = 12345;
  int workers = 0;
  bool quadrature = false;

  double profile_g11_lo = 1e-12;
  double profile_g11_hi = 1e-8;
  int profile_g11_points = 50;
  double profile_g22_lo = 1e-12;
  double profile_g22_hi = 1e-8;
  int profile_g22_points = 50;

  std::string output_path;

  LinkParams link1(double lam) const;
  LinkParams link2(double lam) const;
  GainDistribution dist11() const { return GainDistribution::exponential_mean(g11_mean); }
  GainDistribution dist22() const { return GainDistribution::exponential_mean(g22_mean); }
  GainDistribution dist12() const { return GainDistribution::exponential_mean(g12_mean); }
  GainDistribution dist21() const { return GainDistribution::exponential_mean(g21_mean); }
  std::array<GainDistribution, 4> joint_dists() const {
    return {dist11(), dist12(), dist21(), dist22()};
  }
  McConfig mc() const;

  /// Throws config_error on out-of-range values.
  void validate() const;

  /// Key = value dump used for the CSV provenance header.
  std::string echo() const;
};

/// Parses the sectioned key-value scenario format. Unknown keys, malformed
/// lines and type mismatches raise config_error with the line number.
ScenarioConfig parse_scenario_config(const std::string& text);

/// Reads and parses a scenario file.
ScenarioConfig load_scenario_config(const std::string& path);

}  // namespace eepc
