// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#pragma once

#include <string>
#include <vector>

#include "eepc/config.hpp"
#include "eepc/stackelberg.hpp"

namespace eepc {

std::vector<double> log_spaced(double lo, double hi, int points);

/// Expected per-slot energy against the energy price (single-user link 11).
/// Gain draws are shared across sweep points, so the energy column is
/// exactly non-increasing, not just within Monte Carlo noise.
struct EnergySweep {
  std::vector<double> lambda, energy, energy_stderr;
  std::string csv;
  bool nonincreasing = false;
  bool zero_tail = false;  // the last sweep point spends exactly no energy
};
EnergySweep run_energy_sweep(const ScenarioConfig& cfg);

/// Exact free-slot probability (Monte Carlo) against its closed-form lower
/// bound, per energy price.
struct FreeSlotSweep {
  std::vector<double> lambda, p_exact, p_exact_stderr, p_bound;
  std::string csv;
  bool bound_below_exact = false;
  bool monotone = false;
};
FreeSlotSweep run_free_slot_sweep(const ScenarioConfig& cfg);

/// Orthogonal-case and Stackelberg expected utilities per energy price,
/// with the qualitative ordering checks embedded.
struct UtilitySweep {
  std::vector<double> lambda;
  std::vector<double> u_orth_primary, se_orth_primary;
  std::vector<double> u_orth_secondary, se_orth_secondary;
  std::vector<double> u_leader, se_leader;
  std::vector<double> u_follower, se_follower;
  std::string csv;
  bool ordering_ok = false;
  bool zero_tail = false;
};
UtilitySweep run_utility_comparison(const ScenarioConfig& cfg);

/// Leader equilibrium power over the (g11, g22) grid, cross gains fixed at
/// their means, emitted in long format.
struct PowerProfileRun {
  PowerProfile profile;
  std::string csv;
};
PowerProfileRun run_power_profile(const ScenarioConfig& cfg);

/// Energy-budget calibration of the price multiplier.
struct CalibrationRun {
  CalibrationResult result;
  std::string csv;
};
CalibrationRun run_calibration(const ScenarioConfig& cfg);

}  // namespace eepc
