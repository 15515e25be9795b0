// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#pragma once

#include <optional>

#include "eepc/channel.hpp"
#include "eepc/efficiency.hpp"
#include "eepc/solvers.hpp"

namespace eepc {

/// Per-transmitter constants.
struct LinkParams {
  double R = 1e4;        // transmission rate, bits/s
  double T = 1e-3;       // time-slot duration, s
  double sigma2 = 1e-12; // receiver noise power, W
  double lambda = 0;     // energy price, bits/J^2
  std::optional<double> energy_budget;  // J, used only by calibration
};

/// Per-realization operating point of one link.
struct PolicySolution {
  double snr_target = 0;      // target SNR/SINR at the receiver
  double power = 0;           // W
  bool transmitting = false;
  double objective_value = 0; // energy-priced utility contribution, >= 0
};

/// Energy-priced per-realization objective of transmitting at target SNR x
/// through effective noise sigma2_eff: R g f(x) / (sigma2_eff x) minus
/// lambda T times the power (sigma2_eff / g) x.
double priced_contribution(const EfficiencyModel& model, double rate, double slot_T,
                           double lambda, double sigma2_eff, double gain, double x);

/// Optimal target SNR through effective noise sigma2_eff (the follower's
/// best response reuses this with sigma2_eff = sigma2 + p1 g12).
PolicySolution optimal_snr_with_noise(const EfficiencyModel& model, double rate, double slot_T,
                                      double lambda, double sigma2_eff, double gain,
                                      const SolverConfig& cfg = {});

/// Per-realization optimal SNR and power for one interference-free link:
/// the greater zero of x f'(x) - f(x) = c x^2 with c = lambda T sigma^4 /
/// (R g^2), transmitted only if it beats silence; ties go to silence.
PolicySolution optimal_snr(const EfficiencyModel& model, const LinkParams& params, double gain,
                           const SolverConfig& cfg = {});

/// Closed-form special case: SNR* = g / (lambda sigma^2) - 1, clamped at 0.
PolicySolution shannon_optimal_snr(const LinkParams& params, double gain);

/// Kind dispatch: Shannon models go through the closed form, the rest
/// through the optimality equation.
PolicySolution solve_policy(const EfficiencyModel& model, const LinkParams& params, double gain,
                            const SolverConfig& cfg = {});

/// Expected per-slot energy T * E[p*(g)], J.
Estimate expected_energy(const EfficiencyModel& model, const LinkParams& params,
                         const GainDistribution& dist, const McConfig& mc,
                         const SolverConfig& cfg = {}, std::uint64_t stream_id = 0);

/// Long-term energy efficiency E[R f(SNR*) / p*], bits/J; silent slots
/// contribute 0. Shannon mode uses the rate integrand R ln(g/(lambda s2)).
Estimate expected_utility(const EfficiencyModel& model, const LinkParams& params,
                          const GainDistribution& dist, const McConfig& mc,
                          const SolverConfig& cfg = {}, std::uint64_t stream_id = 0);

/// Fraction of slots left unused by the optimal policy.
Estimate free_slot_probability(const EfficiencyModel& model, const LinkParams& params,
                               const GainDistribution& dist, const McConfig& mc,
                               const SolverConfig& cfg = {}, std::uint64_t stream_id = 0);

/// Exact closed form for the Shannon special case: 1 - exp(-lambda sigma^2 / mean).
double shannon_free_slot_probability(const LinkParams& params, const GainDistribution& dist);

struct BoundResult {
  double value = 0;
  // Set for models without an interior f'' maximum (Empirical M = 1), where
  // the optimality equation has no positive root for any gain and the bound
  // degenerates to the exact value 1.
  bool degenerate_model = false;
};

/// Lower bound on the free-slot probability: Pr[g <= g_th] with
/// g_th = sigma^2 sqrt(2 lambda T / (R sup f'')).
BoundResult free_slot_lower_bound(const EfficiencyModel& model, const LinkParams& params,
                                  const GainDistribution& dist);

struct CalibrationResult {
  double lambda = 0;
  double energy = 0;         // expected energy at the returned lambda
  double energy_stderr = 0;
  bool saturated_low = false;   // budget above the energy spent at lambda_min
  bool saturated_high = false;  // budget below the energy spent at lambda_max
};

/// Finds lambda with expected_energy(lambda) = params.energy_budget by
/// bisection on ln(lambda), using the monotone non-increase of energy in
/// lambda. Draws are shared across iterations, so the solved function is
/// deterministic in the seed.
CalibrationResult calibrate_lambda(const EfficiencyModel& model, const LinkParams& params,
                                   const GainDistribution& dist, const McConfig& mc,
                                   const SolverConfig& cfg = {}, double lambda_min = 1.0,
                                   double lambda_max = 1e16, std::uint64_t stream_id = 0);

}  // namespace eepc
