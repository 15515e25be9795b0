// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "eepc/channel.hpp"
#include "eepc/single_user.hpp"

namespace eepc {

/// One draw of the four link power gains.
struct GainRealization {
  double g11 = 0, g12 = 0, g21 = 0, g22 = 0;
  double alpha() const { return g21 * g12 / (g11 * g22); }
};

struct PowerPair {
  double p1 = 0, p2 = 0;
};

/// Inverts the two SINR definitions for the power pair. Infeasible (nullopt)
/// when 1 - alpha gamma1 gamma2 <= 1e-12: the powers would be infinite or
/// negative.
std::optional<PowerPair> powers_from_sinrs(const GainRealization& real, double sigma2,
                                           double gamma1, double gamma2);

/// Follower's best response to leader power p1: the single-user solution
/// with effective noise sigma^2 + p1 g12 on gain g22. power is p2*(p1).
PolicySolution follower_best_response(const EfficiencyModel& model2, const LinkParams& params2,
                                      const GainRealization& real, double p1,
                                      const SolverConfig& cfg = {});

/// Closed-form derivative of the follower's target SINR x2 with respect to
/// p1, valid while the follower transmits. Throws precondition_error when
/// the follower is silent at p1.
double follower_br_derivative(const EfficiencyModel& model2, const LinkParams& params2,
                              const GainRealization& real, double p1,
                              const SolverConfig& cfg = {});

/// Equilibrium operating point of one realization.
struct StackelbergOutcome {
  double p1 = 0, p2 = 0;          // W
  double gamma1 = 0, gamma2 = 0;  // SINRs at the equilibrium
  bool leader_transmitting = false;
  bool follower_transmitting = false;
  bool feasible = true;           // 1 - alpha gamma1 gamma2 > 0
  double u1_contrib = 0;          // R1 f(gamma1) / p1, bits/J (0 if silent)
  double u2_contrib = 0;          // R2 f(gamma2) / p2, bits/J (0 if silent)
  double leader_objective = 0;    // priced leader contribution at p1*
  // True when p1* is an interior optimum (not pinned at the follower's
  // silence threshold or the search cap); the stationarity equation only
  // applies there.
  bool interior_optimum = false;
  // Relative residual of the leader stationarity equation, evaluated when
  // both links transmit at an interior optimum; -1 when not applicable.
  double stationarity_residual = -1;
  bool cap_expanded = false;      // leader search had to grow its power cap
};

/// Relative residual of the leader stationarity equation at SINR x and
/// follower target x2 (0 when the follower is silent).
double leader_equation_residual(const EfficiencyModel& model1, const EfficiencyModel& model2,
                                const LinkParams& params1, const LinkParams& params2,
                                const GainRealization& real, double x, double x2);

/// Leader-optimal point given the follower's best-response map: maximizes
/// the leader's priced contribution R1 f(gamma1(p1)) / p1 - lambda1 T p1
/// over p1 >= 0, with the follower re-solving at every candidate. The
/// search splits at the follower's silence threshold (the objective jumps
/// there) and compares both branch optima against silence.
StackelbergOutcome leader_equilibrium(const EfficiencyModel& model1,
                                      const EfficiencyModel& model2, const LinkParams& params1,
                                      const LinkParams& params2, const GainRealization& real,
                                      const SolverConfig& cfg = {});

struct UtilityEstimates {
  Estimate leader;
  Estimate follower;
};

/// Expected equilibrium utilities over the four independent gains.
UtilityEstimates equilibrium_expected_utilities(const EfficiencyModel& model1,
                                                const EfficiencyModel& model2,
                                                const LinkParams& params1,
                                                const LinkParams& params2,
                                                const std::array<GainDistribution, 4>& dists,
                                                const McConfig& mc, const SolverConfig& cfg = {},
                                                std::uint64_t stream_base = 0);

struct OrthogonalUtilities {
  Estimate primary;        // single-user utility of the primary link
  Estimate free_prob;      // primary free-slot probability
  Estimate secondary_own;  // secondary's single-user utility on its own link
  double secondary = 0;    // free_prob * secondary_own
  double secondary_stderr = 0;
};

/// Zero-interference benchmark: the primary plays its single-user policy;
/// the secondary transmits only in free slots, interference-free.
OrthogonalUtilities orthogonal_case_utilities(const EfficiencyModel& model1,
                                              const EfficiencyModel& model2,
                                              const LinkParams& params1,
                                              const LinkParams& params2,
                                              const GainDistribution& dist11,
                                              const GainDistribution& dist22, const McConfig& mc,
                                              const SolverConfig& cfg = {});

struct PowerProfile {
  std::vector<double> g11;  // grid values
  std::vector<double> g22;  // grid values
  // p1_star[i * g22.size() + j] is the leader power at (g11[i], g22[j]).
  std::vector<double> p1_star;
};

struct GridSpec {
  double lo = 0, hi = 0;
  int points = 0;
};

/// Leader equilibrium power over a log grid of (g11, g22) with the cross
/// gains pinned (typically at their means).
PowerProfile leader_power_profile(const EfficiencyModel& model1, const EfficiencyModel& model2,
                                  const LinkParams& params1, const LinkParams& params2,
                                  const GridSpec& g11_grid, const GridSpec& g22_grid,
                                  double g12_fixed, double g21_fixed,
                                  const SolverConfig& cfg = {}, int workers = 0);

}  // namespace eepc
