// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#include "eepc/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "eepc/csv.hpp"
#include "eepc/parallel.hpp"

namespace eepc::oracle {

PolicySolution policy_scan(const EfficiencyModel& model, double rate, double slot_T,
                           double lambda, double sigma2_eff, double gain, double x_hi,
                           std::size_t points) {
  auto priced = [&](double x) {
    return priced_contribution(model, rate, slot_T, lambda, sigma2_eff, gain, x);
  };
  const MaximizeResult best = dense_max(priced, 0.0, x_hi, points);
  if (!(best.value > 0) || !(best.x > 0)) return PolicySolution{};
  return PolicySolution{best.x, (sigma2_eff / gain) * best.x, true, best.value};
}

double leader_power_scan(const EfficiencyModel& model1, const EfficiencyModel& model2,
                         const LinkParams& params1, const LinkParams& params2,
                         const GainRealization& real, std::size_t points) {
  // Priced leader objective through the raw SINR definition, with the
  // follower best-responding at every candidate power.
  auto objective = [&](double p1) {
    const PolicySolution br = follower_best_response(model2, params2, real, p1);
    const double interference = br.transmitting ? br.power * real.g21 : 0.0;
    const double gamma1 = p1 * real.g11 / (params1.sigma2 + interference);
    return params1.R * model1.eval(gamma1) / p1 - params1.lambda * params1.T * p1;
  };
  const double p_ref = (params1.sigma2 / real.g11) * model1.zero_price_snr();
  const MaximizeResult best = dense_max_log(objective, 1e-8 * p_ref, 1e7 * p_ref, points);
  return best.value > 0 ? best.x : 0.0;
}

namespace {

struct DevTracker {
  std::vector<double> devs;
  explicit DevTracker(std::size_t n) : devs(n, 0.0) {}
  double max() const {
    double m = 0;
    for (double d : devs)
      if (d > m) m = d;
    return m;
  }
};

double rel_dev(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

GainRealization draw_realization(const ScenarioConfig& cfg, std::uint64_t stream_base,
                                 std::uint64_t index) {
  return GainRealization{sample(cfg.dist11(), SampleStream{cfg.seed, stream_base + 0}, index),
                         sample(cfg.dist12(), SampleStream{cfg.seed, stream_base + 1}, index),
                         sample(cfg.dist21(), SampleStream{cfg.seed, stream_base + 2}, index),
                         sample(cfg.dist22(), SampleStream{cfg.seed, stream_base + 3}, index)};
}

CheckReport efficiency_fd_check(double tol_scale) {
  const EfficiencyModel models[] = {EfficiencyModel::outage(0.9), EfficiencyModel::empirical(2),
                                    EfficiencyModel::empirical(3)};
  const double h = 1e-6;
  std::size_t checks = 0;
  double max_dev = 0;
  for (const auto& model : models) {
    for (int i = 0; i <= 80; ++i) {
      const double x = 1e-3 * std::pow(1e4, i / 80.0);  // log grid on [1e-3, 10]
      const double fd1 = central_diff([&](double t) { return model.eval(t); }, x, h);
      const double fd2 = central_diff([&](double t) { return model.deriv1(t); }, x, h);
      const double d1 = model.deriv1(x);
      const double d2 = model.deriv2(x);
      max_dev = std::max(max_dev, std::abs(d1 - fd1) / (1.0 + std::abs(d1)));
      max_dev = std::max(max_dev, std::abs(d2 - fd2) / (1.0 + std::abs(d2)));
      checks += 2;
    }
  }
  const double tol = 1e-5 * tol_scale;
  return CheckReport{"efficiency.deriv_vs_fd", checks, max_dev, tol, max_dev <= tol};
}

CheckReport efficiency_maxf2_check(double tol_scale) {
  const EfficiencyModel models[] = {EfficiencyModel::outage(0.9), EfficiencyModel::outage(2.0),
                                    EfficiencyModel::empirical(3)};
  double max_dev = 0;
  std::size_t checks = 0;
  for (const auto& model : models) {
    const double x0 = model.inflection();
    const MaximizeResult scan =
        dense_max([&](double t) { return model.deriv2(t); }, x0 * 1e-6, x0, 1000000);
    max_dev = std::max(max_dev, rel_dev(model.max_f2(), scan.value));
    ++checks;
  }
  const double tol = 1e-6 * tol_scale;
  return CheckReport{"efficiency.max_f2_vs_scan", checks, max_dev, tol, max_dev <= tol};
}

CheckReport efficiency_inflection_check(double tol_scale) {
  const EfficiencyModel models[] = {EfficiencyModel::outage(0.9), EfficiencyModel::outage(2.0),
                                    EfficiencyModel::empirical(2), EfficiencyModel::empirical(3)};
  double max_dev = 0;
  std::size_t checks = 0;
  for (const auto& model : models) {
    const double x0 = model.inflection();
    const auto zeros =
        zeros_log_scan([&](double t) { return model.deriv2(t); }, x0 * 1e-2, x0 * 1e2, 100000);
    double best = 1.0;
    for (double z : zeros) best = std::min(best, std::abs(z - x0) / x0);
    max_dev = std::max(max_dev, zeros.empty() ? 1.0 : best);
    ++checks;
  }
  const double tol = 1e-8 * tol_scale;
  return CheckReport{"efficiency.inflection_vs_scan", checks, max_dev, tol, max_dev <= tol};
}

CheckReport solvers_maximize_check(double tol_scale) {
  struct Case {
    double (*fn)(double);
    double lo, hi;
  };
  const Case cases[] = {
      {+[](double x) { return -(x - 3.0) * (x - 3.0); }, 0.0, 10.0},
      {+[](double x) { return std::sin(x); }, 0.0, std::numbers::pi},
      {+[](double x) { return std::sin(5.0 * x); }, 0.0, 2.0},
      {+[](double x) { return std::cos(3.0 * x) + 0.5 * std::sin(x); }, 0.0, 6.0},
  };
  double max_dev = 0;
  std::size_t checks = 0;
  for (const auto& c : cases) {
    const MaximizeResult got = maximize_scalar(c.fn, c.lo, c.hi, 1e-12);
    const MaximizeResult want = dense_max(c.fn, c.lo, c.hi, 1000000);
    max_dev = std::max(max_dev, std::abs(got.value - want.value) / (1.0 + std::abs(want.value)));
    max_dev = std::max(max_dev, std::abs(got.x - want.x) / (c.hi - c.lo));
    checks += 2;
  }
  const double tol = 1e-6 * tol_scale;
  return CheckReport{"solvers.maximize_vs_scan", checks, max_dev, tol, max_dev <= tol};
}

CheckReport solvers_zeros_check(const ScenarioConfig& cfg, double tol_scale) {
  const std::size_t n = 100;
  const SampleStream kind_stream{cfg.seed, 900};
  const SampleStream a_stream{cfg.seed, 901};
  const SampleStream c_stream{cfg.seed, 902};
  DevTracker devs(n);
  parallel_for(
      n, cfg.workers,
      [&](std::size_t i) {
        const double uk = uniform01(kind_stream, i);
        const EfficiencyModel model =
            uk < 0.5
                ? EfficiencyModel::outage(0.3 + 2.7 * uniform01(a_stream, i))
                : EfficiencyModel::empirical(3 + static_cast<int>(3.0 * uniform01(a_stream, i)));
        const double c = (0.01 + 0.98 * uniform01(c_stream, i)) * 0.5 * model.max_f2();
        const ZeroStructure zs = greatest_zero(model, c);
        auto F = [&](double x) { return x * model.deriv1(x) - model.eval(x) - c * x * x; };
        const double x0 = model.inflection();
        const auto zeros = zeros_log_scan(F, x0 * 1e-4, x0 * 1e3, 300000);
        if (zs.kind == ZeroStructure::Case::NoPositiveZero) {
          devs.devs[i] = zeros.empty() ? 0.0 : 1.0;
          return;
        }
        if (zeros.empty()) {
          devs.devs[i] = 1.0;
          return;
        }
        double dev = std::abs(zeros.back() - zs.x2) / zs.x2;
        if (zs.x1 > 0) dev = std::max(dev, std::abs(zeros.front() - zs.x1) / zs.x1);
        devs.devs[i] = dev;
      },
      1);
  const double tol = 1e-6 * tol_scale;
  const double max_dev = devs.max();
  return CheckReport{"solvers.zeros_vs_scan", n, max_dev, tol, max_dev <= tol};
}

CheckReport leader_check(const ScenarioConfig& cfg, double tol_scale, std::size_t realizations,
                         std::size_t scan_points) {
  const EfficiencyModel model1 = cfg.model1.build();
  const EfficiencyModel model2 = cfg.model2.build();
  const LinkParams link1 = cfg.link1(cfg.lambda);
  const LinkParams link2 = cfg.link2(cfg.lambda2_ratio * cfg.lambda);
  DevTracker devs(realizations);
  parallel_for(
      realizations, cfg.workers,
      [&](std::size_t i) {
        const GainRealization r = draw_realization(cfg, 940, i);
        const StackelbergOutcome got = leader_equilibrium(model1, model2, link1, link2, r);
        const double want = leader_power_scan(model1, model2, link1, link2, r, scan_points);
        if ((got.p1 > 0) != (want > 0)) {
          devs.devs[i] = 1.0;
        } else if (got.p1 > 0) {
          devs.devs[i] = std::abs(got.p1 - want) / want;
        }
      },
      1);
  const double tol = 1e-3 * tol_scale;
  const double max_dev = devs.max();
  return CheckReport{"stackelberg.leader_vs_scan", realizations, max_dev, tol, max_dev <= tol};
}

CheckReport quadrature_check(const ScenarioConfig& cfg, double tol_scale) {
  const GainDistribution dist = cfg.dist11();
  const double m = dist.mean;
  McConfig mc = cfg.mc();
  mc.samples = 1000000;
  mc.mode = McConfig::Mode::MonteCarlo;
  McConfig quad = mc;
  quad.mode = McConfig::Mode::Quadrature;

  struct Case {
    const char* name;
    std::function<double(double)> fn;
  };
  const std::vector<Case> cases = {
      {"identity", [](double g) { return g; }},
      {"cdf_kernel", [m](double g) { return -std::expm1(-g / m); }},
      {"log_kernel", [m](double g) { return std::log1p(g / m); }},
  };
  double max_dev = 0;
  for (const auto& c : cases) {
    const Estimate e_mc = expect_1d(c.fn, dist, mc, 950);
    const Estimate e_q = expect_1d(c.fn, dist, quad, 950);
    const double allowed = 4.0 * e_mc.stderr_value;
    max_dev = std::max(max_dev, std::abs(e_mc.value - e_q.value) / allowed);
  }
  const double tol = 1.0 * tol_scale;
  return CheckReport{"channel.quadrature_vs_mc", cases.size(), max_dev, tol, max_dev <= tol};
}

CheckReport sample_mean_check(const ScenarioConfig& cfg, double tol_scale) {
  const GainDistribution dist = cfg.dist11();
  McConfig mc = cfg.mc();
  mc.samples = 1000000;
  mc.mode = McConfig::Mode::MonteCarlo;
  const Estimate e = expect_1d([](double g) { return g; }, dist, mc, 951);
  const double dev = std::abs(e.value / dist.mean - 1.0) / 0.005;
  const double tol = 1.0 * tol_scale;
  return CheckReport{"channel.sample_mean", 1, dev, tol, dev <= tol};
}

}  // namespace

CheckReport check_single_user_policy(const ScenarioConfig& cfg, std::size_t pairs,
                                     std::size_t scan_points, double tol_scale) {
  const EfficiencyModel model = cfg.model1.build();
  const GainDistribution dist = cfg.dist11();
  const SampleStream g_stream{cfg.seed, 910};
  const SampleStream l_stream{cfg.seed, 911};
  DevTracker devs(pairs);
  parallel_for(
      pairs, cfg.workers,
      [&](std::size_t i) {
        const double g = sample(dist, g_stream, i);
        const double lam = std::pow(10.0, 8.0 + 5.0 * uniform01(l_stream, i));
        const LinkParams link = cfg.link1(lam);
        const PolicySolution got = optimal_snr(model, link, g);
        const PolicySolution want =
            policy_scan(model, link.R, link.T, link.lambda, link.sigma2, g, 100.0, scan_points);
        if (got.transmitting != want.transmitting) {
          devs.devs[i] = 1.0;
        } else if (got.transmitting) {
          devs.devs[i] = std::abs(got.snr_target - want.snr_target) / want.snr_target;
        }
      },
      1);
  const double tol = 1e-4 * tol_scale;
  const double max_dev = devs.max();
  return CheckReport{"single_user.policy_vs_scan", pairs, max_dev, tol, max_dev <= tol};
}

CheckReport check_follower_br(const ScenarioConfig& cfg, std::size_t pairs,
                              std::size_t scan_points, double tol_scale) {
  const EfficiencyModel model2 = cfg.model2.build();
  const SampleStream p_stream{cfg.seed, 920};
  DevTracker devs(pairs);
  parallel_for(
      pairs, cfg.workers,
      [&](std::size_t i) {
        const GainRealization r = draw_realization(cfg, 921, i);
        const double p1 = std::pow(10.0, -6.0 + 5.0 * uniform01(p_stream, i));
        const LinkParams link2 = cfg.link2(cfg.lambda2_ratio * cfg.lambda);
        const PolicySolution got = follower_best_response(model2, link2, r, p1);
        const double sigma2_eff = link2.sigma2 + p1 * r.g12;
        const PolicySolution want = policy_scan(model2, link2.R, link2.T, link2.lambda,
                                                sigma2_eff, r.g22, 100.0, scan_points);
        if (got.transmitting != want.transmitting) {
          devs.devs[i] = 1.0;
        } else if (got.transmitting) {
          devs.devs[i] = std::abs(got.snr_target - want.snr_target) / want.snr_target;
        }
      },
      1);
  const double tol = 1e-4 * tol_scale;
  const double max_dev = devs.max();
  return CheckReport{"stackelberg.follower_br_vs_scan", pairs, max_dev, tol, max_dev <= tol};
}

CheckReport check_br_derivative(const ScenarioConfig& cfg, double tol_scale) {
  const EfficiencyModel model2 = cfg.model2.build();
  const LinkParams link2 = cfg.link2(cfg.lambda2_ratio * cfg.lambda);
  const SampleStream p_stream{cfg.seed, 930};
  // The finite difference at step 1e-6 p1 resolves only if x2 is solved to
  // machine precision, and p1 must be large enough that the step is not
  // drowned by the last bits of x2.
  SolverConfig tight;
  tight.rel_tol = 1e-15;
  const std::size_t n = 100;
  double max_dev = 0;
  std::size_t checks = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const GainRealization r = draw_realization(cfg, 931, i);
    const double p1 = std::pow(10.0, -5.0 + 4.0 * uniform01(p_stream, i));
    const double h = 1e-6 * p1;
    auto x2_at = [&](double p) {
      const PolicySolution br = follower_best_response(model2, link2, r, p, tight);
      return br.transmitting ? br.snr_target : -1.0;
    };
    const double xm = x2_at(p1 - h), xp = x2_at(p1 + h), xc = x2_at(p1);
    if (xm <= 0 || xp <= 0 || xc <= 0) continue;  // silent or boundary: skip
    const double fd = (xp - xm) / (2.0 * h);
    const double closed = follower_br_derivative(model2, link2, r, p1, tight);
    max_dev = std::max(max_dev, std::abs(closed - fd) / (1.0 + std::abs(closed)));
    ++checks;
  }
  const double tol = 1e-4 * tol_scale;
  return CheckReport{"stackelberg.br_derivative_vs_fd", checks, max_dev, tol, max_dev <= tol};
}

std::vector<CheckReport> run_oracle_suite(const ScenarioConfig& cfg, double tol_scale) {
  std::vector<CheckReport> reports;
  reports.push_back(efficiency_fd_check(tol_scale));
  reports.push_back(efficiency_maxf2_check(tol_scale));
  reports.push_back(efficiency_inflection_check(tol_scale));
  reports.push_back(solvers_maximize_check(tol_scale));
  reports.push_back(solvers_zeros_check(cfg, tol_scale));
  reports.push_back(check_single_user_policy(cfg, 100, 1000000, tol_scale));
  reports.push_back(check_follower_br(cfg, 100, 1000000, tol_scale));
  reports.push_back(check_br_derivative(cfg, tol_scale));
  reports.push_back(leader_check(cfg, tol_scale, 5, 10000));
  reports.push_back(quadrature_check(cfg, tol_scale));
  reports.push_back(sample_mean_check(cfg, tol_scale));
  return reports;
}

std::string format_reports(const std::vector<CheckReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += "[oracle] " + r.name + ": checks=" + std::to_string(r.checks) +
           " max_rel_dev=" + format_double(r.max_rel_dev) + " tol=" + format_double(r.tol) +
           (r.pass ? " PASS" : " FAIL") + "\n";
  }
  return out;
}

bool all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

}  // namespace eepc::oracle
