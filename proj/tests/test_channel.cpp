// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eepc/channel.hpp"

using namespace eepc;

TEST_CASE("exponential cdf closed forms") {
  const GainDistribution unit = GainDistribution::exponential_mean(1.0);
  CHECK(unit.cdf(0.0) == 0.0);
  CHECK(unit.cdf(1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
  const GainDistribution tiny = GainDistribution::exponential_mean(1e-10);
  CHECK(tiny.cdf(1e-10) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
  CHECK_THROWS_AS(GainDistribution::exponential_mean(0.0), precondition_error);
}

TEST_CASE("quantile maps the u=0 boundary away from exact zero") {
  const GainDistribution d = GainDistribution::exponential_mean(2.0);
  CHECK(d.quantile(0.0) == 2.0 * 0x1p-53);
  CHECK(d.quantile(0.5) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(std::isfinite(d.quantile(1.0 - 0x1p-53)));
}

TEST_CASE("counter-based draws are pure functions of (seed, stream, index)") {
  const SampleStream a{42, 0}, b{42, 0}, c{42, 1}, d{43, 0};
  const GainDistribution dist = GainDistribution::exponential_mean(1.0);
  CHECK(sample(dist, a, 7) == sample(dist, b, 7));
  CHECK(sample(dist, a, 7) != sample(dist, c, 7));
  CHECK(sample(dist, a, 7) != sample(dist, d, 7));
  CHECK(sample(dist, a, 7) != sample(dist, a, 8));
  for (std::uint64_t i = 0; i < 100; ++i) {
    const double u = uniform01(a, i);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("law of large numbers: sample mean within half a percent") {
  const GainDistribution d = GainDistribution::exponential_mean(1e-10);
  McConfig mc;
  mc.samples = 1000000;
  mc.seed = 2024;
  const Estimate e = expect_1d([](double g) { return g; }, d, mc);
  CHECK(std::abs(e.value / 1e-10 - 1.0) < 0.005);
  CHECK(std::abs(e.value - 1e-10) < 3.0 * e.stderr_value);
}

TEST_CASE("indicator expectation reproduces the cdf within Monte Carlo error") {
  const GainDistribution d = GainDistribution::exponential_mean(1e-10);
  McConfig mc;
  mc.samples = 200000;
  const Estimate e =
      expect_1d([](double g) { return g <= 1e-10 ? 1.0 : 0.0; }, d, mc);
  const double want = 1.0 - std::exp(-1.0);
  CHECK(std::abs(e.value - want) < 3.0 * e.stderr_value);
}

TEST_CASE("constant integrand has zero standard error") {
  McConfig mc;
  mc.samples = 50000;
  const Estimate e =
      expect_1d([](double) { return 1.0; }, GainDistribution::exponential_mean(1.0), mc);
  CHECK(e.value == 1.0);
  CHECK(e.stderr_value == 0.0);
}

TEST_CASE("reproducibility: worker count cannot change a single bit") {
  const GainDistribution d = GainDistribution::exponential_mean(1e-10);
  McConfig one, eight;
  one.samples = eight.samples = 100000;
  one.seed = eight.seed = 99;
  one.workers = 1;
  eight.workers = 8;
  auto fn = [](double g) { return std::log1p(g / 1e-10) * std::sqrt(g); };
  const Estimate e1 = expect_1d(fn, d, one, 3);
  const Estimate e8 = expect_1d(fn, d, eight, 3);
  CHECK(e1.value == e8.value);
  CHECK(e1.stderr_value == e8.stderr_value);

  const std::array<GainDistribution, 4> dists = {d, d, d, d};
  auto jfn = [](double a, double b, double c, double e) { return a * e + b * c; };
  const Estimate j1 = expect_joint(jfn, dists, one);
  const Estimate j8 = expect_joint(jfn, dists, eight);
  CHECK(j1.value == j8.value);
  CHECK(j1.stderr_value == j8.stderr_value);
}

TEST_CASE("gauss-legendre table integrates polynomials to machine precision") {
  const auto table = gauss_legendre_unit(64);
  double w_sum = 0, u1 = 0, u2 = 0, u9 = 0;
  for (const auto& [u, w] : table) {
    w_sum += w;
    u1 += w * u;
    u2 += w * u * u;
    u9 += w * std::pow(u, 9);
  }
  CHECK(w_sum == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(u1 == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(u2 == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(u9 == doctest::Approx(0.1).epsilon(1e-13));
}

TEST_CASE("quadrature mode agrees with closed forms and Monte Carlo") {
  const GainDistribution d = GainDistribution::exponential_mean(1e-10);
  McConfig quad;
  quad.mode = McConfig::Mode::Quadrature;
  const Estimate mean_q = expect_1d([](double g) { return g; }, d, quad);
  CHECK(mean_q.stderr_value == 0.0);
  // the u-substituted mean integrand is log-singular at u=1, so the
  // 256-node rule is accurate to ~1e-5 here, far inside the MC noise
  CHECK(std::abs(mean_q.value / 1e-10 - 1.0) < 1e-4);

  McConfig mc;
  mc.samples = 1000000;
  auto smooth = [](double g) { return std::log1p(g / 1e-10); };
  const Estimate e_mc = expect_1d(smooth, d, mc);
  const Estimate e_q = expect_1d(smooth, d, quad);
  CHECK(std::abs(e_mc.value - e_q.value) < 4.0 * e_mc.stderr_value);
}

TEST_CASE("joint expectation: independence and per-sample recomputation") {
  const std::array<GainDistribution, 4> dists = {
      GainDistribution::exponential_mean(1e-10), GainDistribution::exponential_mean(1e-12),
      GainDistribution::exponential_mean(1e-12), GainDistribution::exponential_mean(1e-10)};
  McConfig mc;
  mc.samples = 200000;
  const Estimate unit = expect_joint([](double, double, double, double) { return 1.0; }, dists, mc);
  CHECK(unit.value == 1.0);
  CHECK(unit.stderr_value == 0.0);

  const Estimate prod =
      expect_joint([](double g11, double, double, double g22) { return g11 * g22; }, dists, mc);
  CHECK(std::abs(prod.value - 1e-20) < 3.0 * prod.stderr_value);

  // Per-sample recomputation: rebuilding every draw from (seed, stream,
  // index) and averaging in the same pairwise order must reproduce the
  // estimate bit for bit.
  McConfig small = mc;
  small.samples = 4096;
  auto fn = [](double g11, double g12, double g21, double g22) {
    return g11 * g22 / (1e-24 + g12 * g21);
  };
  const Estimate est = expect_joint(fn, dists, small, 10);
  std::vector<double> manual(small.samples);
  for (std::uint64_t i = 0; i < small.samples; ++i) {
    manual[i] = fn(sample(dists[0], SampleStream{small.seed, 10}, i),
                   sample(dists[1], SampleStream{small.seed, 11}, i),
                   sample(dists[2], SampleStream{small.seed, 12}, i),
                   sample(dists[3], SampleStream{small.seed, 13}, i));
  }
  CHECK(est.value == pairwise_sum(manual) / static_cast<double>(small.samples));
}
