// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eepc/channel.hpp"
#include "eepc/efficiency.hpp"
#include "eepc/errors.hpp"
#include "eepc/oracles.hpp"

using namespace eepc;

namespace {
double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}
}  // namespace

TEST_CASE("outage eval closed form") {
  const EfficiencyModel m = EfficiencyModel::outage(0.9);
  CHECK(m.eval(0.9) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(m.eval(0.0) == 0.0);
  CHECK(m.eval(0.45) == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
  // exp(-a/x) underflow guard: exact zeros, no NaN
  CHECK(m.eval(1e-6) == 0.0);
  CHECK(m.deriv1(1e-6) == 0.0);
  CHECK(m.deriv2(1e-6) == 0.0);
}

TEST_CASE("empirical eval closed form") {
  const EfficiencyModel m1 = EfficiencyModel::empirical(1);
  CHECK(m1.eval(std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-14));
  const EfficiencyModel m2 = EfficiencyModel::empirical(2);
  CHECK(m2.eval(0.0) == 0.0);
  CHECK(m2.eval(std::log(2.0)) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("derivatives match frozen values and finite differences") {
  const EfficiencyModel m = EfficiencyModel::outage(0.9);
  CHECK(rel_err(m.deriv1(0.9), 0.40875493463493591) < 1e-12);
  const double fd = oracle::central_diff([&](double x) { return m.eval(x); }, 0.9, 1e-6);
  CHECK(std::abs(m.deriv1(0.9) - fd) < 1e-6 * (1.0 + std::abs(m.deriv1(0.9))));

  // inflection of f_a sits exactly at a/2
  CHECK(m.deriv2(0.45) == 0.0);

  const EfficiencyModel e2 = EfficiencyModel::empirical(2);
  for (double x : {0.3, 0.7, 1.5, 3.0}) {
    const double expect = 2.0 * std::exp(-x) * (1.0 - std::exp(-x));
    CHECK(rel_err(e2.deriv1(x), expect) < 1e-13);
    const double fd2 = oracle::central_diff([&](double t) { return e2.eval(t); }, x, 1e-6);
    CHECK(std::abs(e2.deriv1(x) - fd2) < 1e-6 * (1.0 + e2.deriv1(x)));
  }
}

TEST_CASE("derivative consistency against finite differences on a grid") {
  for (const auto& m : {EfficiencyModel::outage(0.9), EfficiencyModel::empirical(2),
                        EfficiencyModel::empirical(5)}) {
    for (int i = 0; i <= 60; ++i) {
      const double x = 1e-3 * std::pow(1e4, i / 60.0);
      const double fd1 = oracle::central_diff([&](double t) { return m.eval(t); }, x, 1e-6);
      const double fd2 = oracle::central_diff([&](double t) { return m.deriv1(t); }, x, 1e-6);
      CHECK(std::abs(m.deriv1(x) - fd1) <= 1e-5 * (1.0 + std::abs(m.deriv1(x))));
      CHECK(std::abs(m.deriv2(x) - fd2) <= 1e-5 * (1.0 + std::abs(m.deriv2(x))));
    }
  }
}

TEST_CASE("inflection points") {
  CHECK(rel_err(EfficiencyModel::outage(0.9).inflection(), 0.45) < 1e-10);
  CHECK(rel_err(EfficiencyModel::outage(2.0).inflection(), 1.0) < 1e-10);
  CHECK(rel_err(EfficiencyModel::empirical(2).inflection(), std::log(2.0)) < 1e-9);
  CHECK(rel_err(EfficiencyModel::empirical(3).inflection(), std::log(3.0)) < 1e-9);
  CHECK_THROWS_AS(EfficiencyModel::empirical(1).inflection(), degenerate_model_error);
}

TEST_CASE("sign structure of f'' around the inflection") {
  for (const auto& m : {EfficiencyModel::outage(0.9), EfficiencyModel::empirical(3)}) {
    const double x0 = m.inflection();
    for (int i = 1; i <= 20; ++i) {
      const double below = x0 / 10.0 + (0.99 * x0 - x0 / 10.0) * i / 21.0;
      const double above = 1.01 * x0 * std::pow(100.0 / 1.01, i / 21.0);
      CHECK(m.deriv2(below) > 0.0);
      CHECK(m.deriv2(above) < 0.0);
    }
  }
}

TEST_CASE("max_f2 frozen values and degenerate M=1") {
  const EfficiencyModel m = EfficiencyModel::outage(0.9);
  // closed form (t^3 (t-2) e^-t) / a^2 at t = 3 + sqrt(3)
  CHECK(rel_err(m.max_f2(), 3.1480991042620413) < 1e-9);
  CHECK(rel_err(m.max_f2_arg(), 0.19019237886466841) < 1e-5);
  CHECK_FALSE(m.max_f2_degenerate());

  const EfficiencyModel m1 = EfficiencyModel::empirical(1);
  CHECK(m1.max_f2() == 0.0);
  CHECK(m1.max_f2_degenerate());

  // Empirical M=2 has its f'' supremum at the x -> 0 boundary, value 2.
  const EfficiencyModel m2 = EfficiencyModel::empirical(2);
  CHECK(m2.max_f2() == doctest::Approx(2.0).epsilon(1e-6));
  CHECK_FALSE(m2.max_f2_degenerate());
}

TEST_CASE("max_f2 dominates deriv2 samples") {
  const SampleStream s{7, 0};
  for (const auto& m : {EfficiencyModel::outage(0.9), EfficiencyModel::empirical(4)}) {
    const double x0 = m.inflection();
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const double x = uniform01(s, i) * 4.0 * x0 + 1e-12;
      CHECK(m.max_f2() * (1.0 + 1e-12) >= m.deriv2(x));
    }
  }
}

TEST_CASE("monotonicity and range") {
  const SampleStream s{11, 0};
  for (const auto& m : {EfficiencyModel::outage(0.9), EfficiencyModel::empirical(2)}) {
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const double x = uniform01(s, 2 * i) * 20.0;
      const double y = uniform01(s, 2 * i + 1) * 20.0;
      const double fx = m.eval(x);
      const double fy = m.eval(y);
      CHECK(fx >= 0.0);
      CHECK(fx <= 1.0);
      if (x < y)
        CHECK(fx <= fy);
      else if (y < x)
        CHECK(fy <= fx);
      CHECK(m.deriv1(x) >= 0.0);
    }
    CHECK(m.eval(1e7) > 1.0 - 1e-6);
  }
}

TEST_CASE("f' at zero: admissible property and the M=1 exception") {
  CHECK(EfficiencyModel::outage(0.9).deriv1(0.0) == 0.0);
  CHECK(EfficiencyModel::empirical(2).deriv1(0.0) == 0.0);
  // f_M with M=1 violates property 2: f'(0) = 1. Kept, not excluded.
  CHECK(EfficiencyModel::empirical(1).deriv1(0.0) == 1.0);
}

TEST_CASE("zero-price SNR") {
  CHECK(rel_err(EfficiencyModel::outage(0.9).zero_price_snr(), 0.9) < 1e-10);
  CHECK(rel_err(EfficiencyModel::outage(2.0).zero_price_snr(), 2.0) < 1e-10);
  CHECK(rel_err(EfficiencyModel::empirical(2).zero_price_snr(), 1.2564312086261697) < 1e-9);
  CHECK_THROWS_AS(EfficiencyModel::empirical(1).zero_price_snr(), degenerate_model_error);
}

TEST_CASE("silence price threshold closed form for the outage family") {
  // V=0 tangency for f_a solves x = a/2, c = f(a/2)/(a/2)^2 = 4 e^-2 / a^2.
  for (double a : {0.5, 0.9, 2.0}) {
    const EfficiencyModel m = EfficiencyModel::outage(a);
    CHECK(rel_err(m.silence_price_threshold(), 4.0 * std::exp(-2.0) / (a * a)) < 1e-9);
  }
}

TEST_CASE("shannon mode rejects pointwise operations") {
  const EfficiencyModel m = EfficiencyModel::shannon();
  CHECK_THROWS_AS(m.eval(1.0), unsupported_operation);
  CHECK_THROWS_AS(m.deriv1(1.0), unsupported_operation);
  CHECK_THROWS_AS(m.deriv2(1.0), unsupported_operation);
  CHECK_THROWS_AS(m.inflection(), unsupported_operation);
  CHECK_THROWS_AS(m.max_f2(), unsupported_operation);
}

TEST_CASE("constructor preconditions") {
  CHECK_THROWS_AS(EfficiencyModel::outage(0.0), precondition_error);
  CHECK_THROWS_AS(EfficiencyModel::outage(-1.0), precondition_error);
  CHECK_THROWS_AS(EfficiencyModel::empirical(0), precondition_error);
  CHECK_THROWS_AS(EfficiencyModel::outage(0.9).eval(-0.1), precondition_error);
}
