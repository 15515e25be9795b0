// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eepc/channel.hpp"
#include "eepc/oracles.hpp"
#include "eepc/solvers.hpp"

using namespace eepc;

namespace {

double f_of(const EfficiencyModel& m, double c, double x) {
  return x * m.deriv1(x) - m.eval(x) - c * x * x;
}

double scaled_residual(const EfficiencyModel& m, double c, double x) {
  return std::abs(f_of(m, c, x)) / std::max(1.0, std::abs(c * x * x));
}

}  // namespace

TEST_CASE("bisect on elementary roots") {
  CHECK(bisect([](double x) { return x - 1.0; }, 0.0, 2.0, 1e-12) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-12) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(bisect([](double x) { return std::cos(x); }, 1.0, 2.0, 1e-12) ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
}

TEST_CASE("bisect error paths") {
  CHECK_THROWS_AS(bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-12), bracket_error);
  CHECK_THROWS_AS(bisect([](double x) { return x; }, 1.0, 0.0, 1e-12), precondition_error);
  CHECK_THROWS_AS(bisect([](double x) { return x; }, 0.0, 1.0, 0.0), precondition_error);
}

TEST_CASE("maximize_scalar on elementary shapes") {
  const MaximizeResult parab = maximize_scalar([](double x) { return -(x - 3.0) * (x - 3.0); },
                                               0.0, 10.0, 1e-12);
  CHECK(std::abs(parab.x - 3.0) < 1e-8);
  CHECK(std::abs(parab.value) < 1e-15);

  const MaximizeResult sine = maximize_scalar([](double x) { return std::sin(x); }, 0.0,
                                              std::numbers::pi, 1e-12);
  CHECK(std::abs(sine.x - std::numbers::pi / 2) < 1e-8);
  CHECK(sine.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("maximize_scalar multimodal: left-most global maximum") {
  // sin(5x) on [0, 2] attains 1 at pi/10 and at pi/2; the left-most wins.
  const MaximizeResult res = maximize_scalar([](double x) { return std::sin(5.0 * x); }, 0.0,
                                             2.0, 1e-12);
  CHECK(res.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(res.x - std::numbers::pi / 10) < 1e-8);
  const MaximizeResult scan =
      oracle::dense_max([](double x) { return std::sin(5.0 * x); }, 0.0, 2.0, 1000000);
  CHECK(std::abs(res.x - scan.x) < 1e-7);
}

TEST_CASE("maximize_scalar flat objective returns the left end") {
  const MaximizeResult res = maximize_scalar([](double) { return 1.0; }, 2.0, 5.0, 1e-12);
  CHECK(res.x == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(res.value == 1.0);
}

TEST_CASE("greatest_zero case analysis") {
  const EfficiencyModel m = EfficiencyModel::outage(0.9);

  SUBCASE("large price: origin is the only zero") {
    const ZeroStructure zs = greatest_zero(m, 0.5 * m.max_f2() * 1.0001);
    CHECK(zs.kind == ZeroStructure::Case::NoPositiveZero);
  }
  SUBCASE("price to zero: greater zero approaches a") {
    const ZeroStructure zs = greatest_zero(m, 1e-8);
    REQUIRE(zs.kind == ZeroStructure::Case::TwoZeros);
    CHECK(std::abs(zs.x2 - 0.9) < 1e-3);
  }
  SUBCASE("frozen zeros at c = max_f2/4") {
    const ZeroStructure zs = greatest_zero(m, 0.25 * m.max_f2());
    REQUIRE(zs.kind == ZeroStructure::Case::TwoZeros);
    CHECK(zs.x1 == doctest::Approx(0.17463675778728648).epsilon(1e-8));
    CHECK(zs.x2 == doctest::Approx(0.41144983489256339).epsilon(1e-8));
  }
  SUBCASE("frozen greater zero at the reference operating point c = 0.1") {
    const ZeroStructure zs = greatest_zero(m, 0.1);
    REQUIRE(zs.kind == ZeroStructure::Case::TwoZeros);
    CHECK(zs.x2 == doctest::Approx(0.75742008823272151).epsilon(1e-9));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(greatest_zero(m, 0.0), precondition_error);
    CHECK_THROWS_AS(greatest_zero(m, -1.0), precondition_error);
    CHECK_THROWS_AS(greatest_zero(EfficiencyModel::shannon(), 0.1), unsupported_operation);
  }
}

TEST_CASE("greatest_zero residuals and dominance") {
  const EfficiencyModel models[] = {EfficiencyModel::outage(0.9), EfficiencyModel::outage(2.0),
                                    EfficiencyModel::empirical(3)};
  for (const auto& m : models) {
    for (double frac : {0.05, 0.25, 0.6}) {
      const double c = frac * 0.5 * m.max_f2();
      const ZeroStructure zs = greatest_zero(m, c);
      if (zs.kind != ZeroStructure::Case::TwoZeros) continue;
      CHECK(scaled_residual(m, c, zs.x2) <= 1e-9);
      if (zs.x1 > 0) {
        CHECK(scaled_residual(m, c, zs.x1) <= 1e-9);
        // F dips below zero before the lesser zero and recovers between them
        CHECK(f_of(m, c, zs.x1 * 0.99) < 0.0);
        CHECK(f_of(m, c, 0.5 * (zs.x1 + zs.x2)) > 0.0);
      }
      for (double k : {1.01, 2.0, 10.0}) CHECK(f_of(m, c, zs.x2 * k) < 0.0);
    }
  }
}

TEST_CASE("greater zero is non-increasing in the price coefficient") {
  const EfficiencyModel m = EfficiencyModel::outage(0.9);
  double prev = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 20; ++i) {
    const double c = 0.35 * m.max_f2() * std::pow(10.0, -3.0 + 3.0 * i / 19.0);
    const ZeroStructure zs = greatest_zero(m, c);
    REQUIRE(zs.kind == ZeroStructure::Case::TwoZeros);
    CHECK(zs.x2 <= prev * (1.0 + 1e-12));
    prev = zs.x2;
  }
}

TEST_CASE("zeros agree with a dense sign-scan oracle on random models") {
  const SampleStream kind_s{99, 0}, a_s{99, 1}, c_s{99, 2};
  for (std::uint64_t i = 0; i < 100; ++i) {
    const EfficiencyModel m =
        uniform01(kind_s, i) < 0.5
            ? EfficiencyModel::outage(0.3 + 2.7 * uniform01(a_s, i))
            : EfficiencyModel::empirical(3 + static_cast<int>(3.0 * uniform01(a_s, i)));
    const double c = (0.01 + 0.98 * uniform01(c_s, i)) * 0.5 * m.max_f2();
    const ZeroStructure zs = greatest_zero(m, c);
    const double x0 = m.inflection();
    const auto zeros = oracle::zeros_log_scan([&](double x) { return f_of(m, c, x); },
                                              x0 * 1e-4, x0 * 1e3, 100000);
    if (zs.kind == ZeroStructure::Case::NoPositiveZero) {
      CHECK(zeros.empty());
    } else {
      REQUIRE_FALSE(zeros.empty());
      CHECK(std::abs(zeros.back() - zs.x2) / zs.x2 < 1e-6);
      if (zs.x1 > 0) CHECK(std::abs(zeros.front() - zs.x1) / zs.x1 < 1e-6);
    }
  }
}

TEST_CASE("empirical M=2 boundary supremum: single positive zero") {
  const EfficiencyModel m2 = EfficiencyModel::empirical(2);
  // f''(0+) = 2 > 2c, so F increases from the origin: no positive lesser zero.
  const ZeroStructure zs = greatest_zero(m2, 0.3);
  REQUIRE(zs.kind == ZeroStructure::Case::TwoZeros);
  CHECK(zs.x1 == 0.0);
  CHECK(zs.x2 > 0.0);
  CHECK(scaled_residual(m2, 0.3, zs.x2) <= 1e-9);
  CHECK(f_of(m2, 0.3, 0.5 * zs.x2) > 0.0);
}

TEST_CASE("degenerate M=1 never has positive zeros") {
  const ZeroStructure zs = greatest_zero(EfficiencyModel::empirical(1), 0.1);
  CHECK(zs.kind == ZeroStructure::Case::NoPositiveZero);
}

TEST_CASE("greatest_zero_top equals the full structure's greater zero") {
  const EfficiencyModel m = EfficiencyModel::outage(0.9);
  for (double c : {0.01, 0.1, 0.5}) {
    const ZeroStructure zs = greatest_zero(m, c);
    const double top = greatest_zero_top(m, c);
    if (zs.kind == ZeroStructure::Case::TwoZeros)
      CHECK(top == doctest::Approx(zs.x2).epsilon(1e-12));
    else
      CHECK(top == 0.0);
  }
}
