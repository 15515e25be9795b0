// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "eepc/errors.hpp"
#include "eepc/parallel.hpp"

namespace eepc {

/// Distribution of a channel power gain g = |h|^2. Rayleigh-faded amplitudes
/// make the power gain exponential, so that is the one shipped kind; the
/// enum leaves room for others.
struct GainDistribution {
  enum class Kind { ExponentialMean };
  Kind kind = Kind::ExponentialMean;
  double mean = 1.0;

  static GainDistribution exponential_mean(double m) {
    if (!(m > 0)) throw precondition_error("GainDistribution: requires mean > 0");
    return GainDistribution{Kind::ExponentialMean, m};
  }

  double cdf(double g) const {
    if (g < 0) throw precondition_error("GainDistribution::cdf: requires g >= 0");
    return -std::expm1(-g / mean);
  }

  /// Inverse CDF. u = 0 maps to mean * 2^-53 rather than an exact zero gain.
  double quantile(double u) const {
    const double g = -mean * std::log1p(-u);
    const double floor_g = mean * 0x1p-53;
    return g < floor_g ? floor_g : g;
  }
};

/// Addressable i.i.d. draw sequence: the value at any index is a pure
/// function of (seed, stream_id, index), so batch size and thread schedule
/// cannot change it.
struct SampleStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace detail

/// Counter-based uniform draw in [0, 1) with 53-bit resolution.
inline double uniform01(const SampleStream& s, std::uint64_t index) {
  const std::uint64_t w = detail::mix64(detail::mix64(detail::mix64(s.seed) ^ s.stream_id) ^ index);
  return static_cast<double>(w >> 11) * 0x1p-53;
}

inline double sample(const GainDistribution& dist, const SampleStream& s, std::uint64_t index) {
  return dist.quantile(uniform01(s, index));
}

/// Monte Carlo / quadrature settings for expectation operators.
struct McConfig {
  std::size_t samples = 100000;
  std::uint64_t seed = 12345;
  int workers = 0;  // 0: hardware default
  enum class Mode { MonteCarlo, Quadrature } mode = Mode::MonteCarlo;
  int quad_nodes = 256;
};

struct Estimate {
  double value = 0;
  double stderr_value = 0;  // 0 in quadrature mode
  std::size_t samples = 0;
};

/// Gauss-Legendre nodes/weights on (0, 1).
std::vector<std::pair<double, double>> gauss_legendre_unit(int nodes);

namespace detail {

inline Estimate reduce_mean(const std::vector<double>& vals) {
  const std::size_t n = vals.size();
  const double s1 = pairwise_sum(vals);
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) sq[i] = vals[i] * vals[i];
  const double s2 = pairwise_sum(sq);
  Estimate e;
  e.samples = n;
  e.value = s1 / static_cast<double>(n);
  if (n > 1) {
    const double var = (s2 - s1 * s1 / static_cast<double>(n)) / static_cast<double>(n - 1);
    e.stderr_value = var > 0 ? std::sqrt(var / static_cast<double>(n)) : 0.0;
  }
  return e;
}

}  // namespace detail

/// E[fn(g)] over one gain distribution. Monte Carlo mode reports the sample
/// mean and its standard error; quadrature mode substitutes g = quantile(u)
/// and integrates over u with Gauss-Legendre (stderr 0).
template <typename Fn>
Estimate expect_1d(Fn&& fn, const GainDistribution& dist, const McConfig& cfg,
                   std::uint64_t stream_id = 0) {
  if (cfg.mode == McConfig::Mode::Quadrature) {
    const auto table = gauss_legendre_unit(cfg.quad_nodes);
    double acc = 0;
    for (const auto& [u, w] : table) acc += w * fn(dist.quantile(u));
    return Estimate{acc, 0.0, static_cast<std::size_t>(cfg.quad_nodes)};
  }
  const SampleStream s{cfg.seed, stream_id};
  std::vector<double> vals(cfg.samples);
  parallel_for(cfg.samples, cfg.workers, [&](std::size_t i) {
    vals[i] = fn(sample(dist, s, static_cast<std::uint64_t>(i)));
  });
  return detail::reduce_mean(vals);
}

/// Joint expectation over the four link gains with a vector-valued
/// integrand: one equilibrium solve feeds all components. Monte Carlo only.
template <std::size_t K, typename Fn>
std::array<Estimate, K> expect_joint_multi(Fn&& fn, const std::array<GainDistribution, 4>& dists,
                                           const McConfig& cfg, std::uint64_t stream_base = 0) {
  std::array<SampleStream, 4> streams;
  for (std::size_t j = 0; j < 4; ++j) streams[j] = SampleStream{cfg.seed, stream_base + j};
  std::array<std::vector<double>, K> vals;
  for (auto& v : vals) v.resize(cfg.samples);
  parallel_for(cfg.samples, cfg.workers, [&](std::size_t i) {
    const auto idx = static_cast<std::uint64_t>(i);
    const std::array<double, K> out =
        fn(sample(dists[0], streams[0], idx), sample(dists[1], streams[1], idx),
           sample(dists[2], streams[2], idx), sample(dists[3], streams[3], idx));
    for (std::size_t k = 0; k < K; ++k) vals[k][i] = out[k];
  });
  std::array<Estimate, K> est;
  for (std::size_t k = 0; k < K; ++k) est[k] = detail::reduce_mean(vals[k]);
  return est;
}

/// E[fn(g11, g12, g21, g22)] over independent gains (Monte Carlo).
template <typename Fn>
Estimate expect_joint(Fn&& fn, const std::array<GainDistribution, 4>& dists, const McConfig& cfg,
                      std::uint64_t stream_base = 0) {
  auto wrapped = [&fn](double g11, double g12, double g21, double g22) {
    return std::array<double, 1>{fn(g11, g12, g21, g22)};
  };
  return expect_joint_multi<1>(wrapped, dists, cfg, stream_base)[0];
}

}  // namespace eepc
