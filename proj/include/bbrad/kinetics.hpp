// kinetics.hpp - Monte Carlo check of the kinetic pressure factor <cos^2> = 1/d
//
// Copyright (C) 2026 The bbrad authors.
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bbrad/parallel.hpp"
#include "bbrad/rng.hpp"
#include "bbrad/summation.hpp"

namespace bbrad::kinetics {

// Monte Carlo estimate with its statistical error.  Identical (d, n, seed)
// reproduce the estimate bit for bit, for any worker count.
struct McEstimate {
  double mean;
  double std_error;  // sample standard deviation / sqrt(n)
  std::int64_t n_samples;
  std::uint64_t seed;
};

// Normals are generated in pairs, so one sample consumes a fixed, even
// number of u64 draws.  Fixed consumption is what lets a chunk jump straight
// to its place in the stream.
inline constexpr std::int64_t draws_per_sample(int d) {
  return d + (d & 1);
}

// Uniform direction on the unit sphere in d dimensions: normalize a vector
// of d independent standard normal deviates (rotation invariance makes the
// result uniform, with no rejection step in any dimension).
inline void sample_direction(int d, rng::SplitMix64& gen,
                             std::span<double> out) {
  if (d < 1) {
    throw std::domain_error("sample_direction: d must be >= 1, got " +
                            std::to_string(d));
  }
  if (d == 1) {
    // normalizing a scalar is its sign; rounding through sqrt would land
    // one ulp off +/-1 for a fair fraction of draws
    const rng::NormalPair z = rng::normal_pair(gen);
    out[0] = z.z0 == 0.0 ? 1.0 : std::copysign(1.0, z.z0);
    return;
  }
  double norm2 = 0.0;
  for (int i = 0; i < d; i += 2) {
    const rng::NormalPair z = rng::normal_pair(gen);
    out[i] = z.z0;
    norm2 += z.z0 * z.z0;
    if (i + 1 < d) {
      out[i + 1] = z.z1;
      norm2 += z.z1 * z.z1;
    }
  }
  if (norm2 == 0.0) {
    // Measure-zero draw; any fixed direction keeps the estimator unbiased.
    out[0] = 1.0;
    for (int i = 1; i < d; ++i) out[i] = 0.0;
    return;
  }
  const double inv_norm = 1.0 / std::sqrt(norm2);
  for (int i = 0; i < d; ++i) out[i] *= inv_norm;
}

inline std::vector<double> sample_direction(int d, rng::SplitMix64& gen) {
  std::vector<double> out(static_cast<size_t>(std::max(d, 1)));
  sample_direction(d, gen, out);
  return out;
}

// Mean of cos^2(theta) over n uniform directions, where cos(theta) is the
// first Cartesian component (any fixed axis is equivalent by symmetry).
// The sample stream is split into fixed-size chunks whose sub-streams are
// reached by an O(1) jump, and chunk partials are reduced in index order,
// so serial and parallel runs agree exactly.
inline McEstimate mc_cos2_average(int d, std::int64_t n, std::uint64_t seed) {
  if (d < 1) {
    throw std::domain_error("mc_cos2_average: d must be >= 1, got " +
                            std::to_string(d));
  }
  if (n < 100) {
    throw std::domain_error(
        "mc_cos2_average: need at least 100 samples for a standard error, "
        "got " + std::to_string(n));
  }

  constexpr std::int64_t kChunk = 1 << 16;
  const std::int64_t n_chunks = (n + kChunk - 1) / kChunk;
  struct Partial {
    NeumaierSum sum;
    NeumaierSum sum_sq;
  };
  std::vector<Partial> parts(static_cast<size_t>(n_chunks));

  parallel::run_chunks(n_chunks, [&](std::int64_t c) {
    const std::int64_t begin = c * kChunk;
    const std::int64_t end = std::min(n, begin + kChunk);
    rng::SplitMix64 gen(seed);
    gen.jump(static_cast<std::uint64_t>(begin) *
             static_cast<std::uint64_t>(draws_per_sample(d)));
    std::vector<double> dir(static_cast<size_t>(d));
    Partial& p = parts[static_cast<size_t>(c)];
    for (std::int64_t i = begin; i < end; ++i) {
      sample_direction(d, gen, dir);
      const double c2 = dir[0] * dir[0];
      p.sum.add(c2);
      p.sum_sq.add(c2 * c2);
    }
  });

  NeumaierSum sum, sum_sq;
  for (const Partial& p : parts) {
    sum.merge(p.sum);
    sum_sq.merge(p.sum_sq);
  }
  const double mean = sum.value() / static_cast<double>(n);
  const double variance = std::max(
      0.0, (sum_sq.value() - static_cast<double>(n) * mean * mean) /
               static_cast<double>(n - 1));
  return {mean, std::sqrt(variance / static_cast<double>(n)), n, seed};
}

// Kinetic pressure of an isotropic gas of massless particles reflecting off
// a wall: p = rho <cos^2(theta)>.
inline double kinetic_pressure(double rho, int d, double cos2_average) {
  if (d < 1) {
    throw std::domain_error("kinetic_pressure: d must be >= 1, got " +
                            std::to_string(d));
  }
  return rho * cos2_average;
}

}  // namespace bbrad::kinetics
