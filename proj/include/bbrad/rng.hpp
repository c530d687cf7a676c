// rng.hpp - seedable counter-style pseudo-random numbers
//
// Copyright (C) 2026 The bbrad authors.
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cmath>
#include <cstdint>

namespace bbrad::rng {

// SplitMix64 (Steele, Lea & Vigna; the stream generator of Java's
// SplittableRandom).  The state advances by a fixed odd increment, so the
// n-th output is a pure function of seed + n * increment and jumping ahead
// is O(1).  That counter structure is what makes chunked Monte Carlo
// reductions reproducible for any worker count.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Skips n draws in O(1).
  void jump(std::uint64_t n) { state_ += 0x9E3779B97F4A7C15ull * n; }

  // Uniform in [0, 1), 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

struct NormalPair {
  double z0;
  double z1;
};

// Box-Muller transform in its trigonometric form: exactly two u64 draws per
// pair of deviates, so the consumption per sample is a fixed, jumpable
// count.  u1 is mapped into (0, 1] to keep the logarithm finite.
inline NormalPair normal_pair(SplitMix64& gen) {
  const double u1 =
      static_cast<double>((gen.next_u64() >> 11) + 1) * 0x1.0p-53;
  const double u2 = static_cast<double>(gen.next_u64() >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 6.28318530717958647692528676655900577 * u2;
  return {r * std::cos(a), r * std::sin(a)};
}

}  // namespace bbrad::rng
