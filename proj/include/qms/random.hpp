// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace qms {

/// Seed for stream `index` of a multistart / ensemble run:
/// seed * 0x9E3779B97F4A7C15 + index, with 64-bit wraparound.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return seed * 0x9E3779B97F4A7C15ULL + index;
}

/// SplitMix64 generator. Gaussians come from Box-Muller on its uniform
/// output; a complex Gaussian consumes exactly one Box-Muller pair.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next_u64() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on (0, 1].
  double uniform() noexcept {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Standard complex Gaussian with independent N(0,1) real and imaginary parts.
  std::complex<double> complex_gaussian() noexcept {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
  }

  double gaussian() noexcept { return complex_gaussian().real(); }

 private:
  std::uint64_t state_;
};

}  // namespace qms
