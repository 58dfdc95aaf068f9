#pragma once

#include <cstdint>

namespace dpc {

/// SplitMix64 (Steele, Lea & Flood 2014): 64-bit state advanced by the golden
/// gamma 0x9e3779b97f4a7c15, output passed through a murmur-style finalizer.
/// Serves both as the sampling generator and as the seeder for independent
/// sub-streams, so every simulation stream is reproducible from (seed, index).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;

  /// Uniform double in [0, 1) with 53-bit resolution.
  double next_unit() noexcept;

  /// Uniform double in (0, 1], safe as a logarithm argument.
  double next_unit_open() noexcept;

private:
  std::uint64_t state_;
};

/// Generator for sub-stream `index` of `seed`. Distinct indexes yield
/// decorrelated streams; the derivation is a single finalizer pass over
/// seed ^ (0xbf58476d1ce4e5b9 * (index + 1)).
SplitMix64 substream(std::uint64_t seed, std::uint64_t index) noexcept;

/// Standard normal draw via the Box-Muller cosine branch:
/// sqrt(-2 ln u1) * cos(2 pi u2), consuming exactly two uniforms per call.
double standard_normal(SplitMix64& rng) noexcept;

}  // namespace dpc
