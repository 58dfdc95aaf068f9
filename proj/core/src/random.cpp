#include "dpc/random.hpp"

#include <cmath>
#include <numbers>

namespace dpc {

std::uint64_t SplitMix64::next() noexcept {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_unit() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_unit_open() noexcept {
  return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

SplitMix64 substream(std::uint64_t seed, std::uint64_t index) noexcept {
  SplitMix64 mixer(seed ^ (0xbf58476d1ce4e5b9ULL * (index + 1)));
  return SplitMix64(mixer.next());
}

double standard_normal(SplitMix64& rng) noexcept {
  const double u1 = rng.next_unit_open();
  const double u2 = rng.next_unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace dpc
