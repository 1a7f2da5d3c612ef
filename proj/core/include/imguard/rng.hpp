#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace imguard {

/// SplitMix64 generator (Vigna's reference constants). All randomness in the
/// library flows through this so that seeded runs reproduce bit-for-bit on
/// any platform, independent of the standard library's distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) using the top 53 bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Standard-normal stream over SplitMix64 via Box-Muller.
///
/// Consumption contract (frozen so independent implementations agree):
/// each pair of raw draws (a, b) yields u1 = ((a >> 11) + 1) * 2^-53 in
/// (0, 1] and u2 = (b >> 11) * 2^-53 in [0, 1); the pair produces
/// r*cos(2*pi*u2) followed by r*sin(2*pi*u2) with r = sqrt(-2*ln(u1)),
/// and both values are emitted before the next pair is drawn.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = (static_cast<double>(rng_.next() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng_.next() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  SplitMix64 rng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace imguard
