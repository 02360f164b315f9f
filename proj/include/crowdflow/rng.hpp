#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace crowdflow {

/// Deterministic random source used everywhere randomness is needed.
///
/// The stream is fixed in this repo so that seeded runs reproduce across
/// platforms: the engine is std::mt19937_64, whose output sequence is pinned
/// bit-for-bit by the C++ standard, and uniform doubles are derived with the
/// explicit mapping (word >> 11) * 2^-53 instead of the implementation-defined
/// std::uniform_real_distribution. Normal deviates use the Marsaglia polar
/// method (two uniforms per pair, spare cached).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Standard normal deviate.
  double normal() {
    if (spare_) {
      double v = *spare_;
      spare_.reset();
      return v;
    }
    double u, v, s;
    do {
      u = 2.0 * next_double() - 1.0;
      v = 2.0 * next_double() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    return u * factor;
  }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

}  // namespace crowdflow
