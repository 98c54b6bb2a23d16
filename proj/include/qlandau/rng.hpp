#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "qlandau/rational.hpp"

namespace qlandau {

/// Deterministic random source. Standard-library distributions are
/// implementation-defined, so draws are derived from raw mt19937_64 words;
/// identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1).
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Box-Muller normal deviate.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 1e-300) u1 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(t);
    have_cached_ = true;
    return r * std::cos(t);
  }

  /// Integer in [lo, hi] inclusive.
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(gen_() % span);
  }

  /// Small nonzero-denominator rational, numerator in [-9, 9], denominator in [1, 9].
  Rat rational() {
    const std::int64_t num = integer(-9, 9);
    const std::int64_t den = integer(1, 9);
    return Rat(num) / Rat(den);
  }

  Rat rational_nonzero() {
    Rat r = rational();
    while (r == 0) r = rational();
    return r;
  }

 private:
  std::mt19937_64 gen_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace qlandau
