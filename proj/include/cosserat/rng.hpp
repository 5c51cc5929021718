#pragma once

#include <cstdint>
#include <cmath>

#include "cosserat/tensor.hpp"

namespace cosserat {

/// SplitMix64. Used instead of <random> so that seeded report streams are
/// reproducible independent of the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Log-uniform in [lo, hi), lo > 0.
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  Vec3 uniform_vec3(double lo, double hi) {
    const double a = uniform(lo, hi);
    const double b = uniform(lo, hi);
    const double c = uniform(lo, hi);
    return Vec3(a, b, c);
  }

  Mat3 uniform_mat3(double lo, double hi) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = uniform(lo, hi);
    return m;
  }

  Vec3 unit_vec3() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * M_PI);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return Vec3(r * std::cos(phi), r * std::sin(phi), z);
  }

  /// Rotation with well-spread axis and angle (not Haar, not needed here).
  Mat3 rotation();

 private:
  std::uint64_t state_;
};

}  // namespace cosserat
