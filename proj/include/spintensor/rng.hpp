#pragma once

#include <cstdint>
#include <random>

#include "spintensor/kinematics.hpp"

namespace spintensor {

/// Deterministic sampling helper. Doubles are built from the raw mt19937_64
/// stream (no distribution adapters), so a fixed seed and call sequence give
/// the same values on every platform.
class SampleRng {
public:
  explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

  double unit() { return (eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  Momentum momentum_in_ball(double radius) {
    const auto [x, y, z] = point_in_ball(radius);
    return Momentum(x, y, z);
  }

  Velocity velocity_in_ball(double radius) {
    const auto [x, y, z] = point_in_ball(radius);
    return Velocity(x, y, z);
  }

private:
  struct Triple {
    double x, y, z;
  };

  Triple point_in_ball(double radius) {
    for (;;) {
      const double x = uniform(-radius, radius);
      const double y = uniform(-radius, radius);
      const double z = uniform(-radius, radius);
      if (x * x + y * y + z * z <= radius * radius) return {x, y, z};
    }
  }

  std::mt19937_64 eng_;
};

}  // namespace spintensor
