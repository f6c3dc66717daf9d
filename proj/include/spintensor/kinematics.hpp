#pragma once

#include <cmath>

namespace spintensor {

// Everything in this library is dimensionless: velocities in units of c,
// momenta in units of m*c, energies in units of m*c^2.

// Velocities with norm at or above this bound are rejected; gamma would
// overflow on the light cone and the sampled grids never reach it.
inline constexpr double kVelocityLimit = 1.0 - 1e-12;

/// Dimensionless 3-velocity, strictly subluminal by construction.
class Velocity {
public:
  Velocity() = default;
  Velocity(double v1, double v2, double v3);

  double v1() const { return v1_; }
  double v2() const { return v2_; }
  double v3() const { return v3_; }
  double operator[](int i) const { return i == 0 ? v1_ : (i == 1 ? v2_ : v3_); }

  double norm_sq() const { return v1_ * v1_ + v2_ * v2_ + v3_ * v3_; }
  double norm() const { return std::sqrt(norm_sq()); }
  /// Norm of the component transverse to the z axis.
  double rho() const { return std::sqrt(v1_ * v1_ + v2_ * v2_); }

private:
  double v1_ = 0.0, v2_ = 0.0, v3_ = 0.0;
};

/// Dimensionless 3-momentum; base point of a spin fiber.
class Momentum {
public:
  Momentum() = default;
  Momentum(double p1, double p2, double p3);

  double p1() const { return p1_; }
  double p2() const { return p2_; }
  double p3() const { return p3_; }
  double operator[](int i) const { return i == 0 ? p1_ : (i == 1 ? p2_ : p3_); }

  double norm_sq() const { return p1_ * p1_ + p2_ * p2_ + p3_ * p3_; }
  double norm() const { return std::sqrt(norm_sq()); }

  bool operator==(const Momentum&) const = default;

private:
  double p1_ = 0.0, p2_ = 0.0, p3_ = 0.0;
};

/// gamma = (1 - |v|^2)^{-1/2}
double lorentz_factor(const Velocity& v);

/// p = gamma * v, componentwise.
Momentum momentum_from_velocity(const Velocity& v);

/// E = sqrt(1 + |p|^2)
double energy(const Momentum& p);

/// v = p / E; inverse of momentum_from_velocity.
Velocity velocity_from_momentum(const Momentum& p);

}  // namespace spintensor
