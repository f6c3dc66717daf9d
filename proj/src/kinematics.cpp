#include "spintensor/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace spintensor {

Velocity::Velocity(double v1, double v2, double v3) : v1_(v1), v2_(v2), v3_(v3) {
  if (!std::isfinite(v1) || !std::isfinite(v2) || !std::isfinite(v3)) {
    throw std::domain_error("velocity components must be finite");
  }
  if (norm() >= kVelocityLimit) {
    throw std::domain_error("velocity norm must stay below 1 - 1e-12 (units of c)");
  }
}

Momentum::Momentum(double p1, double p2, double p3) : p1_(p1), p2_(p2), p3_(p3) {
  if (!std::isfinite(p1) || !std::isfinite(p2) || !std::isfinite(p3)) {
    throw std::domain_error("momentum components must be finite");
  }
}

double lorentz_factor(const Velocity& v) {
  return 1.0 / std::sqrt(1.0 - v.norm_sq());
}

Momentum momentum_from_velocity(const Velocity& v) {
  const double g = lorentz_factor(v);
  return Momentum(g * v.v1(), g * v.v2(), g * v.v3());
}

double energy(const Momentum& p) {
  return std::sqrt(1.0 + p.norm_sq());
}

Velocity velocity_from_momentum(const Momentum& p) {
  const double e = energy(p);
  return Velocity(p.p1() / e, p.p2() / e, p.p3() / e);
}

}  // namespace spintensor
