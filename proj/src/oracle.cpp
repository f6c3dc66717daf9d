#include "spintensor/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spintensor {

namespace {

// Rotate the global phase so the largest-magnitude component is real
// nonnegative.
Vector2c phase_fixed(Vector2c v) {
  const int lead = std::abs(v(0)) >= std::abs(v(1)) ? 0 : 1;
  const double mag = std::abs(v(lead));
  if (mag > 0.0) v *= std::conj(v(lead)) / mag;
  return v;
}

}  // namespace

EigenSystem2 eigh2(const HermitianOp2& op) {
  const Matrix2c& m = op.matrix();
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const cplx b = m(0, 1);

  const double tr = a + d;
  const double det = a * d - std::norm(b);
  // tr^2 - 4 det = (a - d)^2 + 4 |b|^2 >= 0; clamp away -1e-16-scale rounding
  const double disc = std::max(0.0, tr * tr - 4.0 * det);
  const double gap = std::sqrt(disc);

  EigenSystem2 out;
  out.values = {0.5 * (tr - gap), 0.5 * (tr + gap)};
  if (gap < 1e-12) {
    out.vectors = {Vector2c(1.0, 0.0), Vector2c(0.0, 1.0)};
    out.degenerate = true;
    return out;
  }

  // Either row of (A - lambda) supplies an eigenvector; pick the better
  // conditioned one, then take the exact orthogonal complement for the other
  // branch.
  const double lam1 = out.values[1];
  const Vector2c r0(b, cplx(lam1 - a, 0.0));
  const Vector2c r1(cplx(lam1 - d, 0.0), std::conj(b));
  Vector2c v1 = r0.squaredNorm() >= r1.squaredNorm() ? r0 : r1;
  v1.normalize();
  const Vector2c v0(-std::conj(v1(1)), std::conj(v1(0)));
  out.vectors = {phase_fixed(v0), phase_fixed(v1)};
  return out;
}

double oracle_probability(const SpinState& input, const HermitianOp2& op, int branch) {
  if (branch != 1 && branch != -1) {
    throw std::invalid_argument("branch must be +1 or -1");
  }
  const EigenSystem2 es = eigh2(op);
  const Vector2c amps = input.amplitudes();
  if (es.degenerate) {
    // Doubly degenerate 2x2: the eigenspace is the whole fiber.
    return std::norm(es.vectors[0].dot(amps)) + std::norm(es.vectors[1].dot(amps));
  }
  return std::norm(es.vectors[branch > 0 ? 1 : 0].dot(amps));
}

}  // namespace spintensor
