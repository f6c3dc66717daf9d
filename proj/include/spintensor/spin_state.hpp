#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "spintensor/kinematics.hpp"

namespace spintensor {

using cplx = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Vector2c = Eigen::Vector2cd;

enum class Axis : int { X = 1, Y = 2, Z = 3 };

/// Zero-based component index of an axis.
int axis_index(Axis a);

/// The perpendicular pair (j, k) of axis i, in cyclic order x -> y -> z -> x.
std::pair<Axis, Axis> cyclic_complement(Axis i);

const char* axis_name(Axis a);

enum class SpinUnit { HBar, HBarOverC };
const char* unit_name(SpinUnit u);

// Transverse-momentum norms below this are handled by the singular/degenerate
// branch: the closed-form phase factors are 0/0 there.
inline constexpr double kTransverseTol = 1e-12;

/// 2x2 Hermitian spin observable restricted to a single momentum fiber.
/// Row/column order is fixed as (m3 = +1/2, m3 = -1/2).
class HermitianOp2 {
public:
  HermitianOp2(const Matrix2c& m, SpinUnit unit);

  const Matrix2c& matrix() const { return m_; }
  SpinUnit unit() const { return unit_; }

private:
  Matrix2c m_;
  SpinUnit unit_;
};

/// Normalized two-component spin state at a fixed momentum. Amplitudes are
/// always stored in the m3 Wigner basis; states written in m1/m2 labels are
/// converted on construction.
class SpinState {
public:
  SpinState(const Momentum& base, cplx up, cplx down);

  /// Explicitly normalizes (up, down) before constructing.
  static SpinState normalized(const Momentum& base, cplx up, cplx down);

  const Momentum& base() const { return base_; }
  cplx up() const { return up_; }
  cplx down() const { return down_; }
  Vector2c amplitudes() const { return Vector2c(up_, down_); }

private:
  Momentum base_;
  cplx up_, down_;
};

/// One closed-form eigenvalue/eigenstate of a fiber observable, in the unit
/// carried by the source operator.
struct EigenPair {
  double value;
  SpinState state;
  bool degenerate = false;
};

}  // namespace spintensor
