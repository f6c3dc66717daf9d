#include "spintensor/spin_state.hpp"

#include <cmath>
#include <stdexcept>

namespace spintensor {

int axis_index(Axis a) {
  return static_cast<int>(a) - 1;
}

std::pair<Axis, Axis> cyclic_complement(Axis i) {
  switch (i) {
    case Axis::X: return {Axis::Y, Axis::Z};
    case Axis::Y: return {Axis::Z, Axis::X};
    default:      return {Axis::X, Axis::Y};
  }
}

const char* axis_name(Axis a) {
  switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    default:      return "z";
  }
}

const char* unit_name(SpinUnit u) {
  return u == SpinUnit::HBar ? "hbar" : "hbar/c";
}

HermitianOp2::HermitianOp2(const Matrix2c& m, SpinUnit unit) : m_(m), unit_(unit) {
  constexpr double tol = 1e-14;
  if (std::abs(m(0, 0).imag()) > tol || std::abs(m(1, 1).imag()) > tol ||
      std::abs(m(1, 0) - std::conj(m(0, 1))) > tol) {
    throw std::invalid_argument("matrix is not Hermitian");
  }
}

SpinState::SpinState(const Momentum& base, cplx up, cplx down)
    : base_(base), up_(up), down_(down) {
  const double n = std::norm(up) + std::norm(down);
  if (std::abs(n - 1.0) > 1e-12) {
    throw std::invalid_argument("spin state amplitudes are not normalized");
  }
}

SpinState SpinState::normalized(const Momentum& base, cplx up, cplx down) {
  const double n = std::sqrt(std::norm(up) + std::norm(down));
  if (!std::isfinite(n) || n <= 0.0) {
    throw std::invalid_argument("cannot normalize a null state");
  }
  return SpinState(base, up / n, down / n);
}

}  // namespace spintensor
