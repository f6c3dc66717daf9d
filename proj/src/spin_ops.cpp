#include "spintensor/spin_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace spintensor {

namespace {

Matrix2c pauli(Axis a) {
  Matrix2c m;
  switch (a) {
    case Axis::X: m << 0.0, 1.0, 1.0, 0.0; break;
    case Axis::Y: m << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0; break;
    default:      m << 1.0, 0.0, 0.0, -1.0; break;
  }
  return m;
}

Matrix2c spin_matrix(Axis a) {
  return 0.5 * pauli(a);
}

double sgn_pos(double x) {
  return x < 0.0 ? -1.0 : 1.0;  // sgn(0) = +1
}

double transverse_norm(const Momentum& p, Axis axis) {
  const auto [j, k] = cyclic_complement(axis);
  const double pj = p[axis_index(j)];
  const double pk = p[axis_index(k)];
  return std::sqrt(pj * pj + pk * pk);
}

// e^{i phi_p^i} entering the Sigma eigenstates. Whenever the denominator
// vanishes the accompanying coefficient a^(-) vanishes analytically, so the
// fallback value is never observable.
cplx sigma_phase(const Momentum& p, Axis axis) {
  const double p1 = p.p1(), p2 = p.p2(), p3 = p.p3();
  double d = 0.0;
  cplx num;
  switch (axis) {
    case Axis::Z:
      d = std::sqrt(p1 * p1 + p2 * p2);
      num = -sgn_pos(p3) * cplx(p1, p2);
      break;
    case Axis::Y:
      d = std::sqrt(p3 * p3 + p1 * p1);
      num = -sgn_pos(p2) * cplx(p3, p1);
      break;
    default:
      d = std::sqrt(p2 * p2 + p3 * p3);
      num = -sgn_pos(p1) * cplx(p3, -p2);
      break;
  }
  if (d < kTransverseTol) return cplx(1.0, 0.0);
  return num / d;
}

// e^{i phi_p^i} entering the V eigenstates; callers take the degenerate
// branch before the denominator can vanish.
cplx v_phase(const Momentum& p, Axis axis) {
  const double p1 = p.p1(), p2 = p.p2(), p3 = p.p3();
  switch (axis) {
    case Axis::Z: return -cplx(p2, p1) / std::sqrt(p1 * p1 + p2 * p2);
    case Axis::Y: return -cplx(p1, p3) / std::sqrt(p3 * p3 + p1 * p1);
    default:      return -cplx(-p2, p3) / std::sqrt(p2 * p2 + p3 * p3);
  }
}

void require_sign(int sign) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("sign must be +1 or -1");
  }
}

SpinState to_storage_basis(const Momentum& p, Axis axis, const Vector2c& axis_basis_column) {
  const Vector2c amps = basis_change(axis) * axis_basis_column;
  return SpinState(p, amps(0), amps(1));
}

}  // namespace

HermitianOp2 wigner_spin_op(Axis axis) {
  return HermitianOp2(spin_matrix(axis), SpinUnit::HBar);
}

Matrix2c basis_change(Axis axis) {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix2c u;
  switch (axis) {
    case Axis::X: u << r, r, r, -r; break;
    case Axis::Y: u << r, r, cplx(0.0, r), cplx(0.0, -r); break;
    default:      u.setIdentity(); break;
  }
  return u;
}

HermitianOp2 sigma_op(const Momentum& p, Axis axis) {
  const Matrix2c s_axis = spin_matrix(axis);
  const double n2 = p.norm_sq();
  if (n2 == 0.0) {
    return HermitianOp2(s_axis, SpinUnit::HBar);  // rest frame: Sigma = S
  }
  const double inv_norm = 1.0 / std::sqrt(n2);
  const double nx = p.p1() * inv_norm;
  const double ny = p.p2() * inv_norm;
  const double nz = p.p3() * inv_norm;
  const Matrix2c s_dot_n =
      nx * spin_matrix(Axis::X) + ny * spin_matrix(Axis::Y) + nz * spin_matrix(Axis::Z);
  const double n_axis = p[axis_index(axis)] * inv_norm;
  const Matrix2c s_par = n_axis * s_dot_n;
  const Matrix2c s_perp = s_axis - s_par;
  return HermitianOp2(energy(p) * s_perp + s_par, SpinUnit::HBar);
}

HermitianOp2 v_op(const Momentum& p, Axis axis) {
  const auto [j, k] = cyclic_complement(axis);
  const Matrix2c m =
      p[axis_index(j)] * spin_matrix(k) - p[axis_index(k)] * spin_matrix(j);
  return HermitianOp2(m, SpinUnit::HBarOverC);
}

double sigma_eigenvalue(const Momentum& p, Axis axis) {
  const double t = transverse_norm(p, axis);
  return 0.5 * std::sqrt(1.0 + t * t);
}

double v_eigenvalue(const Momentum& p, Axis axis) {
  return 0.5 * transverse_norm(p, axis);
}

EigenPair sigma_eigenstate(const Momentum& p, Axis axis, int sign) {
  require_sign(sign);
  const double s = sigma_eigenvalue(p, axis);
  const double e = energy(p);
  const double denom = s * (1.0 + e);
  const double a_plus = 0.5 * std::sqrt((e + 2.0 * s) * (2.0 * s + 1.0) / denom);
  const double a_minus = 0.5 * std::sqrt((e - 2.0 * s) * (2.0 * s - 1.0) / denom);
  const cplx ph = sigma_phase(p, axis);

  // |p, eps s> = a+ |m^i = eps/2> + eps e^{i eps phi} a- |m^i = -eps/2>,
  // written in (m^i = +1/2, m^i = -1/2) component order.
  Vector2c col;
  if (sign > 0) {
    col << a_plus, ph * a_minus;
  } else {
    col << -std::conj(ph) * a_minus, a_plus;
  }
  return EigenPair{sign * s, to_storage_basis(p, axis, col), false};
}

EigenPair v_eigenstate(const Momentum& p, Axis axis, int sign) {
  require_sign(sign);
  const double r = 1.0 / std::sqrt(2.0);
  const double t = transverse_norm(p, axis);
  if (t < kTransverseTol) {
    Vector2c col;
    col << r, (sign > 0 ? r : -r);  // (|m^i=+1/2> +- |m^i=-1/2>)/sqrt2
    return EigenPair{0.0, to_storage_basis(p, axis, col), true};
  }
  const double mu = 0.5 * t;
  const cplx ph = v_phase(p, axis);

  // |p, eps mu> = (|m^i = -eps/2> + eps e^{i eps phi} |m^i = eps/2>)/sqrt2
  Vector2c col;
  if (sign > 0) {
    col << ph * r, r;
  } else {
    col << r, -std::conj(ph) * r;
  }
  return EigenPair{sign * mu, to_storage_basis(p, axis, col), false};
}

}  // namespace spintensor
