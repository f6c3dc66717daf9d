#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "spintensor/oracle.hpp"
#include "spintensor/rng.hpp"
#include "spintensor/spin_ops.hpp"

using namespace spintensor;

namespace {

constexpr Axis kAxes[] = {Axis::X, Axis::Y, Axis::Z};

double eigen_residual(const HermitianOp2& op, const EigenPair& ep) {
  const Vector2c x = ep.state.amplitudes();
  return (op.matrix() * x - ep.value * x).norm();
}

// same state up to a global phase
bool same_ray(const Vector2c& a, const Vector2c& b) {
  return std::fabs(std::abs(a.dot(b)) - 1.0) < 1e-10;
}

}  // namespace

TEST_CASE("wigner spin operators") {
  const Matrix2c z = wigner_spin_op(Axis::Z).matrix();
  CHECK(z(0, 0) == cplx(0.5, 0.0));
  CHECK(z(1, 1) == cplx(-0.5, 0.0));
  CHECK(z(0, 1) == cplx(0.0, 0.0));

  const Matrix2c x = wigner_spin_op(Axis::X).matrix();
  CHECK(x(0, 1) == cplx(0.5, 0.0));
  CHECK(x(0, 0) == cplx(0.0, 0.0));

  for (const Axis a : kAxes) {
    const Matrix2c m = wigner_spin_op(a).matrix();
    CHECK(std::abs(m.trace()) == 0.0);
    CHECK(std::abs(m.determinant() - cplx(-0.25, 0.0)) < 1e-16);
    CHECK(wigner_spin_op(a).unit() == SpinUnit::HBar);
  }
}

TEST_CASE("basis change columns are spin eigenstates and unitary") {
  CHECK(basis_change(Axis::Z).isIdentity(0.0));
  const double r = 1.0 / std::sqrt(2.0);
  const Matrix2c ux = basis_change(Axis::X);
  CHECK(ux(0, 0) == cplx(r, 0.0));
  CHECK(ux(1, 0) == cplx(r, 0.0));
  CHECK(ux(1, 1) == cplx(-r, 0.0));

  for (const Axis a : kAxes) {
    const Matrix2c u = basis_change(a);
    CHECK((u.adjoint() * u - Matrix2c::Identity()).norm() < 1e-14);
    const Matrix2c s = wigner_spin_op(a).matrix();
    CHECK((s * u.col(0) - 0.5 * u.col(0)).norm() < 1e-15);
    CHECK((s * u.col(1) + 0.5 * u.col(1)).norm() < 1e-15);
  }
}

TEST_CASE("sigma_op special cases") {
  // rest frame: exact reduction to the Wigner spin
  for (const Axis a : kAxes) {
    CHECK(sigma_op(Momentum(0, 0, 0), a).matrix() == wigner_spin_op(a).matrix());
  }
  // momentum parallel to the axis leaves the operator untouched
  const Matrix2c par = sigma_op(Momentum(0, 0, 5), Axis::Z).matrix();
  CHECK((par - wigner_spin_op(Axis::Z).matrix()).norm() < 1e-15);

  const EigenSystem2 es = eigh2(sigma_op(Momentum(1, 1, 1), Axis::Z));
  CHECK(std::fabs(es.values[1] - 0.86602540378443865) < 1e-15);
  CHECK(sigma_op(Momentum(1, 1, 1), Axis::Z).unit() == SpinUnit::HBar);
}

TEST_CASE("v_op special cases") {
  CHECK(v_op(Momentum(0, 0, 0), Axis::X).matrix().norm() == 0.0);
  CHECK(v_op(Momentum(0, 0, 5), Axis::Z).matrix().norm() == 0.0);
  const EigenSystem2 es = eigh2(v_op(Momentum(1, 1, 0), Axis::Z));
  CHECK(std::fabs(es.values[1] - 0.70710678118654752) < 1e-15);
  CHECK(v_op(Momentum(1, 1, 0), Axis::Z).unit() == SpinUnit::HBarOverC);
}

TEST_CASE("closed-form eigenvalues") {
  CHECK(sigma_eigenvalue(Momentum(0, 0, 0), Axis::Z) == 0.5);
  CHECK(sigma_eigenvalue(Momentum(0, 0, 7), Axis::Z) == 0.5);
  CHECK(std::fabs(sigma_eigenvalue(Momentum(1, 1, 1), Axis::Z) - 0.86602540378443865) <
        1e-15);
  CHECK(v_eigenvalue(Momentum(0, 0, 9), Axis::Z) == 0.0);
  CHECK(std::fabs(v_eigenvalue(Momentum(1, 1, 0), Axis::Z) - 0.70710678118654752) <
        1e-15);
  CHECK(v_eigenvalue(Momentum(3, 4, 9), Axis::Z) == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("sigma eigenstates at special momenta") {
  const EigenPair rest = sigma_eigenstate(Momentum(0, 0, 0), Axis::Z, +1);
  CHECK(rest.value == 0.5);
  CHECK(rest.state.up() == cplx(1.0, 0.0));
  CHECK(rest.state.down() == cplx(0.0, 0.0));

  // momentum parallel to the axis: a^(-) vanishes analytically
  const EigenPair up = sigma_eigenstate(Momentum(0, 0, 3.7), Axis::Z, +1);
  const EigenPair dn = sigma_eigenstate(Momentum(0, 0, 3.7), Axis::Z, -1);
  CHECK(up.value == 0.5);
  CHECK(std::abs(up.state.up()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(up.state.down()) == 0.0);
  CHECK(dn.value == -0.5);
  CHECK(std::abs(dn.state.down()) == doctest::Approx(1.0).epsilon(1e-15));

  // generic momentum: agrees with the oracle up to a global phase
  const Momentum p(1, 1, 1);
  const EigenPair neg = sigma_eigenstate(p, Axis::Z, -1);
  const EigenSystem2 es = eigh2(sigma_op(p, Axis::Z));
  CHECK(std::fabs(neg.value - es.values[0]) < 1e-14);
  CHECK(same_ray(neg.state.amplitudes(), es.vectors[0]));

  CHECK_THROWS_AS(sigma_eigenstate(p, Axis::Z, 2), std::invalid_argument);
}

TEST_CASE("v eigenstates: nondegenerate and degenerate branches") {
  const Momentum p(1, 1, 0);
  const EigenPair plus = v_eigenstate(p, Axis::Z, +1);
  CHECK(std::fabs(plus.value - 0.70710678118654752) < 1e-15);
  CHECK(!plus.degenerate);
  const EigenSystem2 es = eigh2(v_op(p, Axis::Z));
  CHECK(same_ray(plus.state.amplitudes(), es.vectors[1]));

  // p along y only: value 1/2, orthogonal pair
  const EigenPair yp = v_eigenstate(Momentum(0, 1, 0), Axis::Z, +1);
  const EigenPair ym = v_eigenstate(Momentum(0, 1, 0), Axis::Z, -1);
  CHECK(yp.value == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(yp.state.amplitudes().dot(ym.state.amplitudes())) < 1e-15);

  // transverse momentum zero: degenerate, conventional pair
  const double r = 1.0 / std::sqrt(2.0);
  for (const int sign : {+1, -1}) {
    const EigenPair deg = v_eigenstate(Momentum(0, 0, 5), Axis::Z, sign);
    CHECK(deg.value == 0.0);
    CHECK(deg.degenerate);
    CHECK(deg.state.up() == cplx(r, 0.0));
    CHECK(deg.state.down() == cplx(sign * r, 0.0));
  }
}

TEST_CASE("closed-form spectra match eigh2 over random momenta") {
  SampleRng rng(777);
  double worst = 0.0;
  for (int n = 0; n < 10000; ++n) {
    const Momentum p = rng.momentum_in_ball(10.0);
    for (const Axis axis : kAxes) {
      const EigenSystem2 ses = eigh2(sigma_op(p, axis));
      const EigenSystem2 ves = eigh2(v_op(p, axis));
      const double s = sigma_eigenvalue(p, axis);
      const double mu = v_eigenvalue(p, axis);
      worst = std::max({worst, std::fabs(ses.values[0] + s), std::fabs(ses.values[1] - s),
                        std::fabs(ves.values[0] + mu), std::fabs(ves.values[1] - mu)});
      // traceless: the two branches are exact negatives
      CHECK(std::fabs(ses.values[0] + ses.values[1]) < 1e-12);
      CHECK(std::fabs(ves.values[0] + ves.values[1]) < 1e-12);
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("closed-form eigenstates: residual and orthonormality over random momenta") {
  SampleRng rng(778);
  for (int n = 0; n < 2000; ++n) {
    const Momentum p = rng.momentum_in_ball(10.0);
    for (const Axis axis : kAxes) {
      const HermitianOp2 sop = sigma_op(p, axis);
      const HermitianOp2 vop = v_op(p, axis);
      const EigenPair sp = sigma_eigenstate(p, axis, +1);
      const EigenPair sm = sigma_eigenstate(p, axis, -1);
      const EigenPair vp = v_eigenstate(p, axis, +1);
      const EigenPair vm = v_eigenstate(p, axis, -1);
      CHECK(eigen_residual(sop, sp) < 1e-10);
      CHECK(eigen_residual(sop, sm) < 1e-10);
      CHECK(eigen_residual(vop, vp) < 1e-10);
      CHECK(eigen_residual(vop, vm) < 1e-10);
      CHECK(std::abs(sp.state.amplitudes().dot(sm.state.amplitudes())) < 1e-10);
      CHECK(std::abs(vp.state.amplitudes().dot(vm.state.amplitudes())) < 1e-10);
    }
  }
}

TEST_CASE("eigenvalues are covariant under cyclic axis relabeling") {
  SampleRng rng(779);
  for (int n = 0; n < 1000; ++n) {
    const Momentum p = rng.momentum_in_ball(10.0);
    const Momentum fwd(p.p3(), p.p1(), p.p2());   // x->y->z->x on components
    const Momentum fwd2(p.p2(), p.p3(), p.p1());
    CHECK(sigma_eigenvalue(p, Axis::X) ==
          doctest::Approx(sigma_eigenvalue(fwd, Axis::Y)).epsilon(1e-15));
    CHECK(sigma_eigenvalue(p, Axis::X) ==
          doctest::Approx(sigma_eigenvalue(fwd2, Axis::Z)).epsilon(1e-15));
    CHECK(v_eigenvalue(p, Axis::X) ==
          doctest::Approx(v_eigenvalue(fwd, Axis::Y)).epsilon(1e-15));
    CHECK(v_eigenvalue(p, Axis::X) ==
          doctest::Approx(v_eigenvalue(fwd2, Axis::Z)).epsilon(1e-15));
  }
}

TEST_CASE("non-relativistic limit") {
  const Momentum tiny(1e-8 / std::sqrt(3.0), 1e-8 / std::sqrt(3.0), 1e-8 / std::sqrt(3.0));
  for (const Axis axis : kAxes) {
    CHECK(std::fabs(sigma_eigenvalue(tiny, axis) - 0.5) < 1e-8);
    CHECK(std::fabs(v_eigenvalue(tiny, axis)) < 1e-8);
  }
}

TEST_CASE("spin state validation") {
  const Momentum p(1, 2, 3);
  CHECK_THROWS_AS(SpinState(p, 1.0, 1.0), std::invalid_argument);
  const SpinState s = SpinState::normalized(p, 1.0, 1.0);
  CHECK(std::fabs(std::norm(s.up()) + std::norm(s.down()) - 1.0) < 1e-15);
  CHECK_THROWS_AS(SpinState::normalized(p, 0.0, 0.0), std::invalid_argument);
}
