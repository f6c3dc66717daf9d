#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "spintensor/measurement.hpp"
#include "spintensor/rng.hpp"

using namespace spintensor;

namespace {

constexpr Formula kFormulas[] = {Formula::Eq4, Formula::Eq5, Formula::Eq6,
                                 Formula::Eq7, Formula::Eq8};

Velocity transverse_velocity(SampleRng& rng, double radius) {
  for (;;) {
    const Velocity v = rng.velocity_in_ball(radius);
    if (v.rho() > 1e-9) return v;
  }
}

}  // namespace

TEST_CASE("prepare") {
  const Momentum p(0.3, -0.2, 1.1);
  const SpinState wz = prepare(InputKind::wigner_up(Axis::Z), p);
  CHECK(wz.up() == cplx(1.0, 0.0));
  CHECK(wz.down() == cplx(0.0, 0.0));

  const double r = 1.0 / std::sqrt(2.0);
  const SpinState wx = prepare(InputKind::wigner_up(Axis::X), p);
  CHECK(wx.up() == cplx(r, 0.0));
  CHECK(wx.down() == cplx(r, 0.0));

  const SpinState iz = prepare(InputKind::intrinsic_up(Axis::Z), Momentum(0, 0, 0));
  CHECK(iz.up() == cplx(1.0, 0.0));
}

TEST_CASE("born probability basics and fiber mismatch") {
  const Momentum p(1, 0, 0);
  const SpinState up(p, 1.0, 0.0);
  const SpinState down(p, 0.0, 1.0);
  const SpinState diag = SpinState::normalized(p, 1.0, 1.0);
  CHECK(born_probability(up, up) == 1.0);
  CHECK(born_probability(up, down) == 0.0);
  CHECK(born_probability(up, diag) == doctest::Approx(0.5).epsilon(1e-14));
  const SpinState other(Momentum(2, 0, 0), 1.0, 0.0);
  CHECK_THROWS_AS(born_probability(up, other), std::invalid_argument);
}

TEST_CASE("measure: rest-frame sigma") {
  const Momentum p(0, 0, 0);
  const auto outcomes = measure(prepare(InputKind::wigner_up(Axis::Z), p),
                                Observable::Sigma, Axis::Z);
  REQUIRE(outcomes.size() == 2);
  CHECK(outcomes[0].eigenvalue == 0.5);
  CHECK(outcomes[0].probability == 1.0);
  CHECK(outcomes[1].eigenvalue == -0.5);
  CHECK(outcomes[1].probability == 0.0);
}

TEST_CASE("measure: negative sigma branch carries the eq4 probability") {
  const Momentum p(1, 1, 1);
  const auto outcomes = measure(prepare(InputKind::wigner_up(Axis::Z), p),
                                Observable::Sigma, Axis::Z);
  CHECK(std::fabs(outcomes[1].probability - prob_eq4(p)) < 1e-15);
  CHECK(std::fabs(outcomes[0].probability + outcomes[1].probability - 1.0) < 1e-15);
}

TEST_CASE("measure: degenerate V fiber gives exact half/half") {
  const Momentum p(0, 0, 5);
  const auto outcomes = measure(prepare(InputKind::wigner_up(Axis::Z), p),
                                Observable::V, Axis::Z);
  REQUIRE(outcomes.size() == 2);
  for (const auto& o : outcomes) {
    CHECK(o.eigenvalue == 0.0);
    CHECK(o.probability == 0.5);  // exact, not approximate
    CHECK(o.degenerate);
  }
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(outcomes[0].post_state.up() == cplx(r, 0.0));
  CHECK(outcomes[0].post_state.down() == cplx(r, 0.0));
  CHECK(outcomes[1].post_state.down() == cplx(-r, 0.0));
}

TEST_CASE("prob_eq4 examples") {
  CHECK(prob_eq4(Momentum(0, 0, 0)) == 0.0);
  CHECK(prob_eq4(Momentum(0, 0, 4.2)) == 0.0);  // (2s-1) factor is exactly zero
  // frozen: (9 - 5 sqrt 3)/18
  CHECK(std::fabs(prob_eq4(Momentum(1, 1, 1)) - 0.018874775675311863) < 1e-15);
}

TEST_CASE("discrepancy_eq5 examples and symmetry") {
  CHECK(discrepancy_eq5(Velocity(0.5, 0, 0)) == 0.0);
  CHECK(std::fabs(discrepancy_eq5(Velocity(0.529, 0, 0.6)) - -0.1239741095274089) <
        1e-15);
  SampleRng rng(31);
  for (int n = 0; n < 200; ++n) {
    const Velocity v = rng.velocity_in_ball(0.99);
    const Velocity flip3(v.v1(), v.v2(), -v.v3());
    const Velocity flip1(-v.v1(), v.v2(), v.v3());
    CHECK(discrepancy_eq5(flip3) == doctest::Approx(-discrepancy_eq5(v)).epsilon(1e-14));
    CHECK(discrepancy_eq5(flip1) == doctest::Approx(-discrepancy_eq5(v)).epsilon(1e-14));
    CHECK(discrepancy_eq6(flip3) == doctest::Approx(-discrepancy_eq6(v)).epsilon(1e-14));
    CHECK(discrepancy_eq6(flip1) == doctest::Approx(-discrepancy_eq6(v)).epsilon(1e-14));
  }
}

TEST_CASE("discrepancy_eq6 examples") {
  CHECK(discrepancy_eq6(Velocity(0, 0.9, 0)) == 0.0);
  CHECK(std::fabs(discrepancy_eq6(Velocity(0.3536, 0, 0.3536)) - -0.071450097137373312) <
        1e-15);
  const double c = 0.5 / std::sqrt(2.0);
  CHECK(std::fabs(discrepancy_eq6(Velocity(c, 0, c)) - -1.0 / 14.0) < 1e-15);
  // value is independent of v2
  CHECK(discrepancy_eq6(Velocity(0.3, 0.5, 0.4)) ==
        discrepancy_eq6(Velocity(0.3, 0.0, 0.4)));
}

TEST_CASE("prob_eq7 examples and the undefined-direction error") {
  CHECK(prob_eq7(Velocity(0.5, 0, 0.3)) == 0.5);
  CHECK(prob_eq7(Velocity(0, 0.5, 0)) == 0.0);
  CHECK(std::fabs(prob_eq7(Velocity(0.3, 0.4, 0.2)) - 0.1) < 1e-15);
  CHECK_THROWS_AS(prob_eq7(Velocity(0, 0, 0.9)), std::domain_error);
  CHECK_THROWS_AS(prob_eq8(Velocity(0, 0, 0.9)), std::domain_error);
}

TEST_CASE("prob_eq8 examples") {
  CHECK(prob_eq8(Velocity(0.5, 0, 0.3)) == 0.5);
  CHECK(prob_eq8(Velocity(0, 0.5, 0.1)) == 0.0);
  CHECK(std::fabs(prob_eq8(Velocity(0.3, 0.4, 0)) - 0.080686065311232682) < 1e-15);
}

TEST_CASE("closed forms equal the Born pipeline over random velocities") {
  SampleRng rng(32);
  double worst = 0.0;
  for (int n = 0; n < 10000; ++n) {
    const Velocity v = transverse_velocity(rng, 0.99);
    for (const Formula f : kFormulas) {
      worst = std::max(worst,
                       std::fabs(closed_form_value(f, v) - born_pipeline_value(f, v)));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("outcome probabilities always sum to 1") {
  SampleRng rng(33);
  for (int n = 0; n < 2000; ++n) {
    const Velocity v = transverse_velocity(rng, 0.99);
    const Momentum p = momentum_from_velocity(v);
    for (const auto kind :
         {InputKind::wigner_up(Axis::X), InputKind::intrinsic_up(Axis::Y)}) {
      const SpinState in = prepare(kind, p);
      for (const Observable obs : {Observable::Sigma, Observable::V}) {
        const auto outcomes = measure(in, obs, Axis::Z);
        CHECK(std::fabs(outcomes[0].probability + outcomes[1].probability - 1.0) <
              1e-12);
      }
    }
  }
}

TEST_CASE("eq4 range on the physical domain") {
  // At fixed |v3| the value grows monotonically with gamma towards
  // (1 - sqrt(1 - v3^2))/2, so the global supremum is 1/2 and the 1/4 bound
  // holds exactly on |v3| <= sqrt(3)/2.
  SampleRng rng(34);
  for (int n = 0; n < 5000; ++n) {
    const Velocity v = rng.velocity_in_ball(0.999999);
    const double val = prob_eq4(momentum_from_velocity(v));
    CHECK(val >= 0.0);
    CHECK(val < 0.5);
    if (std::fabs(v.v3()) <= std::sqrt(3.0) / 2.0) CHECK(val < 0.25);
  }
  // the limit band above 1/4 is reachable
  const double high = prob_eq4(momentum_from_velocity(
      Velocity(std::sqrt(0.99999999 - 0.99 * 0.99), 0.0, 0.99)));
  CHECK(high > 0.25);
  CHECK(high < 0.5);
}

TEST_CASE("eq7/eq8 pipeline values do not depend on v3") {
  SampleRng rng(35);
  for (int n = 0; n < 300; ++n) {
    double v1 = 0.0, v2 = 0.0;
    do {
      v1 = rng.uniform(-0.43, 0.43);
      v2 = rng.uniform(-0.43, 0.43);
    } while (v1 * v1 + v2 * v2 >= 0.43 * 0.43 || std::sqrt(v1 * v1 + v2 * v2) <= 1e-9);
    const double ref7 = born_pipeline_value(Formula::Eq7, Velocity(v1, v2, 0));
    const double ref8 = born_pipeline_value(Formula::Eq8, Velocity(v1, v2, 0));
    for (const double v3 : {0.3, -0.3, 0.9, -0.9}) {
      CHECK(std::fabs(born_pipeline_value(Formula::Eq7, Velocity(v1, v2, v3)) - ref7) <
            1e-12);
      CHECK(std::fabs(born_pipeline_value(Formula::Eq8, Velocity(v1, v2, v3)) - ref8) <
            1e-12);
    }
  }
}

TEST_CASE("non-relativistic limit of eq4-eq6") {
  const double c = 1e-4 / std::sqrt(2.0);
  const Velocity v(c, 0, c);
  CHECK(std::fabs(prob_eq4(momentum_from_velocity(v))) < 1e-8);
  CHECK(std::fabs(discrepancy_eq5(v)) < 1e-8);
  CHECK(std::fabs(discrepancy_eq6(v)) < 1e-8);
}
