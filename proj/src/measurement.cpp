#include "spintensor/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spintensor {

SpinState prepare(InputKind kind, const Momentum& p) {
  if (kind.kind == InputKind::Kind::IntrinsicUp) {
    return sigma_eigenstate(p, kind.axis, +1).state;
  }
  const Matrix2c u = basis_change(kind.axis);
  return SpinState(p, u(0, 0), u(1, 0));
}

double born_probability(const SpinState& state, const SpinState& eigenstate) {
  if (!(state.base() == eigenstate.base())) {
    throw std::invalid_argument("states live on different momentum fibers");
  }
  return std::norm(eigenstate.amplitudes().dot(state.amplitudes()));
}

std::vector<MeasurementOutcome> measure(const SpinState& state, Observable obs, Axis axis) {
  const Momentum& p = state.base();
  std::vector<MeasurementOutcome> outcomes;
  outcomes.reserve(2);

  if (obs == Observable::V && v_eigenstate(p, axis, +1).degenerate) {
    // Degenerate fiber: overlaps with the convention pair, computed in the
    // m^axis basis as |c_up +- c_down|^2 / 2 so the rest-frame probabilities
    // come out exact.
    const Vector2c c = basis_change(axis).adjoint() * state.amplitudes();
    for (const int sign : {+1, -1}) {
      const cplx comb = sign > 0 ? c(0) + c(1) : c(0) - c(1);
      outcomes.push_back(
          {0.0, 0.5 * std::norm(comb), v_eigenstate(p, axis, sign).state, true});
    }
    return outcomes;
  }

  for (const int sign : {+1, -1}) {
    const EigenPair ep = obs == Observable::Sigma ? sigma_eigenstate(p, axis, sign)
                                                  : v_eigenstate(p, axis, sign);
    outcomes.push_back({ep.value, born_probability(state, ep.state), ep.state, false});
  }
  return outcomes;
}

double prob_eq4(const Momentum& p) {
  const double s = sigma_eigenvalue(p, Axis::Z);
  const double e = energy(p);
  return 0.25 * (e - 2.0 * s) * (2.0 * s - 1.0) / (s * (1.0 + e));
}

double discrepancy_eq5(const Velocity& v) {
  const double inv_gamma = std::sqrt(1.0 - v.norm_sq());
  return -0.5 * v.v3() * v.v1() / ((inv_gamma + 1.0) * std::sqrt(1.0 - v.v3() * v.v3()));
}

double discrepancy_eq6_coords(double v1, double v3) {
  return -0.5 * v3 * v1 / (std::sqrt(1.0 - v1 * v1) * std::sqrt(1.0 - v3 * v3));
}

double discrepancy_eq6(const Velocity& v) {
  return discrepancy_eq6_coords(v.v1(), v.v3());
}

namespace {

double require_transverse(const Velocity& v) {
  const double rho = v.rho();
  if (rho <= kTransverseTol) {
    throw std::domain_error(
        "transverse velocity vanishes: V^3 is degenerate and the outcome "
        "direction is undefined");
  }
  return rho;
}

}  // namespace

double prob_eq7(const Velocity& v) {
  const double rho = require_transverse(v);
  return 0.5 * (1.0 - v.v2() / rho);
}

double prob_eq8(const Velocity& v) {
  const double rho = require_transverse(v);
  const double q = v.v2() / (rho * std::sqrt(1.0 - v.v1() * v.v1()));
  const double prob = 0.5 * (1.0 - q);
  if (prob < -1e-12 || prob > 1.0 + 1e-12) {
    throw std::domain_error("probability outside [0, 1]");
  }
  return std::clamp(prob, 0.0, 1.0);
}

const char* formula_name(Formula f) {
  switch (f) {
    case Formula::Eq4: return "eq4";
    case Formula::Eq5: return "eq5";
    case Formula::Eq6: return "eq6";
    case Formula::Eq7: return "eq7";
    default:           return "eq8";
  }
}

double closed_form_value(Formula f, const Velocity& v) {
  switch (f) {
    case Formula::Eq4: return prob_eq4(momentum_from_velocity(v));
    case Formula::Eq5: return discrepancy_eq5(v);
    case Formula::Eq6: return discrepancy_eq6(v);
    case Formula::Eq7: return prob_eq7(v);
    default:           return prob_eq8(v);
  }
}

double born_pipeline_value(Formula f, const Velocity& v) {
  const Momentum p = momentum_from_velocity(v);
  switch (f) {
    case Formula::Eq4:
      return born_probability(prepare(InputKind::wigner_up(Axis::Z), p),
                              sigma_eigenstate(p, Axis::Z, -1).state);
    case Formula::Eq5:
      return born_probability(prepare(InputKind::wigner_up(Axis::X), p),
                              sigma_eigenstate(p, Axis::Z, +1).state) -
             0.5;
    case Formula::Eq6:
      return born_probability(prepare(InputKind::intrinsic_up(Axis::X), p),
                              sigma_eigenstate(p, Axis::Z, +1).state) -
             0.5;
    case Formula::Eq7:
      return born_probability(prepare(InputKind::wigner_up(Axis::X), p),
                              v_eigenstate(p, Axis::Z, +1).state);
    default:
      return born_probability(prepare(InputKind::intrinsic_up(Axis::X), p),
                              v_eigenstate(p, Axis::Z, +1).state);
  }
}

}  // namespace spintensor
