#pragma once

#include <vector>

#include "spintensor/spin_ops.hpp"

namespace spintensor {

/// Which fiber observable a measurement selects: a laboratory magnetic field
/// along an axis selects the Sigma component, an electric field the V
/// component.
enum class Observable { Sigma, V };

struct MeasurementOutcome {
  double eigenvalue;    // in the observable's unit
  double probability;   // Born rule, in [0, 1]
  SpinState post_state;
  bool degenerate = false;
};

/// Prepared input state: either the Wigner basis ket |p, m^axis = +1/2> or
/// the positive intrinsic eigenstate |p, +s_p^axis>.
struct InputKind {
  enum class Kind { WignerUp, IntrinsicUp };
  Kind kind;
  Axis axis;

  static InputKind wigner_up(Axis a) { return {Kind::WignerUp, a}; }
  static InputKind intrinsic_up(Axis a) { return {Kind::IntrinsicUp, a}; }
};

SpinState prepare(InputKind kind, const Momentum& p);

/// |<eigenstate|state>|^2. Both states must live on the same momentum fiber.
double born_probability(const SpinState& state, const SpinState& eigenstate);

/// Projective measurement of one observable component: both eigenvalue
/// branches with Born probabilities and post-measurement states, positive
/// branch first. The degenerate V case reports the convention states with
/// eigenvalue 0 and the degenerate flag; its rest-frame probabilities are
/// exact by construction.
std::vector<MeasurementOutcome> measure(const SpinState& state, Observable obs, Axis axis);

// Closed-form probabilities and discrepancies. Velocity is the public
// parameterization; eq4 converts through p = gamma*v internally.

/// Probability of the -s_p^3 outcome when measuring Sigma^3 on |p, m3=+1/2>:
/// (1/4) (E - 2 s)(2 s - 1) / (s (1 + E)) with s = s_p^3.
double prob_eq4(const Momentum& p);

/// P(+s_p^3) - 1/2 for input |p, m1=+1/2> measured along Sigma^3:
/// -(1/2) v3 v1 / ((1/gamma + 1) sqrt(1 - v3^2)).
double discrepancy_eq5(const Velocity& v);

/// P(+s_p^3) - 1/2 for input |p, +s_p^1> measured along Sigma^3:
/// -(1/2) v3 v1 / (sqrt(1 - v1^2) sqrt(1 - v3^2)). Gamma-free, so it extends
/// continuously to |v| = 1; the coords overload evaluates it there.
double discrepancy_eq6(const Velocity& v);
double discrepancy_eq6_coords(double v1, double v3);

/// P(+mu_p^3) for input |p, m1=+1/2>: (1/2)(1 - v2/rho_v). Throws when
/// rho_v <= kTransverseTol (transverse direction undefined, V^3 degenerate).
double prob_eq7(const Velocity& v);

/// P(+mu_p^3) for input |p, +s_p^1>: (1/2)(1 - v2/(rho_v sqrt(1 - v1^2))).
/// Same singular-direction error as prob_eq7; result checked against [0, 1].
double prob_eq8(const Velocity& v);

enum class Formula { Eq4, Eq5, Eq6, Eq7, Eq8 };

const char* formula_name(Formula f);

/// The closed forms above, dispatched on the enum (eq4 via p = gamma*v).
double closed_form_value(Formula f, const Velocity& v);

/// The same quantities computed through prepare/born_probability with the
/// closed-form eigenstates; must agree with closed_form_value to 1e-12.
double born_pipeline_value(Formula f, const Velocity& v);

}  // namespace spintensor
