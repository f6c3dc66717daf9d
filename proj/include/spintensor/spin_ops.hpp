#pragma once

#include "spintensor/spin_state.hpp"

namespace spintensor {

/// Spin-1/2 angular momentum matrix for one axis in the m3 basis,
/// eigenvalues +-1/2 (unit hbar).
HermitianOp2 wigner_spin_op(Axis axis);

/// Unitary whose columns are the m^axis = +1/2 and -1/2 eigenstates of
/// wigner_spin_op(axis), expressed in m3 components. Convention:
///   x: (1, 1)/sqrt2 and (1, -1)/sqrt2
///   y: (1, i)/sqrt2 and (1, -i)/sqrt2
///   z: identity
Matrix2c basis_change(Axis axis);

/// Angular-momentum component of the intrinsic spin tensor on the fiber at p:
/// E_p * S_perp + S_par, with S_par = (S.phat) phat. Reduces to the Wigner
/// spin exactly at p = 0. Unit hbar.
HermitianOp2 sigma_op(const Momentum& p, Axis axis);

/// Mass-momentum component of the intrinsic spin tensor: (p x S)_axis.
/// Unit hbar/c; traceless; vanishes at rest or for p parallel to the axis.
HermitianOp2 v_op(const Momentum& p, Axis axis);

/// Positive eigenvalue branch s_p^i = (1/2) sqrt(1 + pj^2 + pk^2) of
/// sigma_op; depends only on the momentum transverse to the axis.
double sigma_eigenvalue(const Momentum& p, Axis axis);

/// Positive eigenvalue branch mu_p^i = (1/2) sqrt(pj^2 + pk^2) of v_op.
double v_eigenvalue(const Momentum& p, Axis axis);

/// Closed-form eigenpair (sign * s_p^i, state) of sigma_op. The state is
/// returned in m3 components; its global phase makes the m^axis = sign/2
/// coefficient real nonnegative.
EigenPair sigma_eigenstate(const Momentum& p, Axis axis, int sign);

/// Closed-form eigenpair (sign * mu_p^i, state) of v_op. For transverse
/// momentum below kTransverseTol the spectrum collapses to a doubly
/// degenerate 0; the conventional pair (|m^i=+1/2> +- |m^i=-1/2>)/sqrt2 is
/// returned with the degenerate flag set.
EigenPair v_eigenstate(const Momentum& p, Axis axis, int sign);

}  // namespace spintensor
