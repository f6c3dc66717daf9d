#pragma once

#include <array>

#include "spintensor/spin_state.hpp"

namespace spintensor {

// Independent verification path. This module diagonalizes fiber observables
// with the generic trace/determinant closed form for 2x2 Hermitian matrices
// and must stay free of the model-specific spectra in spin_ops and the
// probability formulas in measurement, so the two routes can check each
// other.

struct EigenSystem2 {
  std::array<double, 2> values;     // sorted ascending
  std::array<Vector2c, 2> vectors;  // orthonormal; phase fixed so the
                                    // largest-magnitude component is real
                                    // nonnegative
  bool degenerate = false;          // |values[1] - values[0]| < 1e-12
};

/// Exact 2x2 Hermitian eigendecomposition: lambda = (tr +- sqrt(tr^2 -
/// 4 det))/2 with stable row selection for the eigenvectors. The degenerate
/// case returns the canonical basis vectors.
EigenSystem2 eigh2(const HermitianOp2& op);

/// Born probability |<eigenvector(branch)|input>|^2 computed from eigh2
/// alone; branch +1/-1 selects the upper/lower eigenvalue. For a degenerate
/// operator the probability of the whole eigenspace is returned.
double oracle_probability(const SpinState& input, const HermitianOp2& op, int branch);

}  // namespace spintensor
