#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spintensor/measurement.hpp"

namespace spintensor {

struct CheckResult {
  std::string name;
  std::size_t samples = 0;
  double max_abs_dev = 0.0;
  double tolerance = 0.0;

  bool pass() const { return max_abs_dev <= tolerance; }
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

/// Seeded cross-check suite: closed-form spectra/eigenstates against the
/// eigh2 oracle over momenta with |p| <= 10, and every closed-form
/// probability against both the Born pipeline and the oracle-only path over
/// velocities with |v| <= 0.99.
ValidationReport run_validation(std::size_t samples, std::uint64_t seed);

/// Probability computed through eigh2 only (oracle eigenvectors on both the
/// preparation and measurement side for intrinsic inputs).
double oracle_path_value(Formula f, const Velocity& v);

}  // namespace spintensor
