#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spintensor {

enum class FormulaId { Eq4Map, Eq5Map, Eq6Map, Eq78DiffMap };
const char* formula_id_name(FormulaId id);  // "EQ4_MAP", ...

struct GridAxis {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  int samples = 2;

  double coord(int k) const {
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(samples - 1);
  }
};

/// Deterministic 2-D sampled field with NaN sentinel at out-of-domain or
/// singular lattice points. Values are row-major with x varying fastest.
struct ProbabilityGrid {
  FormulaId formula_id = FormulaId::Eq4Map;
  GridAxis x, y;
  std::vector<std::pair<std::string, double>> fixed_params;
  std::vector<double> values;

  double at(int ix, int iy) const {
    return values[static_cast<std::size_t>(iy) * x.samples + ix];
  }
};

struct ContourPolyline {
  double level;
  std::vector<std::array<double, 2>> points;  // (x, y) grid coordinates
};

struct Fig1Result {
  ProbabilityGrid grid;
  std::vector<ContourPolyline> contours;
};

struct BoundarySample {
  double v3_abs;
  double vnorm;
};

/// Level set prob_eq4 = delta in (|v3|, |v|) coordinates, with the minima
/// over the sampled curve. Empty curves carry NaN minima.
struct BoundaryCurve {
  double delta;
  std::vector<BoundarySample> samples;
  double min_vnorm;
  double min_v3;
};

/// Samples prob_eq4(gamma*v) over (v3, rho_v) in [-1,1] x [0,1], masking the
/// exterior of the unit disk, and extracts delta-level contour polylines.
Fig1Result map_fig1(int resolution, const std::vector<double>& deltas);

/// For each delta and each |v3| abscissa, locates the rho roots of
/// prob_eq4(gamma*v) = delta by a 512-point bracketing presample plus
/// bisection, and converts them to velocity norms.
std::vector<BoundaryCurve> curve_fig2(const std::vector<double>& deltas, int resolution);

/// Samples discrepancy eq5 or eq6 over the fixed [-1,1]^2 (v1, v3) lattice,
/// in-domain on the disk v1^2 + v3^2 <= vnorm^2 (open disk for eq6 at
/// vnorm = 1). Keeping the lattice independent of vnorm makes the eq6 maps
/// literal crops of each other.
ProbabilityGrid map_fig34(FormulaId formula, double vnorm, int resolution);

/// Samples prob_eq8 - prob_eq7 over (v1, v2) in the open unit disk at
/// v3 = 0 (both formulas are v3-independent); the rho_v ~ 0 center is the
/// NaN sentinel.
ProbabilityGrid map_fig5(int resolution);

/// Marching squares with linear interpolation on cell edges; cells touching
/// NaN corners are skipped, so contours terminate at the domain mask.
std::vector<ContourPolyline> extract_contours(const ProbabilityGrid& grid,
                                              const std::vector<double>& levels);

// --- serialization -------------------------------------------------------

/// 17-significant-digit rendering; NaN prints as "nan".
std::string format_g17(double x);

std::uint64_t fnv1a64(std::string_view bytes);

/// Header "x,y,value", one row per lattice point, x fastest.
std::string grid_to_csv(const ProbabilityGrid& grid);

/// Header "delta,polyline,<x>,<y>", vertices in chain order.
std::string contours_to_csv(const std::vector<ContourPolyline>& contours,
                            const std::string& x_name, const std::string& y_name);

/// Header "delta,v3_abs,vnorm".
std::string curves_to_csv(const std::vector<BoundaryCurve>& curves);

/// Metadata JSON for a grid: formula id, axes, resolution, fixed params and
/// the FNV-1a digest of the CSV payload it describes.
std::string grid_metadata_json(const ProbabilityGrid& grid, const std::string& csv_text,
                               const std::string& csv_filename);

inline constexpr std::array<double, 5> kDefaultDeltas = {0.001, 0.005, 0.01, 0.02, 0.05};

}  // namespace spintensor
