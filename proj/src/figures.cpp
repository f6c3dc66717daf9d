#include "spintensor/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "spintensor/measurement.hpp"

namespace spintensor {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_resolution(int resolution) {
  if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
}

void require_deltas(const std::vector<double>& deltas) {
  for (const double d : deltas) {
    if (!(d > 0.0 && d < 0.25)) {
      throw std::invalid_argument("significance bounds must lie in (0, 0.25)");
    }
  }
}

double eq4_at(double rho, double v3) {
  return prob_eq4(momentum_from_velocity(Velocity(rho, 0.0, v3)));
}

}  // namespace

const char* formula_id_name(FormulaId id) {
  switch (id) {
    case FormulaId::Eq4Map:     return "EQ4_MAP";
    case FormulaId::Eq5Map:     return "EQ5_MAP";
    case FormulaId::Eq6Map:     return "EQ6_MAP";
    default:                    return "EQ78_DIFF_MAP";
  }
}

Fig1Result map_fig1(int resolution, const std::vector<double>& deltas) {
  require_resolution(resolution);
  require_deltas(deltas);

  ProbabilityGrid g;
  g.formula_id = FormulaId::Eq4Map;
  g.x = {"v3", -1.0, 1.0, resolution};
  g.y = {"rho_v", 0.0, 1.0, resolution};
  g.values.assign(static_cast<std::size_t>(resolution) * resolution, kNaN);

  for (int iy = 0; iy < resolution; ++iy) {
    const double rho = g.y.coord(iy);
    for (int ix = 0; ix < resolution; ++ix) {
      const double v3 = g.x.coord(ix);
      const double r2 = v3 * v3 + rho * rho;
      if (r2 >= 1.0 || std::sqrt(r2) >= kVelocityLimit) continue;
      g.values[static_cast<std::size_t>(iy) * resolution + ix] = eq4_at(rho, v3);
    }
  }
  return {g, extract_contours(g, deltas)};
}

ProbabilityGrid map_fig34(FormulaId formula, double vnorm, int resolution) {
  require_resolution(resolution);
  if (formula != FormulaId::Eq5Map && formula != FormulaId::Eq6Map) {
    throw std::invalid_argument("fig 3/4 maps take EQ5_MAP or EQ6_MAP");
  }
  if (formula == FormulaId::Eq5Map && !(vnorm > 0.0 && vnorm < kVelocityLimit)) {
    throw std::invalid_argument("eq5 map requires 0 < vnorm < 1");
  }
  if (formula == FormulaId::Eq6Map && !(vnorm > 0.0 && vnorm <= 1.0)) {
    throw std::invalid_argument("eq6 map requires 0 < vnorm <= 1");
  }

  ProbabilityGrid g;
  g.formula_id = formula;
  g.x = {"v1", -1.0, 1.0, resolution};
  g.y = {"v3", -1.0, 1.0, resolution};
  g.fixed_params = {{"vnorm", vnorm}};
  g.values.assign(static_cast<std::size_t>(resolution) * resolution, kNaN);

  const bool open_disk = formula == FormulaId::Eq6Map && vnorm == 1.0;
  const double r2_max = vnorm * vnorm;

  for (int iy = 0; iy < resolution; ++iy) {
    const double v3 = g.y.coord(iy);
    for (int ix = 0; ix < resolution; ++ix) {
      const double v1 = g.x.coord(ix);
      const double r2 = v1 * v1 + v3 * v3;
      if (open_disk ? r2 >= 1.0 : r2 > r2_max) continue;
      double value;
      if (formula == FormulaId::Eq6Map && vnorm == 1.0) {
        value = discrepancy_eq6_coords(v1, v3);
      } else {
        // v2 completes the velocity to the fixed norm; neither formula
        // depends on it once vnorm is fixed.
        const double v2 = std::sqrt(std::max(0.0, r2_max - r2));
        const Velocity v(v1, v2, v3);
        value = formula == FormulaId::Eq5Map ? discrepancy_eq5(v) : discrepancy_eq6(v);
      }
      g.values[static_cast<std::size_t>(iy) * resolution + ix] = value;
    }
  }
  return g;
}

ProbabilityGrid map_fig5(int resolution) {
  require_resolution(resolution);

  ProbabilityGrid g;
  g.formula_id = FormulaId::Eq78DiffMap;
  g.x = {"v1", -1.0, 1.0, resolution};
  g.y = {"v2", -1.0, 1.0, resolution};
  g.values.assign(static_cast<std::size_t>(resolution) * resolution, kNaN);

  for (int iy = 0; iy < resolution; ++iy) {
    const double v2 = g.y.coord(iy);
    for (int ix = 0; ix < resolution; ++ix) {
      const double v1 = g.x.coord(ix);
      const double r2 = v1 * v1 + v2 * v2;
      const double rho = std::sqrt(r2);
      if (r2 >= 1.0 || rho >= kVelocityLimit || rho <= kTransverseTol) continue;
      const Velocity v(v1, v2, 0.0);
      g.values[static_cast<std::size_t>(iy) * resolution + ix] =
          prob_eq8(v) - prob_eq7(v);
    }
  }
  return g;
}

namespace {

// Bisect a bracketed sign change of f down to double resolution; the
// boundary-curve contract re-evaluates every root to 1e-9, which needs the
// full precision near the light cone where d(eq4)/d(rho) grows with gamma.
template <typename F>
double bisect(const F& f, double lo, double hi, double f_lo) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((f_lo < 0.0) == (fm < 0.0)) {
      lo = mid;
      f_lo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<BoundaryCurve> curve_fig2(const std::vector<double>& deltas, int resolution) {
  require_resolution(resolution);
  require_deltas(deltas);

  constexpr int kPresample = 512;    // brackets sign changes; eq4 is not
                                     // guaranteed monotonic in rho
  constexpr double kCap = 1.0 - 2e-12;  // stay strictly inside the velocity limit

  std::vector<BoundaryCurve> curves;
  curves.reserve(deltas.size());
  for (const double delta : deltas) {
    BoundaryCurve c{delta, {}, kNaN, kNaN};
    for (int k = 0; k < resolution; ++k) {
      const double t = (k + 0.5) / resolution;  // |v3| abscissa in (0, 1)
      const double rho_max2 = kCap * kCap - t * t;
      if (rho_max2 <= 0.0) continue;
      const double rho_max = std::sqrt(rho_max2);
      const auto f = [&](double rho) { return eq4_at(rho, t) - delta; };

      double prev_rho = 0.0;
      double prev_f = -delta;  // eq4 vanishes exactly at rho = 0
      for (int m = 1; m <= kPresample; ++m) {
        const double rho = rho_max * m / kPresample;
        const double fv = f(rho);
        if (fv == 0.0) {
          c.samples.push_back({t, std::sqrt(t * t + rho * rho)});
        } else if (prev_f != 0.0 && (prev_f < 0.0) != (fv < 0.0)) {
          const double root = bisect(f, prev_rho, rho, prev_f);
          c.samples.push_back({t, std::sqrt(t * t + root * root)});
        }
        prev_rho = rho;
        prev_f = fv;
      }
    }
    for (const BoundarySample& s : c.samples) {
      c.min_vnorm = std::isnan(c.min_vnorm) ? s.vnorm : std::min(c.min_vnorm, s.vnorm);
      c.min_v3 = std::isnan(c.min_v3) ? s.v3_abs : std::min(c.min_v3, s.v3_abs);
    }
    curves.push_back(std::move(c));
  }
  return curves;
}

// ---- marching squares ----------------------------------------------------

namespace {

struct EdgeCrossings {
  // crossing point per edge id; edges are shared between cells so endpoints
  // are bitwise identical and chains can be stitched by integer id
  std::unordered_map<int, std::array<double, 2>> point;
};

int hedge_id(int ix, int iy, int nx) { return iy * (nx - 1) + ix; }
int vedge_id(int ix, int iy, int nx, int ny) { return (nx - 1) * ny + iy * nx + ix; }

double lerp_t(double f0, double f1, double level) {
  return (level - f0) / (f1 - f0);
}

}  // namespace

std::vector<ContourPolyline> extract_contours(const ProbabilityGrid& g,
                                              const std::vector<double>& levels) {
  const int nx = g.x.samples;
  const int ny = g.y.samples;
  std::vector<ContourPolyline> out;

  for (const double level : levels) {
    EdgeCrossings ec;
    const auto inside = [&](double v) { return v >= level; };

    for (int iy = 0; iy < ny; ++iy) {
      for (int ix = 0; ix + 1 < nx; ++ix) {
        const double f0 = g.at(ix, iy), f1 = g.at(ix + 1, iy);
        if (std::isnan(f0) || std::isnan(f1) || inside(f0) == inside(f1)) continue;
        const double t = lerp_t(f0, f1, level);
        ec.point[hedge_id(ix, iy, nx)] = {g.x.coord(ix) + t * (g.x.coord(ix + 1) - g.x.coord(ix)),
                                          g.y.coord(iy)};
      }
    }
    for (int iy = 0; iy + 1 < ny; ++iy) {
      for (int ix = 0; ix < nx; ++ix) {
        const double f0 = g.at(ix, iy), f1 = g.at(ix, iy + 1);
        if (std::isnan(f0) || std::isnan(f1) || inside(f0) == inside(f1)) continue;
        const double t = lerp_t(f0, f1, level);
        ec.point[vedge_id(ix, iy, nx, ny)] = {g.x.coord(ix),
                                              g.y.coord(iy) + t * (g.y.coord(iy + 1) - g.y.coord(iy))};
      }
    }

    // per-cell segments between edge ids
    std::vector<std::array<int, 2>> segs;
    for (int iy = 0; iy + 1 < ny; ++iy) {
      for (int ix = 0; ix + 1 < nx; ++ix) {
        const double f00 = g.at(ix, iy), f10 = g.at(ix + 1, iy);
        const double f11 = g.at(ix + 1, iy + 1), f01 = g.at(ix, iy + 1);
        if (std::isnan(f00) || std::isnan(f10) || std::isnan(f11) || std::isnan(f01)) continue;

        const int idx = (inside(f00) ? 1 : 0) | (inside(f10) ? 2 : 0) |
                        (inside(f11) ? 4 : 0) | (inside(f01) ? 8 : 0);
        if (idx == 0 || idx == 15) continue;

        const int bottom = hedge_id(ix, iy, nx);
        const int top = hedge_id(ix, iy + 1, nx);
        const int left = vedge_id(ix, iy, nx, ny);
        const int right = vedge_id(ix + 1, iy, nx, ny);

        switch (idx) {
          case 1:  case 14: segs.push_back({bottom, left}); break;
          case 2:  case 13: segs.push_back({bottom, right}); break;
          case 3:  case 12: segs.push_back({left, right}); break;
          case 4:  case 11: segs.push_back({right, top}); break;
          case 6:  case 9:  segs.push_back({bottom, top}); break;
          case 7:  case 8:  segs.push_back({top, left}); break;
          case 5: {
            // saddle; disambiguate with the cell-center average
            const bool center_in = inside(0.25 * (f00 + f10 + f11 + f01));
            if (center_in) {
              segs.push_back({bottom, right});
              segs.push_back({top, left});
            } else {
              segs.push_back({bottom, left});
              segs.push_back({right, top});
            }
            break;
          }
          case 10: {
            const bool center_in = inside(0.25 * (f00 + f10 + f11 + f01));
            if (center_in) {
              segs.push_back({bottom, left});
              segs.push_back({right, top});
            } else {
              segs.push_back({bottom, right});
              segs.push_back({top, left});
            }
            break;
          }
          default: break;
        }
      }
    }

    // stitch segments into polylines; always extend with the lowest-index
    // unused segment so the output is order-deterministic
    std::unordered_map<int, std::vector<int>> by_edge;
    for (int i = 0; i < static_cast<int>(segs.size()); ++i) {
      by_edge[segs[i][0]].push_back(i);
      by_edge[segs[i][1]].push_back(i);
    }
    std::vector<char> used(segs.size(), 0);
    const auto next_unused = [&](int edge, int self) -> int {
      const auto it = by_edge.find(edge);
      if (it == by_edge.end()) return -1;
      for (const int si : it->second) {
        if (!used[si] && si != self) return si;
      }
      return -1;
    };

    for (int start = 0; start < static_cast<int>(segs.size()); ++start) {
      if (used[start]) continue;
      used[start] = 1;
      std::vector<int> chain = {segs[start][0], segs[start][1]};
      for (;;) {  // forward
        const int si = next_unused(chain.back(), -1);
        if (si < 0) break;
        used[si] = 1;
        chain.push_back(segs[si][0] == chain.back() ? segs[si][1] : segs[si][0]);
      }
      for (;;) {  // backward
        const int si = next_unused(chain.front(), -1);
        if (si < 0) break;
        used[si] = 1;
        chain.insert(chain.begin(),
                     segs[si][0] == chain.front() ? segs[si][1] : segs[si][0]);
      }
      ContourPolyline poly{level, {}};
      poly.points.reserve(chain.size());
      for (const int edge : chain) poly.points.push_back(ec.point.at(edge));
      out.push_back(std::move(poly));
    }
  }
  return out;
}

// ---- serialization -------------------------------------------------------

std::string format_g17(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string grid_to_csv(const ProbabilityGrid& g) {
  std::string out;
  out.reserve(static_cast<std::size_t>(g.x.samples) * g.y.samples * 48);
  out += g.x.name + "," + g.y.name + ",value\n";
  for (int iy = 0; iy < g.y.samples; ++iy) {
    const std::string ys = format_g17(g.y.coord(iy));
    for (int ix = 0; ix < g.x.samples; ++ix) {
      out += format_g17(g.x.coord(ix));
      out += ',';
      out += ys;
      out += ',';
      out += format_g17(g.at(ix, iy));
      out += '\n';
    }
  }
  return out;
}

std::string contours_to_csv(const std::vector<ContourPolyline>& contours,
                            const std::string& x_name, const std::string& y_name) {
  std::string out = "delta,polyline," + x_name + "," + y_name + "\n";
  for (std::size_t i = 0; i < contours.size(); ++i) {
    for (const auto& pt : contours[i].points) {
      out += format_g17(contours[i].level);
      out += ',';
      out += std::to_string(i);
      out += ',';
      out += format_g17(pt[0]);
      out += ',';
      out += format_g17(pt[1]);
      out += '\n';
    }
  }
  return out;
}

std::string curves_to_csv(const std::vector<BoundaryCurve>& curves) {
  std::string out = "delta,v3_abs,vnorm\n";
  for (const BoundaryCurve& c : curves) {
    for (const BoundarySample& s : c.samples) {
      out += format_g17(c.delta);
      out += ',';
      out += format_g17(s.v3_abs);
      out += ',';
      out += format_g17(s.vnorm);
      out += '\n';
    }
  }
  return out;
}

std::string grid_metadata_json(const ProbabilityGrid& g, const std::string& csv_text,
                               const std::string& csv_filename) {
  nlohmann::json j;
  j["formula_id"] = formula_id_name(g.formula_id);
  j["axes"] = nlohmann::json::array();
  for (const GridAxis* ax : {&g.x, &g.y}) {
    j["axes"].push_back({{"name", ax->name},
                         {"min", ax->lo},
                         {"max", ax->hi},
                         {"samples", ax->samples}});
  }
  j["resolution"] = g.x.samples;
  j["fixed_params"] = nlohmann::json::object();
  for (const auto& [name, value] : g.fixed_params) j["fixed_params"][name] = value;
  j["csv_file"] = csv_filename;
  char digest[32];
  std::snprintf(digest, sizeof(digest), "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(csv_text)));
  j["csv_digest"] = digest;
  return j.dump(2) + "\n";
}

}  // namespace spintensor
