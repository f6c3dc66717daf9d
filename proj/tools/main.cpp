// spintensor CLI: per-momentum spectra, closed-form vs pipeline
// probabilities, map/curve grid files and the validation suite.
//
// Exit codes: 0 success, 1 validation failure, 2 usage or domain error.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spintensor/figures.hpp"
#include "spintensor/measurement.hpp"
#include "spintensor/oracle.hpp"
#include "spintensor/validation.hpp"

namespace {

using namespace spintensor;
namespace fs = std::filesystem;

std::string g17(double x) { return format_g17(x); }

std::string fmt_cplx(cplx z) {
  return "(" + g17(z.real()) + (z.imag() < 0 ? " - " : " + ") +
         g17(std::fabs(z.imag())) + "i)";
}

Axis parse_axis(const std::string& s) {
  if (s == "x") return Axis::X;
  if (s == "y") return Axis::Y;
  if (s == "z") return Axis::Z;
  throw CLI::ValidationError("--axis", "axis must be x, y or z");
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

fs::path with_extension(fs::path p, const char* ext) {
  p.replace_extension(ext);
  return p;
}

fs::path sibling_csv(const fs::path& p, const char* suffix) {
  fs::path q = p;
  q.replace_extension("");
  q += suffix;
  q += ".csv";
  return q;
}

// ---- eigen ---------------------------------------------------------------

struct EigenArgs {
  std::vector<double> p;
  std::string observable;
  std::string axis;
  bool json = false;
};

int run_eigen(const EigenArgs& a) {
  const Momentum p(a.p[0], a.p[1], a.p[2]);
  const Axis axis = parse_axis(a.axis);
  const bool is_sigma = a.observable == "sigma";
  const HermitianOp2 op = is_sigma ? sigma_op(p, axis) : v_op(p, axis);

  std::vector<EigenPair> pairs;
  for (const int sign : {+1, -1}) {
    pairs.push_back(is_sigma ? sigma_eigenstate(p, axis, sign)
                             : v_eigenstate(p, axis, sign));
  }
  const EigenSystem2 es = eigh2(op);

  if (a.json) {
    nlohmann::json j;
    j["observable"] = a.observable;
    j["axis"] = a.axis;
    j["unit"] = unit_name(op.unit());
    j["p"] = {p.p1(), p.p2(), p.p3()};
    j["matrix"] = {
        {{op.matrix()(0, 0).real(), op.matrix()(0, 0).imag()},
         {op.matrix()(0, 1).real(), op.matrix()(0, 1).imag()}},
        {{op.matrix()(1, 0).real(), op.matrix()(1, 0).imag()},
         {op.matrix()(1, 1).real(), op.matrix()(1, 1).imag()}}};
    j["eigenpairs"] = nlohmann::json::array();
    for (const EigenPair& ep : pairs) {
      j["eigenpairs"].push_back(
          {{"value", ep.value},
           {"degenerate", ep.degenerate},
           {"state", {{ep.state.up().real(), ep.state.up().imag()},
                      {ep.state.down().real(), ep.state.down().imag()}}}});
    }
    j["eigh2_values"] = {es.values[0], es.values[1]};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "observable: " << a.observable << "^" << a.axis
            << "  unit: " << unit_name(op.unit()) << "\n";
  std::cout << "p = (" << g17(p.p1()) << ", " << g17(p.p2()) << ", " << g17(p.p3())
            << ")\n";
  std::cout << "matrix rows (m3 = +1/2, -1/2):\n";
  for (int r = 0; r < 2; ++r) {
    std::cout << "  [" << fmt_cplx(op.matrix()(r, 0)) << "  "
              << fmt_cplx(op.matrix()(r, 1)) << "]\n";
  }
  for (const EigenPair& ep : pairs) {
    std::cout << "closed form: value " << g17(ep.value) << "  state "
              << fmt_cplx(ep.state.up()) << ", " << fmt_cplx(ep.state.down());
    if (ep.degenerate) std::cout << "  [degenerate]";
    std::cout << "\n";
  }
  std::cout << "eigh2 check: values " << g17(es.values[0]) << ", " << g17(es.values[1])
            << "\n";
  return 0;
}

// ---- prob ----------------------------------------------------------------

struct ProbArgs {
  std::string formula;
  std::vector<double> p;
  std::vector<double> v;
};

int run_prob(const ProbArgs& a) {
  static const std::map<std::string, Formula> table = {
      {"eq4", Formula::Eq4}, {"eq5", Formula::Eq5}, {"eq6", Formula::Eq6},
      {"eq7", Formula::Eq7}, {"eq8", Formula::Eq8}};
  const Formula f = table.at(a.formula);

  Velocity v;
  if (!a.v.empty()) {
    v = Velocity(a.v[0], a.v[1], a.v[2]);
  } else {
    v = velocity_from_momentum(Momentum(a.p[0], a.p[1], a.p[2]));
  }

  const double closed = closed_form_value(f, v);
  const double pipeline = born_pipeline_value(f, v);

  std::cout << "formula: " << a.formula << "\n";
  std::cout << "v = (" << g17(v.v1()) << ", " << g17(v.v2()) << ", " << g17(v.v3())
            << ")  |v| = " << g17(v.norm()) << "\n";
  std::cout << "closed form   = " << g17(closed) << "\n";
  std::cout << "born pipeline = " << g17(pipeline) << "\n";
  std::cout << "|difference|  = " << g17(std::fabs(closed - pipeline)) << "\n";
  return 0;
}

// ---- map -----------------------------------------------------------------

struct MapArgs {
  int figure = 0;
  std::string formula;  // eq5|eq6, figures 3/4 only
  double vnorm = -1.0;
  int resolution = 0;
  std::string out;
  std::string format = "csv";
  std::vector<double> deltas{kDefaultDeltas.begin(), kDefaultDeltas.end()};
  bool seed_independent = false;  // no-op: maps never consume randomness
};

int run_map(const MapArgs& a) {
  ProbabilityGrid grid;
  std::vector<ContourPolyline> contours;
  bool has_contours = false;

  switch (a.figure) {
    case 1: {
      Fig1Result r = map_fig1(a.resolution, a.deltas);
      grid = std::move(r.grid);
      contours = std::move(r.contours);
      has_contours = true;
      break;
    }
    case 3:
    case 4: {
      std::string formula = a.formula;
      if (formula.empty()) formula = a.figure == 3 ? "eq5" : "eq6";
      if (formula != "eq5" && formula != "eq6") {
        throw std::domain_error("--formula must be eq5 or eq6 for figures 3/4");
      }
      const FormulaId id = formula == "eq5" ? FormulaId::Eq5Map : FormulaId::Eq6Map;
      double vnorm = a.vnorm;
      if (vnorm < 0.0) vnorm = a.figure == 3 ? 0.8 : 1.0;
      grid = map_fig34(id, vnorm, a.resolution);
      break;
    }
    case 5:
      grid = map_fig5(a.resolution);
      break;
    default:
      throw std::domain_error("--figure must be one of 1, 3, 4, 5");
  }

  const std::string csv = grid_to_csv(grid);
  const fs::path out(a.out);

  if (a.format == "json") {
    fs::path csv_path = with_extension(out, ".csv");
    if (csv_path == out) csv_path += ".csv";
    write_file(csv_path, csv);
    write_file(out, grid_metadata_json(grid, csv, csv_path.filename().string()));
    std::cout << "wrote " << out.string() << " and " << csv_path.string() << "\n";
    if (has_contours) {
      const fs::path cpath = sibling_csv(csv_path, "_contours");
      write_file(cpath, contours_to_csv(contours, grid.x.name, grid.y.name));
      std::cout << "wrote " << cpath.string() << " (" << contours.size()
                << " polylines)\n";
    }
  } else {
    write_file(out, csv);
    std::cout << "wrote " << out.string() << " (" << grid.x.samples << "x"
              << grid.y.samples << " grid)\n";
    if (has_contours) {
      const fs::path cpath = sibling_csv(out, "_contours");
      write_file(cpath, contours_to_csv(contours, grid.x.name, grid.y.name));
      std::cout << "wrote " << cpath.string() << " (" << contours.size()
                << " polylines)\n";
    }
  }
  return 0;
}

// ---- curve ---------------------------------------------------------------

struct CurveArgs {
  int figure = 2;
  std::vector<double> deltas{kDefaultDeltas.begin(), kDefaultDeltas.end()};
  int resolution = 256;
  std::string out;
};

int run_curve(const CurveArgs& a) {
  if (a.figure != 2) throw std::domain_error("--figure must be 2");
  const std::vector<BoundaryCurve> curves = curve_fig2(a.deltas, a.resolution);
  write_file(fs::path(a.out), curves_to_csv(curves));
  std::cout << "wrote " << a.out << "\n";
  for (const BoundaryCurve& c : curves) {
    if (c.samples.empty()) {
      std::cerr << "warning: delta = " << g17(c.delta) << " produced an empty curve\n";
      continue;
    }
    std::cout << "delta " << g17(c.delta) << ": " << c.samples.size()
              << " samples, min |v| = " << g17(c.min_vnorm)
              << ", min |v3| = " << g17(c.min_v3) << "\n";
  }
  return 0;
}

// ---- validate --------------------------------------------------------------

int run_validate(std::size_t samples, std::uint64_t seed) {
  const ValidationReport report = run_validation(samples, seed);
  std::size_t failed = 0;
  for (const CheckResult& c : report.checks) {
    std::printf("%-42s samples %-7zu max dev %-24s tol %-9s %s\n", c.name.c_str(),
                c.samples, g17(c.max_abs_dev).c_str(), g17(c.tolerance).c_str(),
                c.pass() ? "pass" : "FAIL");
    if (!c.pass()) ++failed;
  }
  if (failed > 0) {
    std::printf("%zu check(s) failed\n", failed);
    return 1;
  }
  std::printf("all %zu checks passed\n", report.checks.size());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"intrinsic relativistic spin tensor observables for spin-1/2"};
  app.require_subcommand(1);

  EigenArgs eigen_args;
  auto* eigen_cmd =
      app.add_subcommand("eigen", "eigenvalues/eigenstates of a fiber observable");
  eigen_cmd->add_option("--p", eigen_args.p, "dimensionless momentum x,y,z")
      ->required()
      ->delimiter(',')
      ->expected(3);
  eigen_cmd->add_option("--observable", eigen_args.observable, "sigma or v")
      ->required()
      ->check(CLI::IsMember({"sigma", "v"}));
  eigen_cmd->add_option("--axis", eigen_args.axis, "x, y or z")
      ->required()
      ->check(CLI::IsMember({"x", "y", "z"}));
  eigen_cmd->add_flag("--json", eigen_args.json, "emit JSON");

  ProbArgs prob_args;
  auto* prob_cmd =
      app.add_subcommand("prob", "closed-form value and Born-pipeline value");
  prob_cmd->add_option("--formula", prob_args.formula, "eq4|eq5|eq6|eq7|eq8")
      ->required()
      ->check(CLI::IsMember({"eq4", "eq5", "eq6", "eq7", "eq8"}));
  auto* p_opt =
      prob_cmd->add_option("--p", prob_args.p, "dimensionless momentum x,y,z")
          ->delimiter(',')
          ->expected(3);
  prob_cmd->add_option("--v", prob_args.v, "dimensionless velocity x,y,z")
      ->delimiter(',')
      ->expected(3)
      ->excludes(p_opt);

  MapArgs map_args;
  auto* map_cmd = app.add_subcommand("map", "probability/discrepancy grid files");
  map_cmd->add_option("--figure", map_args.figure, "1, 3, 4 or 5")->required();
  map_cmd->add_option("--formula", map_args.formula, "eq5|eq6 (figures 3/4)");
  map_cmd->add_option("--vnorm", map_args.vnorm,
                      "fixed velocity norm (figures 3/4; defaults 0.8 / 1.0)");
  map_cmd->add_option("--resolution", map_args.resolution, "lattice points per axis")
      ->required();
  map_cmd->add_option("--out", map_args.out, "output path")->required();
  map_cmd->add_option("--format", map_args.format, "csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  map_cmd->add_option("--deltas", map_args.deltas,
                      "contour levels for figure 1 (default 0.001,0.005,0.01,0.02,0.05)")
      ->delimiter(',');
  map_cmd->add_flag("--seed-independent", map_args.seed_independent,
                    "no-op; grids are deterministic and consume no randomness");

  CurveArgs curve_args;
  auto* curve_cmd =
      app.add_subcommand("curve", "significance boundary curves |v| vs |v3|");
  curve_cmd->add_option("--figure", curve_args.figure, "must be 2")->required();
  curve_cmd->add_option("--deltas", curve_args.deltas, "significance bounds")
      ->delimiter(',');
  curve_cmd->add_option("--resolution", curve_args.resolution,
                        "|v3| abscissas (default 256)");
  curve_cmd->add_option("--out", curve_args.out, "output CSV path")->required();

  std::size_t val_samples = 10000;
  std::uint64_t val_seed = 12345;
  auto* val_cmd = app.add_subcommand("validate", "oracle/pipeline equivalence suite");
  val_cmd->add_option("--samples", val_samples, "random samples per check");
  val_cmd->add_option("--seed", val_seed, "rng seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eigen_cmd->parsed()) return run_eigen(eigen_args);
    if (prob_cmd->parsed()) {
      if (prob_args.p.empty() == prob_args.v.empty()) {
        std::cerr << "error: exactly one of --p or --v is required\n";
        return 2;
      }
      return run_prob(prob_args);
    }
    if (map_cmd->parsed()) return run_map(map_args);
    if (curve_cmd->parsed()) return run_curve(curve_args);
    if (val_cmd->parsed()) return run_validate(val_samples, val_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
