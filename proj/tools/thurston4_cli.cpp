// Command-line front end: curvature tables, geodesic traces, invariance and
// Kahler scans, distance queries, root classification. Outputs are
// deterministic for a fixed seed; exit codes: 0 success, 2 configuration
// error, 3 numerical check failure.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "thurston4/curvature.hpp"
#include "thurston4/geodesic.hpp"
#include "thurston4/group.hpp"
#include "thurston4/isometry.hpp"
#include "thurston4/kahler.hpp"
#include "thurston4/rng.hpp"
#include "thurston4/roots.hpp"

using namespace thurston4;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitCheckFailed = 3;

struct RunConfig {
  std::string geometry;
  std::vector<std::string> params;
  std::uint64_t seed = 20250101;
  std::string out;
  double dt = 1e-3;
  double T = 1.0;
  int threads = 1;  // accepted for interface stability; output-neutral
};

std::map<std::string, double> parse_params(
    const std::vector<std::string>& kvs) {
  std::map<std::string, double> out;
  for (const std::string& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--param expects key=value, got: " + kv);
    out[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
  }
  return out;
}

double take(std::map<std::string, double>& params, const std::string& key,
            double fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  double v = it->second;
  params.erase(it);
  return v;
}

GeometrySpec make_spec(const RunConfig& config) {
  auto params = parse_params(config.params);
  GeometrySpec spec;
  if (config.geometry == "sol40") {
    spec = GeometrySpec::sol40();
  } else if (config.geometry == "sol4mn") {
    double m = take(params, "m", 0.0), n = take(params, "n", 0.0);
    if (m == 0.0 || n == 0.0)
      throw std::invalid_argument("sol4mn requires --param m=... n=...");
    spec = GeometrySpec::sol4mn(m, n);
  } else if (config.geometry == "sol41") {
    spec = GeometrySpec::sol41(take(params, "tau1", 1.0),
                               take(params, "tau2", 1.0));
  } else if (config.geometry == "nil4") {
    spec = GeometrySpec::nil4(take(params, "tau1", 1.0),
                              take(params, "tau2", 1.0),
                              take(params, "tau3", 1.0),
                              take(params, "alpha", 0.0));
  } else {
    throw std::invalid_argument("unknown geometry: " + config.geometry);
  }
  if (!params.empty())
    throw std::invalid_argument("unknown parameter: " + params.begin()->first);
  return spec;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Eigen::Vector4d parse_vec4(const std::string& csv, const char* what) {
  Eigen::Vector4d v;
  std::istringstream is(csv);
  std::string part;
  for (int i = 0; i < 4; ++i) {
    if (!std::getline(is, part, ','))
      throw std::invalid_argument(std::string(what) +
                                  " expects 4 comma-separated values");
    v[i] = std::stod(part);
  }
  return v;
}

int emit(const RunConfig& config, const std::string& text, bool checks_pass) {
  if (!checks_pass) return kExitCheckFailed;
  if (config.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(config.out, std::ios::binary);
    if (!os) {
      std::cerr << "error: cannot open " << config.out << "\n";
      return kExitConfig;
    }
    os << text;
  }
  return 0;
}

int cmd_curvature(const RunConfig& config) {
  GeometrySpec spec = make_spec(config);
  Point p = identity(spec);

  std::ostringstream os;
  os << "curvature-table v1\n";
  os << "geometry " << to_string(spec.kind) << "\n";
  os << "scalar " << fmt(scalar_at(spec, p)) << "\n";

  Eigen::Matrix4d ric = ricci_at(spec, p);
  Eigen::Matrix4d ginv = inverse_metric_at(spec, p);
  Eigen::EigenSolver<Eigen::Matrix4d> es(ginv * ric);
  Eigen::Vector4d eigs = es.eigenvalues().real();
  std::sort(eigs.data(), eigs.data() + 4);
  os << "ricci_eigenvalues " << fmt(eigs[0]) << " " << fmt(eigs[1]) << " "
     << fmt(eigs[2]) << " " << fmt(eigs[3]) << "\n";

  Eigen::Matrix4d f = orthonormal_frame_at(spec, p);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      os << "sectional E" << i + 1 << " E" << j + 1 << " "
         << fmt(sectional(spec, p, f.col(i), f.col(j))) << "\n";

  // Point-independence of the frame scalar invariants.
  Rng rng(config.seed);
  bool constant = true;
  for (int s = 0; s < 10; ++s) {
    Point q = rng.point(spec, -1.0, 1.0);
    if (std::abs(scalar_at(spec, q) - scalar_at(spec, p)) > 1e-8)
      constant = false;
  }
  os << "point_independence " << (constant ? "pass" : "fail") << "\n";
  return emit(config, os.str(), constant);
}

int cmd_geodesic(const RunConfig& config, const std::string& start,
                 const std::string& velocity) {
  GeometrySpec spec = make_spec(config);
  Point p = Point::of(parse_vec4(start, "--start"));
  Eigen::Vector4d v = parse_vec4(velocity, "--velocity");

  Trajectory traj = integrate_geodesic(spec, p, v, config.T, config.dt);
  std::ostringstream os;
  write_trajectory_csv(os, spec, traj);
  std::cerr << "max_energy_drift " << fmt(traj.max_energy_drift) << "\n";
  if (traj.status == TrajectoryStatus::ChartExit)
    std::cerr << "status chart-exit (partial trajectory)\n";
  return emit(config, os.str(), true);
}

int cmd_invariance(const RunConfig& config) {
  GeometrySpec spec = make_spec(config);
  InvarianceReport report = invariance_report(spec, 200, config.seed);
  std::ostringstream os;
  write_report(os, report);
  int rc = emit(config, os.str(), true);
  if (rc != 0) return rc;
  return report.max_residual < 1e-9 ? 0 : kExitCheckFailed;
}

int cmd_kahler(const RunConfig& config) {
  GeometrySpec spec = make_spec(config);
  KahlerScan scan = kahler_scan(spec, 100, config.seed);
  std::ostringstream os;
  write_report(os, scan);
  return emit(config, os.str(), true);
}

int cmd_distance(const RunConfig& config, const std::string& p_csv,
                 const std::string& q_csv) {
  GeometrySpec spec = make_spec(config);
  Point p = Point::of(parse_vec4(p_csv, "--p"));
  Point q = Point::of(parse_vec4(q_csv, "--q"));
  ShootingResult r = distance_shooting(spec, p, q);
  std::ostringstream os;
  os << "distance-result v1\n";
  os << "converged " << (r.converged ? "yes" : "no") << "\n";
  os << "length " << fmt(r.length) << "\n";
  os << "endpoint_error " << fmt(r.endpoint_error) << "\n";
  os << "iterations " << r.iterations << "\n";
  os << "velocity " << fmt(r.velocity[0]) << " " << fmt(r.velocity[1]) << " "
     << fmt(r.velocity[2]) << " " << fmt(r.velocity[3]) << "\n";
  int rc = emit(config, os.str(), true);
  if (rc != 0) return rc;
  return r.converged ? 0 : kExitCheckFailed;
}

int cmd_roots(const RunConfig& config, double m, double n) {
  RootClassification r = solve_roots(m, n);
  std::ostringstream os;
  os << "roots v1\n";
  switch (r.kind) {
    case RootKind::ThreeDistinct: {
      os << "classification three-distinct\n";
      os << "lambda " << fmt(r.lambda[0]) << " " << fmt(r.lambda[1]) << " "
         << fmt(r.lambda[2]) << "\n";
      os << "exponents " << fmt(r.a) << " " << fmt(r.b) << " " << fmt(r.c)
         << "\n";
      double l1 = r.lambda[0], l2 = r.lambda[1], l3 = r.lambda[2];
      os << "vieta_residuals " << fmt(std::abs(l1 * l2 * l3 - 1.0)) << " "
         << fmt(std::abs(l1 + l2 + l3 - m)) << " "
         << fmt(std::abs(l1 * l2 + l1 * l3 + l2 * l3 - n)) << "\n";
      break;
    }
    case RootKind::ProductCase:
      os << "classification product-case\n";
      os << "note m = n: the space is Sol3 x R, a product geometry\n";
      break;
    case RootKind::DoubleRoot:
      os << "classification double-root\n";
      os << "note repeated root: the space coincides with Sol40\n";
      break;
    case RootKind::Invalid:
      os << "classification invalid\n";
      os << "note complex roots: no geometry for these (m, n)\n";
      break;
  }
  return emit(config, os.str(), true);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical engine for the non-product 4-dimensional Thurston "
               "geometries Sol40, Sol4mn, Sol41 and Nil4"};
  app.require_subcommand(1);

  RunConfig config;
  std::string start = "0,0,0,0", velocity = "1,0,0,0";
  std::string p_csv, q_csv;
  double m = 0.0, n = 0.0;

  auto add_common = [&](CLI::App* cmd, bool needs_geometry = true) {
    if (needs_geometry)
      cmd->add_option("--geometry", config.geometry,
                      "one of sol40|sol4mn|sol41|nil4")
          ->required();
    cmd->add_option("--param", config.params,
                    "metric parameter key=value (repeatable)");
    cmd->add_option("--seed", config.seed, "RNG seed");
    cmd->add_option("--out", config.out, "output file (default stdout)");
    cmd->add_option("--threads", config.threads,
                    "worker threads (never changes output bytes)");
  };

  CLI::App* curvature = app.add_subcommand("curvature", "curvature table");
  add_common(curvature);

  CLI::App* geodesic = app.add_subcommand("geodesic", "trajectory CSV");
  add_common(geodesic);
  geodesic->add_option("--start", start, "start point t,x,y,z");
  geodesic->add_option("--velocity", velocity, "initial velocity");
  geodesic->add_option("--T", config.T, "final parameter");
  geodesic->add_option("--dt", config.dt, "integrator step");

  CLI::App* invariance =
      app.add_subcommand("invariance", "pullback invariance report");
  add_common(invariance);

  CLI::App* kahler = app.add_subcommand("kahler", "almost-complex scan");
  add_common(kahler);

  CLI::App* distance = app.add_subcommand("distance", "shooting distance");
  add_common(distance);
  distance->add_option("--p", p_csv, "start point t,x,y,z")->required();
  distance->add_option("--q", q_csv, "end point t,x,y,z")->required();

  CLI::App* roots =
      app.add_subcommand("roots", "classify x^3 - m x^2 + n x - 1");
  add_common(roots, false);
  roots->add_option("m", m, "coefficient m")->required();
  roots->add_option("n", n, "coefficient n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (curvature->parsed()) return cmd_curvature(config);
    if (geodesic->parsed()) return cmd_geodesic(config, start, velocity);
    if (invariance->parsed()) return cmd_invariance(config);
    if (kahler->parsed()) return cmd_kahler(config);
    if (distance->parsed()) return cmd_distance(config, p_csv, q_csv);
    if (roots->parsed()) return cmd_roots(config, m, n);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitConfig;
}
