#include "thurston4/isometry.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "thurston4/group.hpp"
#include "thurston4/rng.hpp"

namespace thurston4 {

namespace {

Isometry linear_map(std::string name, const Eigen::Matrix4d& m) {
  return {std::move(name),
          [m](const Point& p) { return Point::of(m * p.vec()); },
          [m](const Point&) { return m; }};
}

Isometry diagonal_map(std::string name, double st, double sx, double sy,
                      double sz) {
  Eigen::Matrix4d m = Eigen::Vector4d(st, sx, sy, sz).asDiagonal();
  return linear_map(std::move(name), m);
}

std::string format_params(const GeometrySpec& spec) {
  char buf[256];
  switch (spec.kind) {
    case GeometryKind::Sol40:
      return "none";
    case GeometryKind::Sol4mn:
      std::snprintf(buf, sizeof(buf), "m=%.17g n=%.17g", spec.m, spec.n);
      return buf;
    case GeometryKind::Sol41:
      std::snprintf(buf, sizeof(buf), "tau1=%.17g tau2=%.17g",
                    spec.params.tau1, spec.params.tau2);
      return buf;
    case GeometryKind::Nil4:
      std::snprintf(buf, sizeof(buf),
                    "tau1=%.17g tau2=%.17g tau3=%.17g alpha=%.17g",
                    spec.params.tau1, spec.params.tau2, spec.params.tau3,
                    spec.params.alpha);
      return buf;
  }
  return "?";
}

}  // namespace

Isometry identity_isometry() {
  return linear_map("identity", Eigen::Matrix4d::Identity());
}

Isometry left_translation(const GeometrySpec& spec, const GroupElement& g) {
  validate_point(spec, g);
  std::string name = "left-translation";
  auto forward = [spec, g](const Point& h) { return multiply(spec, g, h); };

  switch (spec.kind) {
    case GeometryKind::Sol40: {
      Eigen::Matrix4d j = Eigen::Vector4d(1.0, std::exp(g.t), std::exp(g.t),
                                          std::exp(-2.0 * g.t))
                              .asDiagonal();
      return {name, forward, [j](const Point&) { return j; }};
    }
    case GeometryKind::Sol4mn: {
      Eigen::Matrix4d j =
          Eigen::Vector4d(1.0, std::exp(spec.a * g.t), std::exp(spec.b * g.t),
                          std::exp(spec.c * g.t))
              .asDiagonal();
      return {name, forward, [j](const Point&) { return j; }};
    }
    case GeometryKind::Sol41: {
      Eigen::Matrix4d j = Eigen::Matrix4d::Zero();
      j(0, 0) = g.t;
      j(1, 0) = g.x;
      j(1, 1) = 1.0;
      j(2, 2) = g.t;
      j(3, 2) = g.x;
      j(3, 3) = 1.0;
      return {name, forward, [j](const Point&) { return j; }};
    }
    case GeometryKind::Nil4: {
      Eigen::Matrix4d j = Eigen::Matrix4d::Identity();
      j.bottomRightCorner<3, 3>() = theta(g.t);
      return {name, forward, [j](const Point&) { return j; }};
    }
  }
  throw std::logic_error("unreachable");
}

Isometry sol40_rotation(double angle) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m(1, 1) = std::cos(angle);
  m(1, 2) = -std::sin(angle);
  m(2, 1) = std::sin(angle);
  m(2, 2) = std::cos(angle);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "rotation(%.17g)", angle);
  return linear_map(buf, m);
}

std::vector<Isometry> stabilizer_generators(
    const GeometrySpec& spec, const std::vector<double>& sol40_angles) {
  std::vector<Isometry> out;
  switch (spec.kind) {
    case GeometryKind::Sol40:
      for (double angle : sol40_angles) out.push_back(sol40_rotation(angle));
      out.push_back(diagonal_map("reflect-xy", 1, 1, -1, 1));
      out.push_back(diagonal_map("reflect-z", 1, 1, 1, -1));
      break;
    case GeometryKind::Sol4mn:
      out.push_back(diagonal_map("reflect-x", 1, -1, 1, 1));
      out.push_back(diagonal_map("reflect-y", 1, 1, -1, 1));
      out.push_back(diagonal_map("reflect-z", 1, 1, 1, -1));
      break;
    case GeometryKind::Sol41: {
      out.push_back(diagonal_map("s", 1, 1, -1, -1));
      // r: (t,x,y,z) -> (1/t, -y/t, x/t, z - xy/t), Jacobian in closed form
      // (finite differences are unreliable near t -> 0+).
      Isometry r;
      r.name = "r";
      r.forward = [](const Point& p) {
        return Point{1.0 / p.t, -p.y / p.t, p.x / p.t, p.z - p.x * p.y / p.t};
      };
      r.jacobian = [](const Point& p) {
        const double t = p.t, x = p.x, y = p.y;
        Eigen::Matrix4d j = Eigen::Matrix4d::Zero();
        j(0, 0) = -1.0 / (t * t);
        j(1, 0) = y / (t * t);
        j(1, 2) = -1.0 / t;
        j(2, 0) = -x / (t * t);
        j(2, 1) = 1.0 / t;
        j(3, 0) = x * y / (t * t);
        j(3, 1) = -y / t;
        j(3, 2) = -x / t;
        j(3, 3) = 1.0;
        return j;
      };
      out.push_back(std::move(r));
      break;
    }
    case GeometryKind::Nil4:
      out.push_back(diagonal_map("s1", 1, -1, -1, -1));
      out.push_back(diagonal_map("s2", -1, 1, -1, 1));
      break;
  }
  return out;
}

Eigen::Matrix4d pullback_metric(const MetricField& g, const Isometry& phi,
                                const Point& p) {
  Eigen::Matrix4d j = phi.jacobian(p);
  return j.transpose() * g(phi.forward(p)) * j;
}

Eigen::Matrix4d pullback_metric(const GeometrySpec& spec, const Isometry& phi,
                                const Point& p) {
  return pullback_metric(metric_field(spec), phi, p);
}

InvarianceReport invariance_report(const GeometrySpec& spec, int samples,
                                   std::uint64_t seed, int translations,
                                   const MetricField& metric_override) {
  if (samples < 0)
    throw std::invalid_argument("invariance_report: samples must be >= 0");
  MetricField g = metric_override ? metric_override : metric_field(spec);

  InvarianceReport report;
  report.geometry = to_string(spec.kind);
  report.params = format_params(spec);
  report.seed = seed;
  report.samples = samples;
  if (samples == 0) return report;

  Rng rng(seed);
  std::vector<Point> points;
  points.reserve(samples);
  for (int i = 0; i < samples; ++i) points.push_back(rng.point(spec));

  std::vector<Isometry> generators = stabilizer_generators(spec);
  for (int i = 0; i < translations; ++i)
    generators.push_back(left_translation(spec, rng.point(spec)));

  int translation_index = 0;
  for (const Isometry& phi : generators) {
    double max_res = 0.0;
    for (const Point& p : points) {
      Eigen::Matrix4d res = pullback_metric(g, phi, p) - g(p);
      max_res = std::max(max_res, res.cwiseAbs().maxCoeff());
    }
    std::string name = phi.name;
    if (name == "left-translation") {
      char buf[48];
      std::snprintf(buf, sizeof(buf), "left-translation[%d]",
                    translation_index++);
      name = buf;
    }
    report.rows.push_back({name, max_res});
    report.max_residual = std::max(report.max_residual, max_res);
  }
  return report;
}

void write_report(std::ostream& os, const InvarianceReport& report) {
  char buf[128];
  os << "invariance-report v1\n";
  os << "geometry " << report.geometry << "\n";
  os << "params " << report.params << "\n";
  os << "seed " << report.seed << "\n";
  os << "samples " << report.samples << "\n";
  for (const GeneratorResidual& row : report.rows) {
    std::snprintf(buf, sizeof(buf), "%.17g", row.max_residual);
    os << "generator " << row.name << " max_residual " << buf << "\n";
  }
  std::snprintf(buf, sizeof(buf), "%.17g", report.max_residual);
  os << "max_residual " << buf << "\n";
}

}  // namespace thurston4
