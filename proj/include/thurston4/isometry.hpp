#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "thurston4/metric.hpp"

namespace thurston4 {

/// Chart diffeomorphism with an exact Jacobian evaluator.
struct Isometry {
  std::string name;
  std::function<Point(const Point&)> forward;
  std::function<Eigen::Matrix4d(const Point&)> jacobian;

  Point operator()(const Point& p) const { return forward(p); }
};

Isometry identity_isometry();

/// h -> g h, with the Jacobian read off the group law in closed form.
Isometry left_translation(const GeometrySpec& spec, const GroupElement& g);

/// Rotation in the xy-plane by `angle` (Sol40 only; the O(2) factor).
Isometry sol40_rotation(double angle);

/// The stabilizer generators of the acting group:
///   Sol40:  xy-rotations at the given angles, the xy-plane reflection
///           y -> -y, and the z reflection;
///   Sol4mn: the three coordinate reflections x, y, z;
///   Sol41:  s: (t,x,y,z) -> (t,x,-y,-z),
///           r: (t,x,y,z) -> (1/t, -y/t, x/t, z - xy/t);
///   Nil4:   s1: (t,x,y,z) -> (t,-x,-y,-z),
///           s2: (t,x,y,z) -> (-t,x,-y,z).
std::vector<Isometry> stabilizer_generators(
    const GeometrySpec& spec,
    const std::vector<double>& sol40_angles = {M_PI / 7, 1.0, M_PI / 3, 2.5});

/// (phi* g)(p) = J(p)^T g(phi(p)) J(p).
Eigen::Matrix4d pullback_metric(const GeometrySpec& spec, const Isometry& phi,
                                const Point& p);
Eigen::Matrix4d pullback_metric(const MetricField& g, const Isometry& phi,
                                const Point& p);

struct GeneratorResidual {
  std::string name;
  double max_residual = 0.0;
};

struct InvarianceReport {
  std::string geometry;
  std::string params;
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<GeneratorResidual> rows;
  double max_residual = 0.0;
};

/// Max pullback residual per generator (all stabilizer generators plus
/// `translations` random left translations) over `samples` random points.
/// Deterministic given the seed. `metric_override` substitutes the metric
/// being tested (negative controls); empty means the configured metric.
InvarianceReport invariance_report(const GeometrySpec& spec, int samples,
                                   std::uint64_t seed, int translations = 50,
                                   const MetricField& metric_override = {});

void write_report(std::ostream& os, const InvarianceReport& report);

}  // namespace thurston4
