#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace thurston4 {

enum class GeometryKind { Sol40, Sol4mn, Sol41, Nil4 };

std::string to_string(GeometryKind kind);

/// Metric family parameters. Which fields are meaningful depends on the
/// geometry: Sol40 and Sol4mn carry none (their invariant metric is unique
/// up to homothety), Sol41 uses (tau1, tau2), Nil4 uses (tau1, tau2, tau3,
/// alpha) with alpha^2 < tau3.
struct MetricParams {
  double tau1 = 1.0;
  double tau2 = 1.0;
  double tau3 = 1.0;
  double alpha = 0.0;
};

/// Chart point (t,x,y,z). The chart is global for all four geometries;
/// Sol41 additionally requires t > 0.
struct Point {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Eigen::Vector4d vec() const { return {t, x, y, z}; }
  static Point of(const Eigen::Vector4d& v) { return {v[0], v[1], v[2], v[3]}; }
};

/// The manifold coincides with the group in all four model spaces.
using GroupElement = Point;

struct TangentVector {
  Point base;
  Eigen::Vector4d components = Eigen::Vector4d::Zero();
};

/// Immutable description of one model space together with its metric
/// parameters. For Sol4mn the exponents a < b < c (logs of the roots of
/// x^3 - m x^2 + n x - 1) are solved once at construction and cached.
struct GeometrySpec {
  GeometryKind kind = GeometryKind::Sol40;
  MetricParams params;

  // Sol4mn only.
  double m = 0.0;
  double n = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  static GeometrySpec sol40();
  static GeometrySpec sol4mn(double m, double n);
  static GeometrySpec sol41(double tau1, double tau2);
  static GeometrySpec nil4(double tau1, double tau2, double tau3, double alpha);
};

/// Throws std::domain_error if p violates the chart constraints of the
/// geometry (only Sol41 constrains the chart: t > 0).
void validate_point(const GeometrySpec& spec, const Point& p);

}  // namespace thurston4
