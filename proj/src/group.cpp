#include "thurston4/group.hpp"

#include <cmath>

#include "thurston4/metric.hpp"
#include "thurston4/roots.hpp"

namespace thurston4 {

std::string to_string(GeometryKind kind) {
  switch (kind) {
    case GeometryKind::Sol40: return "sol40";
    case GeometryKind::Sol4mn: return "sol4mn";
    case GeometryKind::Sol41: return "sol41";
    case GeometryKind::Nil4: return "nil4";
  }
  return "?";
}

GeometrySpec GeometrySpec::sol40() {
  GeometrySpec spec;
  spec.kind = GeometryKind::Sol40;
  return spec;
}

GeometrySpec GeometrySpec::sol4mn(double m, double n) {
  RootClassification roots = solve_roots(m, n);
  switch (roots.kind) {
    case RootKind::ThreeDistinct: break;
    case RootKind::ProductCase:
      throw std::invalid_argument(
          "sol4mn: m = n gives Sol3 x R (product case), not a Sol4mn "
          "geometry");
    case RootKind::DoubleRoot:
      throw std::invalid_argument(
          "sol4mn: repeated root; the geometry coincides with Sol40, "
          "construct that instead");
    case RootKind::Invalid:
      throw std::invalid_argument(
          "sol4mn: the cubic has complex roots for these (m, n)");
  }
  GeometrySpec spec;
  spec.kind = GeometryKind::Sol4mn;
  spec.m = m;
  spec.n = n;
  spec.a = roots.a;
  spec.b = roots.b;
  spec.c = roots.c;
  return spec;
}

GeometrySpec GeometrySpec::sol41(double tau1, double tau2) {
  GeometrySpec spec;
  spec.kind = GeometryKind::Sol41;
  spec.params.tau1 = tau1;
  spec.params.tau2 = tau2;
  validate_params(spec);
  return spec;
}

GeometrySpec GeometrySpec::nil4(double tau1, double tau2, double tau3,
                                double alpha) {
  GeometrySpec spec;
  spec.kind = GeometryKind::Nil4;
  spec.params.tau1 = tau1;
  spec.params.tau2 = tau2;
  spec.params.tau3 = tau3;
  spec.params.alpha = alpha;
  validate_params(spec);
  return spec;
}

void validate_point(const GeometrySpec& spec, const Point& p) {
  if (spec.kind == GeometryKind::Sol41 && !(p.t > 0.0))
    throw std::domain_error("sol41: chart requires t > 0");
}

GroupElement identity(const GeometrySpec& spec) {
  if (spec.kind == GeometryKind::Sol41) return {1.0, 0.0, 0.0, 0.0};
  return {0.0, 0.0, 0.0, 0.0};
}

GroupElement multiply(const GeometrySpec& spec, const GroupElement& g,
                      const GroupElement& h) {
  validate_point(spec, g);
  validate_point(spec, h);
  switch (spec.kind) {
    case GeometryKind::Sol40:
      return {g.t + h.t, g.x + std::exp(g.t) * h.x, g.y + std::exp(g.t) * h.y,
              g.z + std::exp(-2.0 * g.t) * h.z};
    case GeometryKind::Sol4mn:
      return {g.t + h.t, g.x + std::exp(spec.a * g.t) * h.x,
              g.y + std::exp(spec.b * g.t) * h.y,
              g.z + std::exp(spec.c * g.t) * h.z};
    case GeometryKind::Sol41:
      return {g.t * h.t, h.x + g.x * h.t, g.y + g.t * h.y,
              g.z + h.z + g.x * h.y};
    case GeometryKind::Nil4: {
      Eigen::Vector3d v = Eigen::Vector3d(g.x, g.y, g.z) +
                          theta(g.t) * Eigen::Vector3d(h.x, h.y, h.z);
      return {g.t + h.t, v[0], v[1], v[2]};
    }
  }
  throw std::logic_error("unreachable");
}

GroupElement inverse(const GeometrySpec& spec, const GroupElement& g) {
  validate_point(spec, g);
  switch (spec.kind) {
    case GeometryKind::Sol40:
      return {-g.t, -std::exp(-g.t) * g.x, -std::exp(-g.t) * g.y,
              -std::exp(2.0 * g.t) * g.z};
    case GeometryKind::Sol4mn:
      return {-g.t, -std::exp(-spec.a * g.t) * g.x,
              -std::exp(-spec.b * g.t) * g.y, -std::exp(-spec.c * g.t) * g.z};
    case GeometryKind::Sol41:
      return {1.0 / g.t, -g.x / g.t, -g.y / g.t, g.x * g.y / g.t - g.z};
    case GeometryKind::Nil4: {
      Eigen::Vector3d v = -(theta(-g.t) * Eigen::Vector3d(g.x, g.y, g.z));
      return {-g.t, v[0], v[1], v[2]};
    }
  }
  throw std::logic_error("unreachable");
}

Eigen::Matrix3d theta(double t) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  m(0, 1) = t;
  m(0, 2) = 0.5 * t * t;
  m(1, 2) = t;
  return m;
}

Eigen::MatrixXd to_matrix(const GeometrySpec& spec, const GroupElement& g) {
  validate_point(spec, g);
  switch (spec.kind) {
    case GeometryKind::Sol40: {
      Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
      m(0, 0) = std::exp(g.t);
      m(1, 1) = std::exp(g.t);
      m(2, 2) = std::exp(-2.0 * g.t);
      m(0, 3) = g.x;
      m(1, 3) = g.y;
      m(2, 3) = g.z;
      return m;
    }
    case GeometryKind::Sol4mn: {
      Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
      m(0, 0) = std::exp(spec.a * g.t);
      m(1, 1) = std::exp(spec.b * g.t);
      m(2, 2) = std::exp(spec.c * g.t);
      m(0, 3) = g.x;
      m(1, 3) = g.y;
      m(2, 3) = g.z;
      return m;
    }
    case GeometryKind::Sol41: {
      Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
      m(0, 1) = g.x;
      m(0, 2) = g.z;
      m(1, 1) = g.t;
      m(1, 2) = g.y;
      return m;
    }
    case GeometryKind::Nil4: {
      Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
      m.topLeftCorner<3, 3>() = theta(g.t);
      m(0, 3) = g.x;
      m(1, 3) = g.y;
      m(2, 3) = g.z;
      return m;
    }
  }
  throw std::logic_error("unreachable");
}

StructureConstants structure_constants(const GeometrySpec& spec) {
  StructureConstants c{};
  auto set = [&c](int k, int i, int j, double value) {
    c[k][i][j] = value;
    c[k][j][i] = -value;
  };
  switch (spec.kind) {
    case GeometryKind::Sol40:
      set(1, 0, 1, 1.0);
      set(2, 0, 2, 1.0);
      set(3, 0, 3, -2.0);
      break;
    case GeometryKind::Sol4mn:
      set(1, 0, 1, spec.a);
      set(2, 0, 2, spec.b);
      set(3, 0, 3, spec.c);
      break;
    case GeometryKind::Sol41:
      set(1, 0, 1, -1.0);
      set(2, 0, 2, 1.0);
      set(3, 1, 2, 1.0);
      break;
    case GeometryKind::Nil4:
      // Derived from the left-invariant fields: [e1,e3] = e2, [e1,e4] = e3.
      set(1, 0, 2, 1.0);
      set(2, 0, 3, 1.0);
      break;
  }
  return c;
}

}  // namespace thurston4
