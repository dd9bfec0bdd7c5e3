#include "thurston4/metric.hpp"

#include <cmath>

#include "thurston4/group.hpp"

namespace thurston4 {

void validate_params(const GeometrySpec& spec) {
  const MetricParams& p = spec.params;
  switch (spec.kind) {
    case GeometryKind::Sol40:
    case GeometryKind::Sol4mn:
      return;  // unique metric up to homothety, no shape parameters
    case GeometryKind::Sol41:
      if (!(p.tau1 > 0.0))
        throw std::invalid_argument("sol41: tau1 must be positive");
      if (!(p.tau2 > 0.0))
        throw std::invalid_argument("sol41: tau2 must be positive");
      return;
    case GeometryKind::Nil4:
      if (!(p.tau1 > 0.0))
        throw std::invalid_argument("nil4: tau1 must be positive");
      if (!(p.tau2 > 0.0))
        throw std::invalid_argument("nil4: tau2 must be positive");
      if (!(p.tau3 > 0.0))
        throw std::invalid_argument("nil4: tau3 must be positive");
      if (!(p.alpha * p.alpha < p.tau3))
        throw std::invalid_argument("nil4: alpha^2 < tau3 required");
      return;
  }
}

Eigen::Matrix4d metric_at(const GeometrySpec& spec, const Point& p) {
  validate_point(spec, p);
  Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
  switch (spec.kind) {
    case GeometryKind::Sol40:
      g(0, 0) = 1.0;
      g(1, 1) = std::exp(-2.0 * p.t);
      g(2, 2) = std::exp(-2.0 * p.t);
      g(3, 3) = std::exp(4.0 * p.t);
      break;
    case GeometryKind::Sol4mn:
      g(0, 0) = 1.0;
      g(1, 1) = std::exp(-2.0 * spec.a * p.t);
      g(2, 2) = std::exp(-2.0 * spec.b * p.t);
      g(3, 3) = std::exp(-2.0 * spec.c * p.t);
      break;
    case GeometryKind::Sol41: {
      const double t2 = p.t * p.t, tau1 = spec.params.tau1,
                   tau2 = spec.params.tau2;
      g(0, 0) = (p.x * p.x + tau1) / t2;
      g(1, 1) = 1.0;
      g(2, 2) = (1.0 + tau2 * p.x * p.x) / t2;
      g(3, 3) = tau2;
      g(0, 1) = g(1, 0) = -p.x / p.t;
      g(2, 3) = g(3, 2) = -tau2 * p.x / p.t;
      break;
    }
    case GeometryKind::Nil4: {
      const double t = p.t, tau1 = spec.params.tau1, tau2 = spec.params.tau2,
                   tau3 = spec.params.tau3, alpha = spec.params.alpha;
      g(0, 0) = tau1;
      g(1, 1) = 1.0;
      g(2, 2) = t * t + tau2;
      g(3, 3) = 0.25 * t * t * t * t + t * t * (alpha + tau2) + tau3;
      g(1, 2) = g(2, 1) = -t;
      g(1, 3) = g(3, 1) = 0.5 * (t * t + 2.0 * alpha);
      g(2, 3) = g(3, 2) = -0.5 * (t * t * t + 2.0 * t * (alpha + tau2));
      break;
    }
  }
  return g;
}

Eigen::Matrix4d inverse_metric_at(const GeometrySpec& spec, const Point& p) {
  return metric_at(spec, p).inverse();
}

Eigen::Matrix4d frame_at(const GeometrySpec& spec, const Point& p) {
  validate_point(spec, p);
  Eigen::Matrix4d f = Eigen::Matrix4d::Identity();
  switch (spec.kind) {
    case GeometryKind::Sol40:
      f(1, 1) = std::exp(p.t);
      f(2, 2) = std::exp(p.t);
      f(3, 3) = std::exp(-2.0 * p.t);
      break;
    case GeometryKind::Sol4mn:
      f(1, 1) = std::exp(spec.a * p.t);
      f(2, 2) = std::exp(spec.b * p.t);
      f(3, 3) = std::exp(spec.c * p.t);
      break;
    case GeometryKind::Sol41:
      // E1 = t dt + x dx, E2 = dx, E3 = t dy + x dz, E4 = dz.
      f(0, 0) = p.t;
      f(1, 0) = p.x;
      f(2, 2) = p.t;
      f(3, 2) = p.x;
      break;
    case GeometryKind::Nil4:
      // E3 = t dx + dy, E4 = (t^2/2) dx + t dy + dz.
      f(1, 2) = p.t;
      f(1, 3) = 0.5 * p.t * p.t;
      f(2, 3) = p.t;
      break;
  }
  return f;
}

std::array<Eigen::Matrix4d, 4> frame_jacobian_at(const GeometrySpec& spec,
                                                 const Point& p) {
  validate_point(spec, p);
  std::array<Eigen::Matrix4d, 4> d;
  d.fill(Eigen::Matrix4d::Zero());
  switch (spec.kind) {
    case GeometryKind::Sol40:
      d[0](1, 1) = std::exp(p.t);
      d[0](2, 2) = std::exp(p.t);
      d[0](3, 3) = -2.0 * std::exp(-2.0 * p.t);
      break;
    case GeometryKind::Sol4mn:
      d[0](1, 1) = spec.a * std::exp(spec.a * p.t);
      d[0](2, 2) = spec.b * std::exp(spec.b * p.t);
      d[0](3, 3) = spec.c * std::exp(spec.c * p.t);
      break;
    case GeometryKind::Sol41:
      d[0](0, 0) = 1.0;
      d[0](2, 2) = 1.0;
      d[1](1, 0) = 1.0;
      d[1](3, 2) = 1.0;
      break;
    case GeometryKind::Nil4:
      d[0](1, 2) = 1.0;
      d[0](1, 3) = p.t;
      d[0](2, 3) = 1.0;
      break;
  }
  return d;
}

Eigen::Matrix4d frame_basis_change(const GeometrySpec& spec) {
  validate_params(spec);
  Eigen::Matrix4d a = Eigen::Matrix4d::Identity();
  switch (spec.kind) {
    case GeometryKind::Sol40:
    case GeometryKind::Sol4mn:
      break;  // {E1..E4} already orthonormal
    case GeometryKind::Sol41:
      a(0, 0) = 1.0 / std::sqrt(spec.params.tau1);
      a(3, 3) = 1.0 / std::sqrt(spec.params.tau2);
      break;
    case GeometryKind::Nil4: {
      const double s = 1.0 / std::sqrt(spec.params.tau3 -
                                       spec.params.alpha * spec.params.alpha);
      a(0, 0) = 1.0 / std::sqrt(spec.params.tau1);
      a(2, 2) = 1.0 / std::sqrt(spec.params.tau2);
      a(3, 3) = s;
      a(1, 3) = -spec.params.alpha * s;  // (E4 - alpha E2)/sqrt(tau3-alpha^2)
      break;
    }
  }
  return a;
}

Eigen::Matrix4d orthonormal_frame_at(const GeometrySpec& spec,
                                     const Point& p) {
  return frame_at(spec, p) * frame_basis_change(spec);
}

Eigen::Matrix4d gram(const GeometrySpec& spec, const Point& p,
                     const Eigen::Matrix4d& fields) {
  return fields.transpose() * metric_at(spec, p) * fields;
}

MetricField metric_field(const GeometrySpec& spec) {
  return [spec](const Point& p) { return metric_at(spec, p); };
}

}  // namespace thurston4
