#pragma once

#include "thurston4/connection.hpp"

namespace thurston4 {

/// Fully lowered curvature R[i][j][k][l] = <R(e_i,e_j)e_k, e_l> with
/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z
/// (round sphere positive), plus Ricci and scalar derived in the same basis.
struct CurvatureTensor {
  std::array<std::array<std::array<std::array<double, 4>, 4>, 4>, 4> r{};
  Eigen::Matrix4d ricci = Eigen::Matrix4d::Zero();
  double scalar = 0.0;
  ChristoffelBasis basis = ChristoffelBasis::Coordinate;
};

/// Finite-difference route: coordinate Christoffels plus central-difference
/// derivatives of them. `step` is the outer differentiation step; the inner
/// metric step is step/10.
CurvatureTensor riemann_fd_at(const MetricField& g, const Point& p,
                              double step = 1e-3);
CurvatureTensor riemann_fd_at(const GeometrySpec& spec, const Point& p,
                              double step = 1e-3);

/// Algebraic route: constant orthonormal-frame curvature from the Koszul
/// connection coefficients. Point-independent by left invariance.
CurvatureTensor riemann_frame(const GeometrySpec& spec);

/// Frame-route curvature expressed at p in the coordinate basis.
CurvatureTensor riemann_at(const GeometrySpec& spec, const Point& p);

/// Converts a coordinate-basis curvature tensor to components in the frame
/// whose columns are given (used for the dual-route comparison).
CurvatureTensor to_frame_components(const CurvatureTensor& coord,
                                    const Eigen::Matrix4d& frame);

/// Sectional curvature of the plane spanned by u, v (coordinate components)
/// at p, K = R(u,v,v,u) / (|u|^2 |v|^2 - <u,v>^2). Algebraic route.
double sectional(const GeometrySpec& spec, const Point& p,
                 const Eigen::Vector4d& u, const Eigen::Vector4d& v);

Eigen::Matrix4d ricci_at(const GeometrySpec& spec, const Point& p);
double scalar_at(const GeometrySpec& spec, const Point& p);

/// Finite-difference counterparts for oracle and homothety tests.
double sectional_fd(const MetricField& g, const Point& p,
                    const Eigen::Vector4d& u, const Eigen::Vector4d& v,
                    double step = 1e-3);
double scalar_fd(const MetricField& g, const Point& p, double step = 1e-3);

}  // namespace thurston4
