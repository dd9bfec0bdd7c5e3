#pragma once

#include <array>
#include <functional>

#include "thurston4/types.hpp"

namespace thurston4 {

/// Throws std::invalid_argument naming the violated constraint; returns
/// normally iff the parameters are admissible for the geometry.
void validate_params(const GeometrySpec& spec);

/// G-invariant metric in the coordinate basis (dt, dx, dy, dz).
/// Symmetric positive definite at every admissible point.
Eigen::Matrix4d metric_at(const GeometrySpec& spec, const Point& p);

Eigen::Matrix4d inverse_metric_at(const GeometrySpec& spec, const Point& p);

/// Column i holds the coordinate components of the left-invariant field
/// E_{i+1} at p.
Eigen::Matrix4d frame_at(const GeometrySpec& spec, const Point& p);

/// d[b] = partial derivative of frame_at w.r.t. coordinate b (closed form).
std::array<Eigen::Matrix4d, 4> frame_jacobian_at(const GeometrySpec& spec,
                                                 const Point& p);

/// Constant matrix A with orthonormal_frame = frame * A.
Eigen::Matrix4d frame_basis_change(const GeometrySpec& spec);

/// The paper's orthonormal frame for the configured metric parameters.
Eigen::Matrix4d orthonormal_frame_at(const GeometrySpec& spec, const Point& p);

/// Gram matrix G_ij = g(f_i, f_j) of the given frame columns.
Eigen::Matrix4d gram(const GeometrySpec& spec, const Point& p,
                     const Eigen::Matrix4d& fields);

/// Point -> metric matrix, for routines that also run on modified metrics
/// (flat checks, perturbed-metric negative controls).
using MetricField = std::function<Eigen::Matrix4d(const Point&)>;

MetricField metric_field(const GeometrySpec& spec);

}  // namespace thurston4
