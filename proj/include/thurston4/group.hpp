#pragma once

#include <array>

#include "thurston4/types.hpp"

namespace thurston4 {

/// c[k][i][j] with [e_i, e_j] = sum_k c[k][i][j] e_k, indices 0..3.
using StructureConstants = std::array<std::array<std::array<double, 4>, 4>, 4>;

GroupElement identity(const GeometrySpec& spec);

GroupElement multiply(const GeometrySpec& spec, const GroupElement& g,
                      const GroupElement& h);

GroupElement inverse(const GeometrySpec& spec, const GroupElement& g);

/// Faithful matrix representation: 4x4 for Sol40 and Sol4mn (the paper's
/// upper-triangular form), 3x3 for Sol41, and for Nil4 the affine block
/// [[theta(t), v], [0, 1]] (4x4; theta determines t, so the block form is
/// already faithful).
Eigen::MatrixXd to_matrix(const GeometrySpec& spec, const GroupElement& g);

/// One-parameter unipotent subgroup of Nil3 used in the Nil4 semidirect
/// product: theta(s) theta(t) = theta(s + t).
Eigen::Matrix3d theta(double t);

StructureConstants structure_constants(const GeometrySpec& spec);

}  // namespace thurston4
