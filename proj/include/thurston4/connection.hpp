#pragma once

#include "thurston4/group.hpp"
#include "thurston4/metric.hpp"

namespace thurston4 {

enum class ChristoffelBasis { Coordinate, OrthonormalFrame };

/// gamma[k][i][j] = Gamma^k_{ij}. Coordinate symbols are symmetric in
/// (i,j); frame symbols are constant over the manifold and generally not.
struct Christoffels {
  std::array<std::array<std::array<double, 4>, 4>, 4> gamma{};
  ChristoffelBasis basis = ChristoffelBasis::Coordinate;
};

/// Coordinate Christoffel symbols by central differences of the metric,
/// Richardson-extrapolated (steps h and h/2).
Christoffels christoffel_fd(const MetricField& g, const Point& p,
                            double step = 1e-4);
Christoffels christoffel_fd(const GeometrySpec& spec, const Point& p,
                            double step = 1e-4);

/// Structure constants of the orthonormal frame (the Lie-algebra constants
/// conjugated by the constant basis change).
StructureConstants frame_structure_constants(const GeometrySpec& spec);

/// Constant connection coefficients of the orthonormal frame from the
/// Koszul formula: 2<nabla_i e_j, e_k> = c^k_ij - c^i_jk + c^j_ki.
Christoffels christoffel_frame(const GeometrySpec& spec);

}  // namespace thurston4
