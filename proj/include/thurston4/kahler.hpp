#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "thurston4/metric.hpp"

namespace thurston4 {

/// The 12 constant almost complex structures with signed-pair form in the
/// orthonormal frame: J e_i = +-e_j, J e_j = -+e_i on two disjoint pairs.
/// Each satisfies J^2 = -I and J^T J = I exactly.
std::vector<Eigen::Matrix4d> enumerate_candidates();

/// Kahler 2-form omega(X,Y) = ghat(JX, Y) in the coordinate basis, where
/// ghat = exp(2 * conformal_exponent * t) * g and J is given in the
/// orthonormal frame.
Eigen::Matrix4d kahler_form(const GeometrySpec& spec, const Eigen::Matrix4d& J,
                            double conformal_exponent, const Point& p);

/// Max |(d omega)_abc| over the points and index triples, exterior
/// derivative by Richardson-extrapolated central differences.
double d_omega_residual(const GeometrySpec& spec, const Eigen::Matrix4d& J,
                        double conformal_exponent, std::span<const Point> pts,
                        double step = 1e-5);

/// Max frame component of the Nijenhuis tensor of the candidate,
/// N(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y], evaluated algebraically
/// on the orthonormal-frame structure constants (exact, no differencing).
/// Zero iff the almost complex structure is integrable. Closedness of the
/// form and integrability are independent: Nil4 carries candidates with
/// closed form but nonzero Nijenhuis tensor.
double nijenhuis_residual(const GeometrySpec& spec, const Eigen::Matrix4d& J);

struct CandidateResidual {
  Eigen::Matrix4d J;
  double residual_raw = 0.0;       // conformal exponent 0
  double residual_rescaled = 0.0;  // conformal exponent 1
  double nijenhuis = 0.0;          // integrability obstruction
};

struct KahlerScan {
  std::string geometry;
  std::string params;
  std::uint64_t seed = 0;
  int points = 0;
  std::vector<CandidateResidual> rows;
  double best_raw = 0.0;
  double best_rescaled = 0.0;
  double best_nijenhuis = 0.0;
};

/// Scans every candidate at `points` random points (coordinates in [-1,1],
/// Sol41 t in [e^-1, e]) for conformal exponents 0 and 1.
KahlerScan kahler_scan(const GeometrySpec& spec, int points,
                       std::uint64_t seed);

void write_report(std::ostream& os, const KahlerScan& scan);

}  // namespace thurston4
