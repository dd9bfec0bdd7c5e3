#pragma once

#include <iosfwd>
#include <vector>

#include "thurston4/curvature.hpp"

namespace thurston4 {

struct GeodesicState {
  Point position;
  Eigen::Vector4d velocity = Eigen::Vector4d::Zero();
  double s = 0.0;
};

enum class TrajectoryStatus { Complete, ChartExit };

struct Trajectory {
  std::vector<GeodesicState> samples;
  double dt = 0.0;
  TrajectoryStatus status = TrajectoryStatus::Complete;
  double max_energy_drift = 0.0;
};

/// Geodesic right-hand side d(position, velocity)/ds in chart coordinates.
/// Internally the connection acts through the constant orthonormal-frame
/// coefficients, so no finite differencing enters the flow.
Eigen::Matrix<double, 8, 1> geodesic_rhs(const GeometrySpec& spec,
                                         const GeodesicState& state);

/// Classical fixed-step 4th-order integration from (p, v) to parameter T.
/// A chart exit (Sol41 t -> 0) terminates with the partial trajectory and
/// status ChartExit.
Trajectory integrate_geodesic(const GeometrySpec& spec, const Point& p,
                              const Eigen::Vector4d& v, double T, double dt);

Point exp_map(const GeometrySpec& spec, const Point& p,
              const Eigen::Vector4d& v, double dt = 1e-3);

struct ShootingOptions {
  int max_newton = 40;
  double tolerance = 1e-8;  // weighted endpoint error
  double dt = 1e-2;         // integrator step for the shooting map
  double fd_step = 1e-6;    // Jacobian step, relative
};

struct ShootingResult {
  Eigen::Vector4d velocity = Eigen::Vector4d::Zero();
  double endpoint_error = 0.0;
  double length = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Point-to-point distance by multi-start damped-Newton shooting on
/// exp_p(v) = q. The endpoint residual is measured in the chart weighted by
/// the metric square root at q. Eight starts: +-coordinate directions
/// scaled to the initial weighted chart distance. The returned length is an
/// upper bound on the distance; converged == false is reported honestly.
ShootingResult distance_shooting(const GeometrySpec& spec, const Point& p,
                                 const Point& q,
                                 const ShootingOptions& opts = {});

/// CSV schema: s,t,x,y,z,vt,vx,vy,vz,energy, 17 significant digits.
void write_trajectory_csv(std::ostream& os, const GeometrySpec& spec,
                          const Trajectory& traj);

}  // namespace thurston4
