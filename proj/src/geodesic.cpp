#include "thurston4/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace thurston4 {

namespace {

// Per-spec cache for the geodesic flow: constant frame connection plus the
// closed-form frame and its Jacobian.
struct GeodesicSystem {
  GeometrySpec spec;
  std::array<std::array<std::array<double, 4>, 4>, 4> gamma;  // frame basis
  Eigen::Matrix4d basis_change;

  explicit GeodesicSystem(const GeometrySpec& s)
      : spec(s),
        gamma(christoffel_frame(s).gamma),
        basis_change(frame_basis_change(s)) {}

  bool admissible(const Eigen::Vector4d& x) const {
    return spec.kind != GeometryKind::Sol41 || x[0] > 0.0;
  }

  // State (x, v) in chart coordinates. The velocity is re-expressed in the
  // orthonormal frame, advected with the constant coefficients and mapped
  // back, so the right-hand side is exact.
  void rhs(const Eigen::Vector4d& x, const Eigen::Vector4d& v,
           Eigen::Vector4d& dx, Eigen::Vector4d& dv) const {
    Point p = Point::of(x);
    Eigen::Matrix4d frame = frame_at(spec, p) * basis_change;
    Eigen::Vector4d u = frame.partialPivLu().solve(v);

    Eigen::Vector4d udot;
    for (int l = 0; l < 4; ++l) {
      double s = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s += gamma[l][j][i] * u[j] * u[i];
      udot[l] = -s;
    }

    std::array<Eigen::Matrix4d, 4> dframe = frame_jacobian_at(spec, p);
    Eigen::Matrix4d frame_dot = Eigen::Matrix4d::Zero();
    for (int b = 0; b < 4; ++b) frame_dot += v[b] * dframe[b] * basis_change;

    dx = v;
    dv = frame * udot + frame_dot * u;
  }

  // One classical 4th-order step; returns false on a chart exit.
  bool step(Eigen::Vector4d& x, Eigen::Vector4d& v, double h) const {
    Eigen::Vector4d k1x, k1v, k2x, k2v, k3x, k3v, k4x, k4v;
    rhs(x, v, k1x, k1v);
    Eigen::Vector4d x2 = x + 0.5 * h * k1x;
    if (!admissible(x2)) return false;
    rhs(x2, v + 0.5 * h * k1v, k2x, k2v);
    Eigen::Vector4d x3 = x + 0.5 * h * k2x;
    if (!admissible(x3)) return false;
    rhs(x3, v + 0.5 * h * k2v, k3x, k3v);
    Eigen::Vector4d x4 = x + h * k3x;
    if (!admissible(x4)) return false;
    rhs(x4, v + h * k3v, k4x, k4v);
    x += (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    v += (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    return admissible(x);
  }
};

double energy(const GeometrySpec& spec, const Eigen::Vector4d& x,
              const Eigen::Vector4d& v) {
  Eigen::Matrix4d g = metric_at(spec, Point::of(x));
  return v.dot(g * v);
}

}  // namespace

Eigen::Matrix<double, 8, 1> geodesic_rhs(const GeometrySpec& spec,
                                         const GeodesicState& state) {
  validate_point(spec, state.position);
  GeodesicSystem sys(spec);
  Eigen::Vector4d dx, dv;
  sys.rhs(state.position.vec(), state.velocity, dx, dv);
  Eigen::Matrix<double, 8, 1> out;
  out << dx, dv;
  return out;
}

Trajectory integrate_geodesic(const GeometrySpec& spec, const Point& p,
                              const Eigen::Vector4d& v, double T, double dt) {
  if (!(dt > 0.0) || !(T > 0.0))
    throw std::invalid_argument("integrate_geodesic: T and dt must be > 0");
  validate_point(spec, p);

  GeodesicSystem sys(spec);
  Eigen::Vector4d x = p.vec(), vel = v;
  const double e0 = energy(spec, x, vel);

  Trajectory traj;
  traj.dt = dt;
  const int steps = static_cast<int>(std::llround(T / dt));
  traj.samples.reserve(steps + 1);
  traj.samples.push_back({Point::of(x), vel, 0.0});

  for (int i = 0; i < steps; ++i) {
    if (!sys.step(x, vel, dt)) {
      traj.status = TrajectoryStatus::ChartExit;
      return traj;
    }
    double s = (i + 1) * dt;
    traj.samples.push_back({Point::of(x), vel, s});
    traj.max_energy_drift =
        std::max(traj.max_energy_drift, std::abs(energy(spec, x, vel) - e0));
  }
  return traj;
}

Point exp_map(const GeometrySpec& spec, const Point& p,
              const Eigen::Vector4d& v, double dt) {
  if (v.norm() == 0.0) return p;
  Trajectory traj = integrate_geodesic(spec, p, v, 1.0, dt);
  if (traj.status != TrajectoryStatus::Complete)
    throw std::domain_error("exp_map: geodesic left the chart");
  return traj.samples.back().position;
}

ShootingResult distance_shooting(const GeometrySpec& spec, const Point& p,
                                 const Point& q, const ShootingOptions& opts) {
  validate_point(spec, p);
  validate_point(spec, q);

  Eigen::Matrix4d gq = metric_at(spec, q);
  Eigen::Matrix4d weight =
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d>(gq).operatorSqrt();

  GeodesicSystem sys(spec);
  auto shoot = [&](const Eigen::Vector4d& v,
                   Eigen::Vector4d& residual) -> bool {
    Eigen::Vector4d x = p.vec(), vel = v;
    const int steps = std::max(1, static_cast<int>(std::llround(1.0 / opts.dt)));
    for (int i = 0; i < steps; ++i)
      if (!sys.step(x, vel, 1.0 / steps)) return false;
    residual = weight * (x - q.vec());
    return true;
  };

  const double d0 = (weight * (q.vec() - p.vec())).norm();
  Eigen::Matrix4d gp = metric_at(spec, p);

  ShootingResult best;
  best.endpoint_error = std::numeric_limits<double>::infinity();
  bool have_any = false;

  for (int start = 0; start < 8; ++start) {
    int axis = start / 2;
    double sign = (start % 2 == 0) ? 1.0 : -1.0;
    Eigen::Vector4d dir = Eigen::Vector4d::Zero();
    dir[axis] = 1.0;
    dir /= std::sqrt(dir.dot(gp * dir));  // unit speed in that direction
    Eigen::Vector4d v = sign * d0 * dir;

    Eigen::Vector4d r;
    if (!shoot(v, r)) continue;
    double err = r.norm();
    int iter = 0;
    bool failed = false;

    while (err > opts.tolerance && iter < opts.max_newton) {
      ++iter;
      // Forward-difference Jacobian of the shooting map.
      Eigen::Matrix4d jac;
      double h = opts.fd_step * std::max(1.0, v.norm());
      bool jac_ok = true;
      for (int c = 0; c < 4; ++c) {
        Eigen::Vector4d vp = v;
        vp[c] += h;
        Eigen::Vector4d rp;
        if (!shoot(vp, rp)) {
          jac_ok = false;
          break;
        }
        jac.col(c) = (rp - r) / h;
      }
      if (!jac_ok) {
        failed = true;
        break;
      }
      Eigen::Vector4d delta = jac.fullPivLu().solve(-r);

      // Backtracking damping.
      double lambda = 1.0;
      bool improved = false;
      for (int bt = 0; bt < 12; ++bt) {
        Eigen::Vector4d vt = v + lambda * delta;
        Eigen::Vector4d rt;
        if (shoot(vt, rt) && rt.norm() < err) {
          v = vt;
          r = rt;
          err = rt.norm();
          improved = true;
          break;
        }
        lambda *= 0.5;
      }
      if (!improved) break;  // stalled; keep the best point reached
    }

    if (failed) continue;
    ShootingResult cand;
    cand.velocity = v;
    cand.endpoint_error = err;
    cand.length = std::sqrt(std::max(0.0, v.dot(gp * v)));
    cand.iterations = iter;
    cand.converged = err < opts.tolerance;

    // Deterministic merge: converged first, then shortest, then first start.
    bool better;
    if (!have_any) {
      better = true;
    } else if (cand.converged != best.converged) {
      better = cand.converged;
    } else if (cand.converged) {
      better = cand.length < best.length - 1e-12;
    } else {
      better = cand.endpoint_error < best.endpoint_error;
    }
    if (better) best = cand;
    have_any = true;
  }

  if (!have_any) best.endpoint_error = d0;  // every start exited the chart
  return best;
}

void write_trajectory_csv(std::ostream& os, const GeometrySpec& spec,
                          const Trajectory& traj) {
  os << "s,t,x,y,z,vt,vx,vy,vz,energy\n";
  char buf[512];
  for (const GeodesicState& st : traj.samples) {
    double e = energy(spec, st.position.vec(), st.velocity);
    std::snprintf(buf, sizeof(buf),
                  "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                  "%.17g\n",
                  st.s, st.position.t, st.position.x, st.position.y,
                  st.position.z, st.velocity[0], st.velocity[1],
                  st.velocity[2], st.velocity[3], e);
    os << buf;
  }
}

}  // namespace thurston4
