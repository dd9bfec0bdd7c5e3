#include "thurston4/kahler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "thurston4/connection.hpp"
#include "thurston4/rng.hpp"

namespace thurston4 {

namespace {

Point offset(const Point& p, int axis, double h) {
  Eigen::Vector4d v = p.vec();
  v[axis] += h;
  return Point::of(v);
}

std::string format_params(const GeometrySpec& spec) {
  char buf[256];
  switch (spec.kind) {
    case GeometryKind::Sol40:
      return "none";
    case GeometryKind::Sol4mn:
      std::snprintf(buf, sizeof(buf), "m=%.17g n=%.17g", spec.m, spec.n);
      return buf;
    case GeometryKind::Sol41:
      std::snprintf(buf, sizeof(buf), "tau1=%.17g tau2=%.17g",
                    spec.params.tau1, spec.params.tau2);
      return buf;
    case GeometryKind::Nil4:
      std::snprintf(buf, sizeof(buf),
                    "tau1=%.17g tau2=%.17g tau3=%.17g alpha=%.17g",
                    spec.params.tau1, spec.params.tau2, spec.params.tau3,
                    spec.params.alpha);
      return buf;
  }
  return "?";
}

}  // namespace

std::vector<Eigen::Matrix4d> enumerate_candidates() {
  // Two disjoint pairs {i,j}, {k,l} with J e_i = s e_j, J e_j = -s e_i.
  const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  std::vector<Eigen::Matrix4d> out;
  for (const int* q : pairings)
    for (double s1 : {1.0, -1.0})
      for (double s2 : {1.0, -1.0}) {
        Eigen::Matrix4d j = Eigen::Matrix4d::Zero();
        j(q[1], q[0]) = s1;
        j(q[0], q[1]) = -s1;
        j(q[3], q[2]) = s2;
        j(q[2], q[3]) = -s2;
        out.push_back(j);
      }
  return out;
}

Eigen::Matrix4d kahler_form(const GeometrySpec& spec, const Eigen::Matrix4d& J,
                            double conformal_exponent, const Point& p) {
  Eigen::Matrix4d frame = orthonormal_frame_at(spec, p);
  Eigen::Matrix4d j_coord = frame * J * frame.inverse();
  Eigen::Matrix4d ghat =
      std::exp(2.0 * conformal_exponent * p.t) * metric_at(spec, p);
  // omega_ab = ghat(J d_a, d_b).
  return j_coord.transpose() * ghat;
}

double d_omega_residual(const GeometrySpec& spec, const Eigen::Matrix4d& J,
                        double conformal_exponent, std::span<const Point> pts,
                        double step) {
  auto omega = [&](const Point& p) {
    return kahler_form(spec, J, conformal_exponent, p);
  };
  double max_res = 0.0;
  for (const Point& p : pts) {
    std::array<Eigen::Matrix4d, 4> dw;
    for (int a = 0; a < 4; ++a) {
      Eigen::Matrix4d d_h =
          (omega(offset(p, a, step)) - omega(offset(p, a, -step))) /
          (2.0 * step);
      Eigen::Matrix4d d_h2 = (omega(offset(p, a, 0.5 * step)) -
                              omega(offset(p, a, -0.5 * step))) /
                             step;
      dw[a] = (4.0 * d_h2 - d_h) / 3.0;
    }
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        for (int c = b + 1; c < 4; ++c) {
          double v = dw[a](b, c) + dw[b](c, a) + dw[c](a, b);
          max_res = std::max(max_res, std::abs(v));
        }
  }
  return max_res;
}

double nijenhuis_residual(const GeometrySpec& spec, const Eigen::Matrix4d& J) {
  StructureConstants c = frame_structure_constants(spec);
  double max_res = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int m = 0; m < 4; ++m) {
        double n = -c[m][i][j];
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l) n += J(k, i) * J(l, j) * c[m][k][l];
        for (int k = 0; k < 4; ++k)
          for (int q = 0; q < 4; ++q)
            n -= J(m, q) * (J(k, i) * c[q][k][j] + J(k, j) * c[q][i][k]);
        max_res = std::max(max_res, std::abs(n));
      }
  return max_res;
}

KahlerScan kahler_scan(const GeometrySpec& spec, int points,
                       std::uint64_t seed) {
  KahlerScan scan;
  scan.geometry = to_string(spec.kind);
  scan.params = format_params(spec);
  scan.seed = seed;
  scan.points = points;
  scan.best_raw = std::numeric_limits<double>::infinity();
  scan.best_rescaled = std::numeric_limits<double>::infinity();
  scan.best_nijenhuis = std::numeric_limits<double>::infinity();

  Rng rng(seed);
  std::vector<Point> pts;
  pts.reserve(points);
  for (int i = 0; i < points; ++i) pts.push_back(rng.point(spec, -1.0, 1.0));

  for (const Eigen::Matrix4d& J : enumerate_candidates()) {
    CandidateResidual row;
    row.J = J;
    row.residual_raw = d_omega_residual(spec, J, 0.0, pts);
    row.residual_rescaled = d_omega_residual(spec, J, 1.0, pts);
    row.nijenhuis = nijenhuis_residual(spec, J);
    scan.best_raw = std::min(scan.best_raw, row.residual_raw);
    scan.best_rescaled = std::min(scan.best_rescaled, row.residual_rescaled);
    scan.best_nijenhuis = std::min(scan.best_nijenhuis, row.nijenhuis);
    scan.rows.push_back(row);
  }
  return scan;
}

void write_report(std::ostream& os, const KahlerScan& scan) {
  char buf[256];
  os << "kahler-scan v1\n";
  os << "geometry " << scan.geometry << "\n";
  os << "params " << scan.params << "\n";
  os << "seed " << scan.seed << "\n";
  os << "points " << scan.points << "\n";
  os << "search-scope constant signed-pair structures in the orthonormal "
        "frame (12 candidates); non-closure here is evidence within this "
        "scope, not a proof over all almost complex structures\n";
  int index = 0;
  for (const CandidateResidual& row : scan.rows) {
    // Compact signature of J: images of the frame vectors.
    std::string sig;
    for (int c = 0; c < 4; ++c)
      for (int r = 0; r < 4; ++r)
        if (row.J(r, c) != 0.0) {
          char part[32];
          std::snprintf(part, sizeof(part), "%se%d->%se%d", c ? " " : "",
                        c + 1, row.J(r, c) > 0 ? "+" : "-", r + 1);
          sig += part;
        }
    std::snprintf(buf, sizeof(buf),
                  "candidate %d [%s] d_omega_raw %.17g d_omega_rescaled "
                  "%.17g nijenhuis %.17g\n",
                  index++, sig.c_str(), row.residual_raw,
                  row.residual_rescaled, row.nijenhuis);
    os << buf;
  }
  std::snprintf(buf, sizeof(buf),
                "best_raw %.17g\nbest_rescaled %.17g\nbest_nijenhuis %.17g\n",
                scan.best_raw, scan.best_rescaled, scan.best_nijenhuis);
  os << buf;
}

}  // namespace thurston4
