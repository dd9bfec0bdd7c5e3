#include "thurston4/connection.hpp"

namespace thurston4 {

namespace {

Point offset(const Point& p, int axis, double h) {
  Eigen::Vector4d v = p.vec();
  v[axis] += h;
  return Point::of(v);
}

// Richardson-extrapolated central difference of the metric along `axis`.
Eigen::Matrix4d metric_derivative(const MetricField& g, const Point& p,
                                  int axis, double h) {
  Eigen::Matrix4d d_h =
      (g(offset(p, axis, h)) - g(offset(p, axis, -h))) / (2.0 * h);
  Eigen::Matrix4d d_h2 = (g(offset(p, axis, 0.5 * h)) -
                          g(offset(p, axis, -0.5 * h))) /
                         h;
  return (4.0 * d_h2 - d_h) / 3.0;
}

}  // namespace

Christoffels christoffel_fd(const MetricField& g, const Point& p,
                            double step) {
  std::array<Eigen::Matrix4d, 4> dg;
  for (int a = 0; a < 4; ++a) dg[a] = metric_derivative(g, p, a, step);
  Eigen::Matrix4d ginv = g(p).inverse();

  Christoffels out;
  out.basis = ChristoffelBasis::Coordinate;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        double sum = 0.0;
        for (int l = 0; l < 4; ++l)
          sum += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        out.gamma[k][i][j] = out.gamma[k][j][i] = 0.5 * sum;
      }
  return out;
}

Christoffels christoffel_fd(const GeometrySpec& spec, const Point& p,
                            double step) {
  validate_point(spec, p);
  if (spec.kind == GeometryKind::Sol41 && !(p.t - 2.0 * step > 0.0))
    throw std::domain_error(
        "christoffel_fd: step reaches past the sol41 chart boundary t = 0");
  return christoffel_fd(metric_field(spec), p, step);
}

StructureConstants frame_structure_constants(const GeometrySpec& spec) {
  StructureConstants c = structure_constants(spec);
  Eigen::Matrix4d a = frame_basis_change(spec);
  Eigen::Matrix4d ainv = a.inverse();

  // [O_i, O_j] = A_ki A_lj c^p_kl (A^-1)_qp O_q.
  StructureConstants ct{};
  for (int q = 0; q < 4; ++q)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double sum = 0.0;
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l)
            for (int p = 0; p < 4; ++p)
              sum += a(k, i) * a(l, j) * c[p][k][l] * ainv(q, p);
        ct[q][i][j] = sum;
      }
  return ct;
}

Christoffels christoffel_frame(const GeometrySpec& spec) {
  StructureConstants c = frame_structure_constants(spec);
  Christoffels out;
  out.basis = ChristoffelBasis::OrthonormalFrame;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        out.gamma[k][i][j] =
            0.5 * (c[k][i][j] - c[i][j][k] + c[j][k][i]);
  return out;
}

}  // namespace thurston4
