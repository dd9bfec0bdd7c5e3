#include "thurston4/curvature.hpp"

namespace thurston4 {

namespace {

Point offset(const Point& p, int axis, double h) {
  Eigen::Vector4d v = p.vec();
  v[axis] += h;
  return Point::of(v);
}

using Gamma = std::array<std::array<std::array<double, 4>, 4>, 4>;

// Richardson-extrapolated central difference of the coordinate
// Christoffels along `axis`. The inner metric step is step/10.
Gamma gamma_derivative(const MetricField& g, const Point& p, int axis,
                       double step) {
  const double inner = step / 10.0;
  auto at = [&](double h) { return christoffel_fd(g, offset(p, axis, h), inner).gamma; };
  Gamma gp = at(step), gm = at(-step), gp2 = at(0.5 * step),
        gm2 = at(-0.5 * step);
  Gamma out{};
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double d_h = (gp[k][i][j] - gm[k][i][j]) / (2.0 * step);
        double d_h2 = (gp2[k][i][j] - gm2[k][i][j]) / step;
        out[k][i][j] = (4.0 * d_h2 - d_h) / 3.0;
      }
  return out;
}

void fill_ricci_scalar(CurvatureTensor& r, const Eigen::Matrix4d& ginv) {
  // Ric_bc = g^{ad} R_{abcd}, scalar = g^{bc} Ric_bc.
  r.ricci.setZero();
  for (int b = 0; b < 4; ++b)
    for (int c = 0; c < 4; ++c) {
      double sum = 0.0;
      for (int a = 0; a < 4; ++a)
        for (int d = 0; d < 4; ++d) sum += ginv(a, d) * r.r[a][b][c][d];
      r.ricci(b, c) = sum;
    }
  r.scalar = (ginv * r.ricci).trace();
}

}  // namespace

CurvatureTensor riemann_fd_at(const MetricField& g, const Point& p,
                              double step) {
  const double inner = step / 10.0;
  Gamma gamma = christoffel_fd(g, p, inner).gamma;
  std::array<Gamma, 4> dgamma;
  for (int a = 0; a < 4; ++a) dgamma[a] = gamma_derivative(g, p, a, step);
  Eigen::Matrix4d gm = g(p);

  CurvatureTensor out;
  out.basis = ChristoffelBasis::Coordinate;
  // R^l_{ijk} = d_i G^l_jk - d_j G^l_ik + G^l_im G^m_jk - G^l_jm G^m_ik,
  // then lower: R_{ijkl} = g_{lm} R^m_{ijk}.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        std::array<double, 4> up{};
        for (int l = 0; l < 4; ++l) {
          double v = dgamma[i][l][j][k] - dgamma[j][l][i][k];
          for (int m = 0; m < 4; ++m)
            v += gamma[l][i][m] * gamma[m][j][k] -
                 gamma[l][j][m] * gamma[m][i][k];
          up[l] = v;
        }
        for (int l = 0; l < 4; ++l) {
          double v = 0.0;
          for (int m = 0; m < 4; ++m) v += gm(l, m) * up[m];
          out.r[i][j][k][l] = v;
        }
      }
  fill_ricci_scalar(out, gm.inverse());
  return out;
}

CurvatureTensor riemann_fd_at(const GeometrySpec& spec, const Point& p,
                              double step) {
  validate_point(spec, p);
  if (spec.kind == GeometryKind::Sol41 && !(p.t - 2.0 * step > 0.0))
    throw std::domain_error(
        "riemann_fd_at: step reaches past the sol41 chart boundary t = 0");
  return riemann_fd_at(metric_field(spec), p, step);
}

CurvatureTensor riemann_frame(const GeometrySpec& spec) {
  StructureConstants c = frame_structure_constants(spec);
  Gamma gamma = christoffel_frame(spec).gamma;

  CurvatureTensor out;
  out.basis = ChristoffelBasis::OrthonormalFrame;
  // Constant coefficients: R_{ijkl} = G^m_jk G^l_im - G^m_ik G^l_jm
  //                                   - c^m_ij G^l_mk  (orthonormal lowering).
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          double v = 0.0;
          for (int m = 0; m < 4; ++m)
            v += gamma[m][j][k] * gamma[l][i][m] -
                 gamma[m][i][k] * gamma[l][j][m] -
                 c[m][i][j] * gamma[l][m][k];
          out.r[i][j][k][l] = v;
        }
  fill_ricci_scalar(out, Eigen::Matrix4d::Identity());
  return out;
}

CurvatureTensor to_frame_components(const CurvatureTensor& coord,
                                    const Eigen::Matrix4d& frame) {
  CurvatureTensor out;
  out.basis = ChristoffelBasis::OrthonormalFrame;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          double v = 0.0;
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
              for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d)
                  v += coord.r[a][b][c][d] * frame(a, i) * frame(b, j) *
                       frame(c, k) * frame(d, l);
          out.r[i][j][k][l] = v;
        }
  out.ricci = frame.transpose() * coord.ricci * frame;
  out.scalar = coord.scalar;
  return out;
}

CurvatureTensor riemann_at(const GeometrySpec& spec, const Point& p) {
  // Push the constant frame tensor to the coordinate basis with the
  // inverse frame (covariant indices).
  CurvatureTensor fr = riemann_frame(spec);
  Eigen::Matrix4d finv = orthonormal_frame_at(spec, p).inverse();

  CurvatureTensor out;
  out.basis = ChristoffelBasis::Coordinate;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double v = 0.0;
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
              for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l)
                  v += fr.r[i][j][k][l] * finv(i, a) * finv(j, b) *
                       finv(k, c) * finv(l, d);
          out.r[a][b][c][d] = v;
        }
  out.ricci = finv.transpose() * fr.ricci * finv;
  out.scalar = fr.scalar;
  return out;
}

double sectional(const GeometrySpec& spec, const Point& p,
                 const Eigen::Vector4d& u, const Eigen::Vector4d& v) {
  CurvatureTensor fr = riemann_frame(spec);
  Eigen::Matrix4d finv = orthonormal_frame_at(spec, p).inverse();
  Eigen::Vector4d uf = finv * u, vf = finv * v;

  double ruvvu = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          ruvvu += fr.r[i][j][k][l] * uf[i] * vf[j] * vf[k] * uf[l];
  double area2 = uf.squaredNorm() * vf.squaredNorm() -
                 uf.dot(vf) * uf.dot(vf);
  if (!(area2 > 1e-14 * uf.squaredNorm() * vf.squaredNorm()))
    throw std::invalid_argument("sectional: u, v span a degenerate plane");
  return ruvvu / area2;
}

Eigen::Matrix4d ricci_at(const GeometrySpec& spec, const Point& p) {
  return riemann_at(spec, p).ricci;
}

double scalar_at(const GeometrySpec& spec, const Point& p) {
  return riemann_frame(spec).scalar;
}

double sectional_fd(const MetricField& g, const Point& p,
                    const Eigen::Vector4d& u, const Eigen::Vector4d& v,
                    double step) {
  CurvatureTensor r = riemann_fd_at(g, p, step);
  double ruvvu = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          ruvvu += r.r[i][j][k][l] * u[i] * v[j] * v[k] * u[l];
  Eigen::Matrix4d gm = g(p);
  double uu = u.dot(gm * u), vv = v.dot(gm * v), uv = u.dot(gm * v);
  return ruvvu / (uu * vv - uv * uv);
}

double scalar_fd(const MetricField& g, const Point& p, double step) {
  return riemann_fd_at(g, p, step).scalar;
}

}  // namespace thurston4
