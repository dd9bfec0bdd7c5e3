#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "thurston4/connection.hpp"
#include "thurston4/rng.hpp"

using namespace thurston4;

namespace {

std::vector<GeometrySpec> all_specs() {
  return {GeometrySpec::sol40(), GeometrySpec::sol4mn(5.0, 6.0),
          GeometrySpec::sol41(1.7, 0.4),
          GeometrySpec::nil4(0.8, 1.3, 2.0, 0.9)};
}

}  // namespace

TEST_CASE("flat metric has vanishing Christoffels") {
  MetricField flat = [](const Point&) { return Eigen::Matrix4d::Identity(); };
  Christoffels ch = christoffel_fd(flat, Point{0.3, -1.0, 0.5, 2.0});
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(std::abs(ch.gamma[k][i][j]) < 1e-12);
}

TEST_CASE("coordinate Christoffels: symbolic oracle values") {
  // Sol40: Gamma^t_xx = -1/2 g^tt dt(g_xx) = e^{-2t}, = 1 at the origin.
  Christoffels ch = christoffel_fd(GeometrySpec::sol40(), Point{});
  CHECK(ch.gamma[0][1][1] == doctest::Approx(1.0).epsilon(1e-9));

  // Sol4mn: Gamma^x_tx = -a, from the e^{-2at} dx^2 term.
  auto mn = GeometrySpec::sol4mn(5, 6);
  Christoffels chmn = christoffel_fd(mn, Point{0.4, 0.1, -0.3, 0.2});
  CHECK(chmn.gamma[1][0][1] == doctest::Approx(-mn.a).epsilon(1e-9));
}

TEST_CASE("coordinate Christoffels are symmetric in the lower indices") {
  for (const auto& spec : all_specs()) {
    Rng rng(13);
    for (int s = 0; s < 10; ++s) {
      Christoffels ch = christoffel_fd(spec, rng.point(spec, -1.0, 1.0));
      for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            CHECK(ch.gamma[k][i][j] == ch.gamma[k][j][i]);
    }
  }
}

TEST_CASE("sol41 step near the chart boundary is rejected") {
  auto spec = GeometrySpec::sol41(1, 1);
  CHECK_THROWS_AS(christoffel_fd(spec, Point{1e-5, 0, 0, 0}, 1e-4),
                  std::domain_error);
}

TEST_CASE("frame connection: hand Koszul values") {
  // Sol40: nabla_{E2} E2 = E1 from [E1,E2] = E2.
  Christoffels fr = christoffel_frame(GeometrySpec::sol40());
  CHECK(fr.gamma[0][1][1] == doctest::Approx(1.0));
  // All brackets among E2,E3,E4 vanish, so does the connection block.
  CHECK(fr.gamma[2][1][2] == 0.0);
  CHECK(fr.gamma[3][1][2] == 0.0);
  CHECK(fr.gamma[1][2][3] == 0.0);

  // Sol4mn: <nabla_{E2} E2, E1> = a from [e1,e2] = a e2.
  auto mn = GeometrySpec::sol4mn(5, 6);
  CHECK(christoffel_frame(mn).gamma[0][1][1] == doctest::Approx(mn.a));
}

TEST_CASE("frame connection is metric compatible and torsion free") {
  for (const auto& spec : all_specs()) {
    Christoffels fr = christoffel_frame(spec);
    StructureConstants c = frame_structure_constants(spec);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          // <nabla_i e_j, e_k> = -<nabla_i e_k, e_j> (orthonormal frame).
          CHECK(fr.gamma[k][i][j] ==
                doctest::Approx(-fr.gamma[j][i][k]).epsilon(1e-13));
          // nabla_i e_j - nabla_j e_i = [e_i, e_j].
          CHECK(fr.gamma[k][i][j] - fr.gamma[k][j][i] ==
                doctest::Approx(c[k][i][j]).epsilon(1e-13));
        }
  }
}

TEST_CASE("metric compatibility in coordinates (FD oracle)") {
  // d_a g_bc = Gamma^m_ab g_mc + Gamma^m_ac g_bm.
  for (const auto& spec : all_specs()) {
    Rng rng(19);
    MetricField g = metric_field(spec);
    for (int s = 0; s < 10; ++s) {
      Point p = rng.point(spec, -1.0, 1.0);
      Christoffels ch = christoffel_fd(spec, p);
      Eigen::Matrix4d gm = g(p);
      for (int a = 0; a < 4; ++a) {
        Eigen::Vector4d ea = Eigen::Vector4d::Zero();
        ea[a] = 1e-5;
        Eigen::Matrix4d dg = (g(Point::of(p.vec() + ea)) -
                              g(Point::of(p.vec() - ea))) /
                             2e-5;
        for (int b = 0; b < 4; ++b)
          for (int c = 0; c < 4; ++c) {
            double nabla = 0.0;
            for (int m = 0; m < 4; ++m)
              nabla += ch.gamma[m][a][b] * gm(m, c) +
                       ch.gamma[m][a][c] * gm(b, m);
            CHECK(std::abs(dg(b, c) - nabla) < 1e-6);
          }
      }
    }
  }
}
