#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "thurston4/group.hpp"
#include "thurston4/isometry.hpp"
#include "thurston4/rng.hpp"

using namespace thurston4;

namespace {

std::vector<GeometrySpec> all_specs() {
  return {GeometrySpec::sol40(), GeometrySpec::sol4mn(5.0, 6.0),
          GeometrySpec::sol41(1.7, 0.4),
          GeometrySpec::nil4(0.8, 1.3, 2.0, 0.9)};
}

Eigen::Matrix4d fd_jacobian(const Isometry& phi, const Point& p,
                            double h = 1e-6) {
  Eigen::Matrix4d j;
  for (int c = 0; c < 4; ++c) {
    Eigen::Vector4d e = Eigen::Vector4d::Zero();
    e[c] = h;
    j.col(c) = (phi(Point::of(p.vec() + e)).vec() -
                phi(Point::of(p.vec() - e)).vec()) /
               (2.0 * h);
  }
  return j;
}

Isometry compose(const Isometry& f, const Isometry& g) {
  // f after g.
  return {f.name + "*" + g.name,
          [f, g](const Point& p) { return f(g(p)); },
          [f, g](const Point& p) {
            return Eigen::Matrix4d(f.jacobian(g(p)) * g.jacobian(p));
          }};
}

}  // namespace

TEST_CASE("left translation by the identity is the identity map") {
  for (const auto& spec : all_specs()) {
    Isometry lg = left_translation(spec, identity(spec));
    Rng rng(3);
    Point p = rng.point(spec);
    CHECK((lg(p).vec() - p.vec()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(lg.jacobian(p).isIdentity(1e-15));
  }
}

TEST_CASE("sol40 left translation golden Jacobian") {
  auto spec = GeometrySpec::sol40();
  Isometry lg = left_translation(spec, Point{1, 0, 0, 0});
  Point p{0.3, -0.7, 1.1, 0.2};
  Point moved = lg(p);
  CHECK(moved.t == doctest::Approx(p.t + 1.0));
  CHECK(moved.x == doctest::Approx(std::exp(1.0) * p.x));
  CHECK(moved.z == doctest::Approx(std::exp(-2.0) * p.z));
  Eigen::Matrix4d j = lg.jacobian(p);
  CHECK(j(0, 0) == 1.0);
  CHECK(j(1, 1) == doctest::Approx(std::exp(1.0)));
  CHECK(j(2, 2) == doctest::Approx(std::exp(1.0)));
  CHECK(j(3, 3) == doctest::Approx(std::exp(-2.0)));
}

TEST_CASE("left translations compose like the group") {
  for (const auto& spec : all_specs()) {
    Rng rng(5);
    for (int s = 0; s < 10; ++s) {
      Point g = rng.point(spec), h = rng.point(spec);
      Isometry lg = left_translation(spec, g);
      Isometry lh = left_translation(spec, h);
      Isometry lgh = left_translation(spec, multiply(spec, g, h));
      for (int i = 0; i < 10; ++i) {
        Point p = rng.point(spec);
        CHECK((lg(lh(p)).vec() - lgh(p).vec()).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }
}

TEST_CASE("exact Jacobians match finite differences") {
  for (const auto& spec : all_specs()) {
    Rng rng(7);
    std::vector<Isometry> maps = stabilizer_generators(spec);
    for (int i = 0; i < 10; ++i)
      maps.push_back(left_translation(spec, rng.point(spec)));
    for (const Isometry& phi : maps)
      for (int s = 0; s < 10; ++s) {
        Point p = rng.point(spec);
        CHECK((phi.jacobian(p) - fd_jacobian(phi, p)).cwiseAbs().maxCoeff() <
              1e-7);
      }
  }
}

TEST_CASE("generator relations") {
  Rng rng(9);
  for (const auto& spec : all_specs()) {
    for (const Isometry& phi : stabilizer_generators(spec)) {
      if (phi.name == "r") continue;  // order 4, checked below
      if (phi.name.rfind("rotation", 0) == 0) continue;
      for (int s = 0; s < 10; ++s) {
        Point p = rng.point(spec);
        CHECK((phi(phi(p)).vec() - p.vec()).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }

  // Dihedral relations for sol41: r^4 = id, s r s = r^-1.
  auto spec = GeometrySpec::sol41(1.7, 0.4);
  auto gens = stabilizer_generators(spec);
  REQUIRE(gens.size() == 2);
  const Isometry& s = gens[0];
  const Isometry& r = gens[1];
  CHECK(r(identity(spec)).vec() == Eigen::Vector4d(1, 0, 0, 0));
  Isometry r2 = compose(r, r);
  Isometry r4 = compose(r2, r2);
  Isometry srs = compose(s, compose(r, s));
  Isometry srs_r = compose(srs, r);  // should be the identity map
  for (int i = 0; i < 20; ++i) {
    Point p = rng.point(spec);
    CHECK((r4(p).vec() - p.vec()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((srs_r(p).vec() - p.vec()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("pullback of the metric") {
  for (const auto& spec : all_specs()) {
    Rng rng(11);
    Point p = rng.point(spec);
    CHECK((pullback_metric(spec, identity_isometry(), p) - metric_at(spec, p))
              .cwiseAbs()
              .maxCoeff() == 0.0);
  }
  // Rotation by pi/3 preserves the sol40 metric.
  auto sol40 = GeometrySpec::sol40();
  Point p{0.5, 1.2, -0.3, 0.8};
  CHECK((pullback_metric(sol40, sol40_rotation(M_PI / 3), p) -
         metric_at(sol40, p))
            .cwiseAbs()
            .maxCoeff() < 1e-10);
  // Nil4 s2 preserves every valid parameter draw.
  auto nil4 = GeometrySpec::nil4(0.8, 1.3, 2.0, 0.9);
  Point q{0.7, -0.4, 0.9, 0.1};
  Isometry s2 = stabilizer_generators(nil4)[1];
  CHECK((pullback_metric(nil4, s2, q) - metric_at(nil4, q))
            .cwiseAbs()
            .maxCoeff() < 1e-10);
}

TEST_CASE("invariance report certifies all generators") {
  for (const auto& spec : all_specs()) {
    InvarianceReport report = invariance_report(spec, 200, 12345);
    CHECK(report.max_residual < 1e-9);
    CHECK(!report.rows.empty());
  }
}

TEST_CASE("invariance report is deterministic given the seed") {
  auto spec = GeometrySpec::sol41(1.7, 0.4);
  std::ostringstream a, b;
  write_report(a, invariance_report(spec, 50, 99));
  write_report(b, invariance_report(spec, 50, 99));
  CHECK(a.str() == b.str());
  std::ostringstream c;
  write_report(c, invariance_report(spec, 50, 100));
  CHECK(a.str() != c.str());
}

TEST_CASE("zero samples give an empty report") {
  InvarianceReport report = invariance_report(GeometrySpec::sol40(), 0, 1);
  CHECK(report.rows.empty());
  CHECK(report.max_residual == 0.0);
}

TEST_CASE("negative control: a perturbed metric must be detected") {
  auto spec = GeometrySpec::sol40();
  MetricField g = metric_field(spec);
  MetricField perturbed = [g](const Point& p) {
    Eigen::Matrix4d m = g(p);
    m(0, 1) += 0.1;
    m(1, 0) += 0.1;
    return m;
  };
  InvarianceReport report = invariance_report(spec, 200, 12345, 50, perturbed);
  CHECK(report.max_residual > 1e-3);
}
