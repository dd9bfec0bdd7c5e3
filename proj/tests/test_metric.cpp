#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "thurston4/group.hpp"
#include "thurston4/isometry.hpp"
#include "thurston4/metric.hpp"
#include "thurston4/rng.hpp"
#include "thurston4/roots.hpp"

using namespace thurston4;

namespace {

std::vector<GeometrySpec> all_specs() {
  return {GeometrySpec::sol40(), GeometrySpec::sol4mn(5.0, 6.0),
          GeometrySpec::sol41(1.7, 0.4),
          GeometrySpec::nil4(0.8, 1.3, 2.0, 0.9)};
}

GeometrySpec random_spec(GeometryKind kind, Rng& rng) {
  switch (kind) {
    case GeometryKind::Sol40: return GeometrySpec::sol40();
    case GeometryKind::Sol4mn:
      // Rejection-sample pairs whose cubic has three distinct real roots.
      for (;;) {
        double m = rng.uniform(3.5, 9.0);
        double n = rng.uniform(3.5, 9.0);
        if (std::abs(m - n) < 0.2) continue;
        if (solve_roots(m, n).kind == RootKind::ThreeDistinct)
          return GeometrySpec::sol4mn(m, n);
      }
    case GeometryKind::Sol41:
      return GeometrySpec::sol41(rng.uniform(0.2, 3.0), rng.uniform(0.2, 3.0));
    case GeometryKind::Nil4: {
      double tau3 = rng.uniform(0.5, 3.0);
      double alpha = rng.uniform(-0.9, 0.9) * std::sqrt(tau3);
      return GeometrySpec::nil4(rng.uniform(0.2, 3.0), rng.uniform(0.2, 3.0),
                                tau3, alpha);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(validate_params(GeometrySpec::nil4(1, 1, 1, 0)));
  CHECK_THROWS_AS(GeometrySpec::nil4(1, 1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(GeometrySpec::sol41(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(GeometrySpec::sol41(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(GeometrySpec::nil4(1, 1, 0, 0), std::invalid_argument);
}

TEST_CASE("metric golden values") {
  auto sol40 = GeometrySpec::sol40();
  CHECK(metric_at(sol40, Point{}).isIdentity(1e-15));
  Eigen::Matrix4d g1 = metric_at(sol40, Point{1, 0, 0, 0});
  CHECK(g1(0, 0) == 1.0);
  CHECK(g1(1, 1) == doctest::Approx(std::exp(-2.0)));
  CHECK(g1(2, 2) == doctest::Approx(std::exp(-2.0)));
  CHECK(g1(3, 3) == doctest::Approx(std::exp(4.0)));

  // Cross terms vanish at x = 0.
  auto sol41 = GeometrySpec::sol41(1, 1);
  CHECK(metric_at(sol41, Point{1, 0, 0, 0}).isIdentity(1e-15));
}

TEST_CASE("inverse metric") {
  auto sol40 = GeometrySpec::sol40();
  CHECK(inverse_metric_at(sol40, Point{}).isIdentity(1e-15));
  Eigen::Matrix4d gi = inverse_metric_at(sol40, Point{1, 0, 0, 0});
  CHECK(gi(1, 1) == doctest::Approx(std::exp(2.0)));
  CHECK(gi(3, 3) == doctest::Approx(std::exp(-4.0)));

  for (const auto& spec : all_specs()) {
    Rng rng(3);
    for (int i = 0; i < 30; ++i) {
      Point p = rng.point(spec);
      Eigen::Matrix4d prod = metric_at(spec, p) * inverse_metric_at(spec, p);
      CHECK((prod - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() <
            1e-12);
    }
  }
}

TEST_CASE("frame golden values") {
  CHECK(frame_at(GeometrySpec::sol40(), Point{}).isIdentity(1e-15));

  auto mn = GeometrySpec::sol4mn(5, 6);
  Eigen::Matrix4d f = frame_at(mn, Point{1, 0, 0, 0});
  CHECK(f(1, 1) == doctest::Approx(std::exp(mn.a)));
  CHECK(f(2, 2) == doctest::Approx(std::exp(mn.b)));
  CHECK(f(3, 3) == doctest::Approx(std::exp(mn.c)));

  Eigen::Vector4d e4 =
      frame_at(GeometrySpec::nil4(1, 1, 1, 0), Point{2, 0, 0, 0}).col(3);
  CHECK(e4 == Eigen::Vector4d(0, 2, 2, 1));

  // Sol41: E1 = t dt + x dx, E3 = t dy + x dz.
  Eigen::Matrix4d f41 =
      frame_at(GeometrySpec::sol41(1, 1), Point{2, 3, 0, 0});
  CHECK(f41.col(0) == Eigen::Vector4d(2, 3, 0, 0));
  CHECK(f41.col(2) == Eigen::Vector4d(0, 0, 2, 3));
}

TEST_CASE("frames are nondegenerate and metrics positive definite") {
  Rng rng(17);
  for (GeometryKind kind : {GeometryKind::Sol40, GeometryKind::Sol4mn,
                            GeometryKind::Sol41, GeometryKind::Nil4}) {
    for (int draw = 0; draw < 10; ++draw) {
      GeometrySpec spec = random_spec(kind, rng);
      for (int i = 0; i < 100; ++i) {
        Point p = rng.point(spec);
        CHECK(std::abs(frame_at(spec, p).determinant()) > 1e-12);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(metric_at(spec, p));
        CHECK(es.eigenvalues().minCoeff() > 0.0);
      }
    }
  }
}

TEST_CASE("orthonormal frames have identity Gram matrix") {
  Rng rng(29);
  for (GeometryKind kind : {GeometryKind::Sol40, GeometryKind::Sol4mn,
                            GeometryKind::Sol41, GeometryKind::Nil4}) {
    for (int draw = 0; draw < 5; ++draw) {
      GeometrySpec spec = random_spec(kind, rng);
      for (int i = 0; i < 50; ++i) {
        Point p = rng.point(spec);
        Eigen::Matrix4d gr = gram(spec, p, orthonormal_frame_at(spec, p));
        CHECK((gr - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() <
              1e-12);
      }
    }
  }
}

TEST_CASE("orthonormal frame reductions") {
  // alpha = 0, tau3 = 1: fourth field is E4 itself.
  auto nil4 = GeometrySpec::nil4(1, 1, 1, 0);
  Point p{0.7, 0.1, -0.2, 0.5};
  CHECK((orthonormal_frame_at(nil4, p).col(3) - frame_at(nil4, p).col(3))
            .cwiseAbs()
            .maxCoeff() < 1e-15);
  // tau1 = 4: first field is E1 / 2.
  auto sol41 = GeometrySpec::sol41(4, 1);
  Point q{2, 1, 0, 0};
  CHECK((orthonormal_frame_at(sol41, q).col(0) -
         0.5 * frame_at(sol41, q).col(0))
            .cwiseAbs()
            .maxCoeff() < 1e-15);
}

TEST_CASE("gram of the coordinate basis is the metric") {
  for (const auto& spec : all_specs()) {
    Rng rng(37);
    Point p = rng.point(spec);
    CHECK((gram(spec, p, Eigen::Matrix4d::Identity()) - metric_at(spec, p))
              .cwiseAbs()
              .maxCoeff() == 0.0);
  }
  // Left-invariant frame of sol41 with tau1 = tau2 = 1 is orthonormal.
  auto spec = GeometrySpec::sol41(1, 1);
  Point p{1.5, -0.8, 0.3, 2.0};
  CHECK((gram(spec, p, frame_at(spec, p)) - Eigen::Matrix4d::Identity())
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}

TEST_CASE("frames are left invariant") {
  for (const auto& spec : all_specs()) {
    Rng rng(43);
    for (int i = 0; i < 25; ++i) {
      Point g = rng.point(spec);
      Isometry lg = left_translation(spec, g);
      Eigen::Matrix4d pushed =
          lg.jacobian(identity(spec)) * frame_at(spec, identity(spec));
      CHECK((pushed - frame_at(spec, g)).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("inadmissible points are rejected") {
  auto spec = GeometrySpec::sol41(1, 1);
  CHECK_THROWS_AS(metric_at(spec, Point{-1, 0, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(frame_at(spec, Point{0, 0, 0, 0}), std::domain_error);
}
