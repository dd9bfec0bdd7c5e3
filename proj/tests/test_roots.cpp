#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "thurston4/roots.hpp"
#include "thurston4/types.hpp"

using namespace thurston4;

namespace {

// Independent oracle: isolate each root of x^3 - m x^2 + n x - 1 by plain
// bisection between hand-checked sign changes.
double bisect_oracle(double m, double n, double lo, double hi) {
  auto f = [&](double x) { return x * x * x - m * x * x + n * x - 1.0; };
  REQUIRE(f(lo) * f(hi) < 0.0);
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (f(lo) * f(mid) <= 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

void check_vieta(double m, double n, const RootClassification& r) {
  double l1 = r.lambda[0], l2 = r.lambda[1], l3 = r.lambda[2];
  CHECK(std::abs(l1 * l2 * l3 - 1.0) < 1e-11);
  CHECK(std::abs(l1 + l2 + l3 - m) < 1e-11);
  CHECK(std::abs(l1 * l2 + l1 * l3 + l2 * l3 - n) < 1e-11);
}

}  // namespace

TEST_CASE("(5,6) has three distinct roots in the oracle brackets") {
  // f(0) = -1 < 0, f(0.2) > 0, f(2) < 0, f(4) > 0.
  auto r = solve_roots(5.0, 6.0);
  REQUIRE(r.kind == RootKind::ThreeDistinct);
  CHECK(r.lambda[0] > 0.0);
  CHECK(r.lambda[0] < 0.2);
  CHECK(r.lambda[1] > 1.0);
  CHECK(r.lambda[1] < 2.0);
  CHECK(r.lambda[2] > 3.0);
  CHECK(r.lambda[2] < 4.0);
  CHECK(std::abs(r.lambda[0] - bisect_oracle(5, 6, 1e-6, 0.2)) < 1e-12);
  CHECK(std::abs(r.lambda[1] - bisect_oracle(5, 6, 1.0, 2.0)) < 1e-12);
  CHECK(std::abs(r.lambda[2] - bisect_oracle(5, 6, 3.0, 4.0)) < 1e-12);
  check_vieta(5, 6, r);
  CHECK(r.a < r.b);
  CHECK(r.b < r.c);
  CHECK(std::abs(r.a + r.b + r.c) < 1e-12);
}

TEST_CASE("Vieta residuals on the acceptance pairs") {
  for (auto [m, n] : {std::pair{5.0, 6.0}, {6.0, 9.0}, {7.0, 11.0}}) {
    auto r = solve_roots(m, n);
    REQUIRE(r.kind == RootKind::ThreeDistinct);
    check_vieta(m, n, r);
    // e^a, e^b, e^c are roots to 1e-12 relative error.
    for (double lambda : {std::exp(r.a), std::exp(r.b), std::exp(r.c)}) {
      double f = lambda * lambda * lambda - m * lambda * lambda + n * lambda -
                 1.0;
      CHECK(std::abs(f) < 1e-12 * std::max(1.0, lambda * lambda * lambda));
    }
  }
}

TEST_CASE("m = n is the product case") {
  CHECK(solve_roots(5.0, 5.0).kind == RootKind::ProductCase);
  CHECK(solve_roots(3.0, 3.0).kind == RootKind::ProductCase);
  CHECK(solve_roots(0.5, 0.5).kind == RootKind::ProductCase);
}

TEST_CASE("double roots are classified, not silently solved") {
  // Roots (2, 2, 1/4): m = 2+2+0.25, n = 4+0.5+0.5.
  CHECK(solve_roots(4.25, 5.0).kind == RootKind::DoubleRoot);
  // Tiny perturbation below the 1e-8 separation threshold.
  CHECK(solve_roots(4.25 + 1e-12, 5.0).kind == RootKind::DoubleRoot);
}

TEST_CASE("complex roots are invalid") {
  // x^3 - 2x^2 + x - 1 has negative discriminant.
  CHECK(solve_roots(2.0, 1.0).kind == RootKind::Invalid);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(solve_roots(-1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(solve_roots(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("spec construction dispatches on the classification") {
  CHECK_NOTHROW(GeometrySpec::sol4mn(5, 6));
  CHECK_THROWS_AS(GeometrySpec::sol4mn(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(GeometrySpec::sol4mn(4.25, 5), std::invalid_argument);
  CHECK_THROWS_AS(GeometrySpec::sol4mn(2, 1), std::invalid_argument);
}
