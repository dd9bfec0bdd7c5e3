#include "thurston4/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace thurston4 {

namespace {

double cubic(double m, double n, double x) {
  return ((x - m) * x + n) * x - 1.0;
}

double cubic_deriv(double m, double n, double x) {
  return (3.0 * x - 2.0 * m) * x + n;
}

double bisect(double m, double n, double lo, double hi) {
  double flo = cubic(m, n, lo);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    double fm = cubic(m, n, mid);
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-14 * std::max(1.0, std::abs(mid))) break;
  }
  double x = 0.5 * (lo + hi);
  double d = cubic_deriv(m, n, x);
  if (d != 0.0) x -= cubic(m, n, x) / d;  // one Newton polish
  return x;
}

// Discriminant of x^3 - m x^2 + n x - 1.
double discriminant(double m, double n) {
  return 18.0 * m * n + m * m * n * n - 4.0 * m * m * m - 4.0 * n * n * n -
         27.0;
}

}  // namespace

RootClassification solve_roots(double m, double n) {
  if (!(m > 0.0) || !(n > 0.0))
    throw std::invalid_argument("solve_roots: m and n must be positive");

  RootClassification out;
  if (std::abs(m - n) < 1e-12) {
    out.kind = RootKind::ProductCase;  // f(1) = n - m = 0
    return out;
  }
  if (discriminant(m, n) < 0.0) {
    out.kind = RootKind::Invalid;  // one real root, complex pair
    return out;
  }

  // All real roots are positive (f < 0 on (-inf, 0]); bracket by sign
  // changes on a log-spaced grid. Largest root < 1 + m + n.
  const double lo = 1e-8, hi = 1.0 + m + n;
  const int grid = 4000;
  std::vector<double> roots;
  double prev_x = lo, prev_f = cubic(m, n, lo);
  for (int i = 1; i <= grid; ++i) {
    double x = lo * std::pow(hi / lo, static_cast<double>(i) / grid);
    double f = cubic(m, n, x);
    if ((prev_f < 0.0) != (f < 0.0)) roots.push_back(bisect(m, n, prev_x, x));
    prev_x = x;
    prev_f = f;
  }

  if (roots.size() < 3) {
    // Non-negative discriminant with fewer than three brackets: a
    // (near-)double root the grid cannot separate.
    out.kind = RootKind::DoubleRoot;
    return out;
  }

  std::sort(roots.begin(), roots.end());
  if (roots[1] - roots[0] < 1e-8 || roots[2] - roots[1] < 1e-8) {
    out.kind = RootKind::DoubleRoot;
    return out;
  }
  out.kind = RootKind::ThreeDistinct;
  out.lambda = {roots[0], roots[1], roots[2]};
  out.a = std::log(roots[0]);
  out.b = std::log(roots[1]);
  out.c = std::log(roots[2]);
  return out;
}

}  // namespace thurston4
