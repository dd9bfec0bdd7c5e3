#pragma once

#include <array>

namespace thurston4 {

enum class RootKind {
  ThreeDistinct,  // three distinct real positive roots: generic Sol4mn
  DoubleRoot,     // two roots coincide: identify with Sol40
  ProductCase,    // m = n: one root equals 1, Sol4mn = Sol3 x R
  Invalid,        // complex (or non-positive) roots: no geometry
};

struct RootClassification {
  RootKind kind = RootKind::Invalid;
  // Valid when kind == ThreeDistinct: roots lambda1 < lambda2 < lambda3
  // and their logs a < b < c with a + b + c = 0.
  std::array<double, 3> lambda{};
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Classifies and solves x^3 - m x^2 + n x - 1 for m, n > 0. Roots are
/// bracketed by sign changes on a log-spaced grid, refined by bisection
/// and one Newton polish step. Roots closer than 1e-8 are declared
/// DoubleRoot; m = n is ProductCase regardless of the root layout.
RootClassification solve_roots(double m, double n);

}  // namespace thurston4
