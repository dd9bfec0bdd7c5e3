#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "thurston4/types.hpp"

namespace thurston4 {

/// Seeded generator with implementation-independent uniform draws, so that
/// reports are byte-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    // 53-bit mantissa draw in [0,1).
    double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  /// Random admissible chart point: coordinates in [lo,hi], except the
  /// Sol41 t coordinate which is drawn as exp(uniform(lo,hi)) to stay in
  /// the chart.
  Point point(const GeometrySpec& spec, double lo = -2.0, double hi = 2.0) {
    Point p{uniform(lo, hi), uniform(lo, hi), uniform(lo, hi),
            uniform(lo, hi)};
    if (spec.kind == GeometryKind::Sol41) p.t = std::exp(p.t);
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace thurston4
