#pragma once

#include <string>
#include <vector>

#include "conicrect/conic.hpp"

namespace conicrect {

struct LabeledPoint {
  std::string label;
  Point at;
};

/// Points of the Landen construction for (m, n, t), all curves centred at the
/// origin S.  The t axis of the tangent-length diagram points down, so H, K
/// and Z sit below the x axis.
struct Construction {
  double m, n, t;
  double a, b, p;  // hyperbola semiaxes and pedal distance sqrt(a^2 - t^2)
  std::vector<LabeledPoint> points;

  const Point& at(const std::string& label) const;
};

/// 0 <= t < (m - n)(1 - 1e-8); the guard band below the maximum is rejected
/// because F runs off to infinity there.
Construction build_construction(double m, double n, double t);

/// Largest violation among the defining equations of the points.
double construction_residual(const Construction& c);

/// SVG 1.1 document.  Throws ConvergenceError if any point misses its
/// defining equation by more than 1e-9.
std::string render_svg(const Construction& c);

}  // namespace conicrect
