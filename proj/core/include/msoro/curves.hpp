#pragma once

#include <functional>
#include <string>

namespace msoro {

// Boundary curve f(x) drawn along a polyhedron edge, x in [-a/2, a/2].
// The curve must be odd and vanish at both endpoints so adjacent modules
// share the same boundary under a half-turn about the edge center. Any odd
// family can be plugged in through `eval`; the sinusoidal family is the one
// that ships.
struct ModuleTopologyCurve {
  double edge_length = 0.0;  // a, in length units
  double amplitude = 0.0;    // A, dimensionless (sinusoidal family)
  std::string family;
  std::function<double(double)> eval;  // f(x), same units as x

  double operator()(double x) const { return eval(x); }
};

// f(x) = A * (a/2) * sin(2*pi*x / a). Throws std::invalid_argument for
// a <= 0 or A outside [-1, 1].
ModuleTopologyCurve sinusoidal_curve(double edge_length, double amplitude);

struct CurveValidation {
  double max_odd_violation = 0.0;       // max |f(x) + f(-x)|
  double max_endpoint_violation = 0.0;  // max(|f(a/2)|, |f(-a/2)|)
  double tolerance = 0.0;               // 1e-9 * a
  bool passed = false;
};

// Samples the symmetry and endpoint constraints on a uniform grid.
// Degenerate curves produce a failing report, not an exception.
CurveValidation validate_curve(const ModuleTopologyCurve& curve, int samples);

}  // namespace msoro
