#include "msoro/curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "msoro/geometry.hpp"

namespace msoro {

ModuleTopologyCurve sinusoidal_curve(double edge_length, double amplitude) {
  if (!(edge_length > 0.0))
    throw std::invalid_argument("edge length must be positive");
  if (!(amplitude >= -1.0 && amplitude <= 1.0))
    throw std::invalid_argument("amplitude must lie in [-1, 1]");

  ModuleTopologyCurve curve;
  curve.edge_length = edge_length;
  curve.amplitude = amplitude;
  curve.family = "sinusoidal";
  curve.eval = [a = edge_length, A = amplitude](double x) {
    return A * (a / 2.0) * std::sin(2.0 * kPi * x / a);
  };
  return curve;
}

CurveValidation validate_curve(const ModuleTopologyCurve& curve, int samples) {
  if (samples < 3) throw std::invalid_argument("need at least 3 samples");

  const double a = curve.edge_length;
  CurveValidation report;
  report.tolerance = 1e-9 * a;
  for (int i = 0; i < samples; ++i) {
    const double x = -a / 2.0 + a * i / (samples - 1);
    report.max_odd_violation =
        std::max(report.max_odd_violation, std::abs(curve(x) + curve(-x)));
  }
  report.max_endpoint_violation =
      std::max(std::abs(curve(a / 2.0)), std::abs(curve(-a / 2.0)));
  report.passed = report.max_odd_violation <= report.tolerance &&
                  report.max_endpoint_violation <= report.tolerance;
  return report;
}

}  // namespace msoro
