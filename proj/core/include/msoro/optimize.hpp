#pragma once

#include <vector>

#include "msoro/metrics.hpp"

namespace msoro {

struct TracePoint {
  double amplitude = 0.0;
  double j = 0.0;
  double eps_inter = 0.0;
  double d_loco = 0.0;
};

struct OptimizationResult {
  SolidName solid;
  double alpha = 0.0;
  double resolution = 0.0;
  double c_slack = 0.0;  // as a fraction of the edge length
  double a_star = 0.0;
  double j_star = 0.0;
  double feasible_lo = 0.0;
  double feasible_hi = 0.0;
  std::vector<TracePoint> trace;  // feasible grid points, ascending amplitude
};

// Minimizes J(A) = alpha * eps_inter + (1 - alpha) * D_loco over the feasible
// amplitude range: a coarse grid scan at `resolution`, then golden-section
// refinement inside the best bracket. Deterministic for identical inputs.
//
// Metrics are evaluated at unit edge length; every term of J is
// scale-invariant, so the result applies at any fabrication scale.
// c_slack <= 0 selects the calibrated default ratio. Throws
// std::domain_error when no amplitude is feasible.
OptimizationResult optimize_amplitude(const PlatonicSolid& solid, double alpha,
                                      double resolution = 0.005,
                                      double c_slack = -1.0,
                                      int samples_per_edge = 512);

}  // namespace msoro
