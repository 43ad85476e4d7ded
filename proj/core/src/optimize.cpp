#include "msoro/optimize.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace msoro {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Evaluation {
  bool feasible = false;
  double j = kInf;
  double eps_inter = 0.0;
  double d_loco = 0.0;
};

}  // namespace

OptimizationResult optimize_amplitude(const PlatonicSolid& solid, double alpha,
                                      double resolution, double c_slack,
                                      int samples_per_edge) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in [0, 1]");
  if (!(resolution > 0.0 && resolution <= 0.1))
    throw std::invalid_argument("resolution must lie in (0, 0.1]");

  const double a = 1.0;  // unit edge; J is scale-invariant
  if (c_slack <= 0.0) c_slack = default_c_slack(a);
  const double R = a * solid.circumradius_ratio;

  // Normalization grid for D_loco, fixed at 0.01 regardless of the scan
  // resolution.
  const auto scan = scan_amplitudes(solid, a, c_slack, 0.01, samples_per_edge);
  if (!scan.any_feasible)
    throw std::domain_error("no feasible amplitude for " + to_string(solid.name) +
                            " with c_slack = " + std::to_string(c_slack));

  auto evaluate = [&](double A) {
    Evaluation out;
    const auto outline =
        planar_outline(solid, sinusoidal_curve(a, A), R, samples_per_edge);
    const auto d = locomotion_difficulty(outline, c_slack, scan);
    if (!d) return out;
    out.feasible = true;
    out.d_loco = *d;
    out.eps_inter = intermodular(outline).eps_inter;
    out.j = alpha * out.eps_inter + (1.0 - alpha) * out.d_loco;
    return out;
  };

  OptimizationResult result;
  result.solid = solid.name;
  result.alpha = alpha;
  result.resolution = resolution;
  result.c_slack = c_slack;
  result.feasible_lo = kInf;
  result.feasible_hi = -kInf;

  const int steps = static_cast<int>(std::round(1.0 / resolution));
  double best_amplitude = 0.0;
  double best_j = kInf;
  for (int i = 0; i <= steps; ++i) {
    const double A = std::min(i * resolution, 1.0);
    const Evaluation e = evaluate(A);
    if (!e.feasible) continue;
    result.feasible_lo = std::min(result.feasible_lo, A);
    result.feasible_hi = std::max(result.feasible_hi, A);
    result.trace.push_back({A, e.j, e.eps_inter, e.d_loco});
    if (e.j < best_j) {
      best_j = e.j;
      best_amplitude = A;
    }
  }
  if (result.trace.empty())
    throw std::domain_error("no feasible amplitude for " + to_string(solid.name) +
                            " with c_slack = " + std::to_string(c_slack));

  // Golden-section refinement in the bracket around the best grid point.
  double lo = std::max(best_amplitude - resolution, result.feasible_lo);
  double hi = std::min(best_amplitude + resolution, result.feasible_hi);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = evaluate(x1).j;
  double f2 = evaluate(x2).j;
  while (hi - lo > 1e-6) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = evaluate(x1).j;
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = evaluate(x2).j;
    }
  }
  const double refined = f1 < f2 ? x1 : x2;
  const double refined_j = std::min(f1, f2);
  if (refined_j < best_j) {
    best_amplitude = refined;
    best_j = refined_j;
  }

  result.a_star = best_amplitude;
  result.j_star = best_j;
  return result;
}

}  // namespace msoro
