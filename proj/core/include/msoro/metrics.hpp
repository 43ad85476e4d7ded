#pragma once

#include <optional>
#include <vector>

#include "msoro/topology.hpp"

namespace msoro {

// How planar-topology feasibility is decided. The geometric rule combines an
// outline self-intersection test with the clearance between the limb curve
// and its own rotation by 2*pi/p about the module center. The printed rule
// evaluates the residual |y_p - sin(2pi/p) x_p - cos(2pi/p) y_p| instead and
// exists for comparison.
enum class FeasibilityRule { geometric_clearance, printed_inequality };

// Integrand of the intermodular overlap: squared difference (default) or
// absolute difference.
enum class OverlapIntegrand { squared, absolute };

// Default clearance requirement, as a fraction of the edge length. Calibrated
// once so the icosahedron's feasibility threshold sits at amplitude 0.79;
// override per run with an explicit c_slack.
inline constexpr double kDefaultSlackRatio = 0.2390;

inline double default_c_slack(double edge_length) {
  return kDefaultSlackRatio * edge_length;
}

// eps_inter = G_E / A_E evaluated with lengths in units of a / 110, i.e. in
// millimeters at the reference fabrication scale (edge length 110 mm). G_E/A_E
// carries one power of length, so a reference scale is what makes the metric
// dimensionless and scale-invariant while keeping its published balance
// against D_loco in the weighted objective.
inline constexpr double kReferenceEdgeMm = 110.0;

struct LocomotionResult {
  double a_loco = 0.0;     // max squared planar radius, length^2
  double clearance = 0.0;  // min distance curve <-> its 2pi/p rotation
  bool simple = true;      // outline free of self-intersections
  bool feasible = false;
};

LocomotionResult locomotion_ability(
    const PlanarOutline& outline, double c_slack,
    FeasibilityRule rule = FeasibilityRule::geometric_clearance);

// Feasibility and limb reach swept over an amplitude grid; provides the
// normalization denominator for the locomotion difficulty.
struct AmplitudeScanPoint {
  double amplitude = 0.0;
  bool feasible = false;
  double a_loco = 0.0;
  double clearance = 0.0;
};

struct AmplitudeScan {
  std::vector<AmplitudeScanPoint> points;
  double max_inv_a_loco = 0.0;    // over feasible amplitudes
  double largest_feasible = -1.0; // -1 when nothing is feasible
  bool any_feasible = false;
};

AmplitudeScan scan_amplitudes(
    const PlatonicSolid& solid, double edge_length, double c_slack,
    double resolution, int samples_per_edge,
    FeasibilityRule rule = FeasibilityRule::geometric_clearance);

// D_loco(A) = (1/A_loco(A)) normalized by the max of 1/A_loco over feasible
// amplitudes. Empty optional when A itself is infeasible.
std::optional<double> locomotion_difficulty(const PlanarOutline& outline,
                                            double c_slack,
                                            const AmplitudeScan& scan);

// Convenience form that builds its own normalization grid.
std::optional<double> locomotion_difficulty(
    const PlatonicSolid& solid, double edge_length, double amplitude,
    double c_slack, double grid_resolution = 0.01, int samples_per_edge = 512,
    FeasibilityRule rule = FeasibilityRule::geometric_clearance);

struct IntramodularResult {
  double area_planar = 0.0;     // A_E, length^2
  double area_spherical = 0.0;  // A_S = 4 pi R^2 / F, length^2
  double eps_intra = 0.0;       // (A_E - A_S) / A_E
};

// A_E is p times the limb sector area: the area between the projected curve
// and the sector lines |cot(pi/p) x_p|, integrated by trapezoid over the
// limb's native sampling. Throws std::domain_error when the sector area is
// not positive.
IntramodularResult intramodular_distortion(const PlanarOutline& outline);

struct IntermodularResult {
  double g_e = 0.0;  // minimized overlap integral, length^3 (squared form)
  double t1 = 0.0;   // minimizing displacement, length
  double t2 = 0.0;
  double eps_inter = 0.0;  // G_E/A_E at the reference scale, dimensionless
};

// Least-squares mismatch between the limb curve and the 180deg-rotated curve
// of the adjacent module displaced by t, minimized over t in a box around
// the nominal adjacency displacement (0, 2 R c_e). Grid-seeded Nelder-Mead.
IntermodularResult intermodular(
    const PlanarOutline& outline,
    OverlapIntegrand integrand = OverlapIntegrand::squared);

struct DistortionReport {
  SolidName solid;
  double a = 0.0;
  double R = 0.0;
  double amplitude = 0.0;
  double alpha = 0.0;
  double c_slack = 0.0;
  double a_loco = 0.0;
  double clearance = 0.0;
  bool feasible = false;
  std::optional<double> d_loco;  // absent when infeasible
  double area_planar = 0.0;
  double area_spherical = 0.0;
  double eps_intra = 0.0;
  double g_e = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  double eps_inter = 0.0;
  std::optional<double> j;  // alpha*eps_inter + (1-alpha)*d_loco
};

// Runs every metric for one (solid, amplitude) design point. c_slack <= 0
// selects the calibrated default.
DistortionReport distortion_report(
    const PlatonicSolid& solid, double edge_length, double amplitude,
    double alpha = 0.56, double c_slack = -1.0, int samples_per_edge = 512,
    FeasibilityRule rule = FeasibilityRule::geometric_clearance,
    OverlapIntegrand integrand = OverlapIntegrand::squared);

namespace detail {

// Overlap integral for a fixed displacement; exposed for the brute-force
// comparisons in the tests.
double overlap_integral(const PlanarOutline& outline, double t1, double t2,
                        OverlapIntegrand integrand);

bool outline_is_simple(const std::vector<PlanarPoint>& ring);

}  // namespace detail

}  // namespace msoro
