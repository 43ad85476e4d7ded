#pragma once

#include <vector>

#include "msoro/curves.hpp"
#include "msoro/projection.hpp"
#include "msoro/solids.hpp"

namespace msoro {

// Boundary curves of every module on the circumscribing sphere. Each face
// boundary is a closed polyline (first point repeated at the end) of
// p * samples_per_edge + 1 latitude/longitude samples.
struct SphericalTiling {
  SolidName solid;
  double R = 0.0;
  int samples_per_edge = 0;
  std::vector<std::vector<SphericalPoint>> face_boundaries;
};

// Planar topology of one module: the closed p-limb outline around face 0,
// sampled counterclockwise in the tangent-plane frame (x = local east,
// y = local north at the face center).
//
// `limb` holds the first edge's curve re-expressed in the limb frame whose
// y axis points outward along the limb (toward the edge midpoint image) and
// whose x axis spans the edge; it is the graph the distortion metrics
// integrate over. `b` is the planar span of the projected straight edge in
// that frame: b/2 = x_p(a/2).
struct PlanarOutline {
  SolidName solid;
  int p = 0;
  int face_count = 0;
  double a = 0.0;
  double R = 0.0;
  double amplitude = 0.0;
  double b = 0.0;
  double limb_axis_radius = 0.0;  // planar distance of the edge midpoint image
  std::vector<PlanarPoint> points;  // p * N, closed as a ring
  std::vector<PlanarPoint> limb;    // N + 1, x from -b/2 to +b/2
};

// Projects the module boundary about every edge of every face. The per-face
// edge frames come from the face winding, which makes boundaries of adjacent
// faces coincide along shared edges with no gaps or overlaps.
//
// Requires a validated curve whose edge length matches R through the solid's
// circumradius ratio, and samples_per_edge >= 16.
SphericalTiling spherical_tiling(const PlatonicSolid& solid,
                                 const ModuleTopologyCurve& curve, double R,
                                 int samples_per_edge);

PlanarOutline planar_outline(const PlatonicSolid& solid,
                             const ModuleTopologyCurve& curve, double R,
                             int samples_per_edge);

}  // namespace msoro
