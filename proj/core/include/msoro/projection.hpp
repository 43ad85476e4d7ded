#pragma once

#include "msoro/curves.hpp"
#include "msoro/geometry.hpp"
#include "msoro/solids.hpp"

namespace msoro {

struct SphericalPoint {
  double phi = 0.0;     // latitude, radians, in [-pi/2, pi/2]
  double lambda = 0.0;  // longitude, radians, normalized to (-pi, pi]

  Vec3 direction() const { return latlon_to_direction(phi, lambda); }
};

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;

  Vec2 vec() const { return {x, y}; }
};

// Plane -> sphere. Lifts the curve point (x, f(x)) onto the sphere of radius
// R along the anchor's radial direction. The local (x, f) axes are rotated by
// anchor.bearing about that direction so the curve x axis runs along the
// polyhedron edge instead of local east.
//
// Throws std::domain_error when sqrt(x^2 + fx^2) exceeds R beyond a 1e-12
// relative guard (the point would leave the projectable hemisphere).
SphericalPoint inverse_orthographic(double x, double fx,
                                    const SphericalAnchor& anchor, double R);

// Closed-form latitude/longitude evaluation at bearing zero, kept as the
// cross-check for the frame-based pipeline above.
SphericalPoint inverse_orthographic_zero_bearing(double x, double fx,
                                                 double phi0, double lambda0,
                                                 double R);

// Sphere -> tangent plane at `center`, preserving distance and direction
// from the center. Output axes are local east (x) and local north (y).
// Throws std::domain_error for points antipodal to the center.
PlanarPoint azimuthal_equidistant(const SphericalPoint& pt,
                                  const SphericalAnchor& center, double R);

// The composite map: curve point -> sphere (about the edge anchor) ->
// tangent plane (about the face anchor).
PlanarPoint compose_h(double x, const ModuleTopologyCurve& curve,
                      const SphericalAnchor& edge, const SphericalAnchor& face,
                      double R);

}  // namespace msoro
