#include "msoro/topology.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace msoro {
namespace {

void check_inputs(const PlatonicSolid& solid, const ModuleTopologyCurve& curve,
                  double R, int samples_per_edge) {
  if (samples_per_edge < 16)
    throw std::invalid_argument("need at least 16 samples per edge");
  const double expected = curve.edge_length * solid.circumradius_ratio;
  if (std::abs(R - expected) > 1e-9 * expected)
    throw std::invalid_argument(
        "sphere radius " + std::to_string(R) + " is inconsistent with edge length " +
        std::to_string(curve.edge_length) + " for " + to_string(solid.name) +
        " (expected R = " + std::to_string(expected) + ")");
  const auto validation = validate_curve(curve, 257);
  if (!validation.passed)
    throw std::invalid_argument(
        "module-topology curve violates the odd-symmetry/endpoint constraints");
}

}  // namespace

SphericalTiling spherical_tiling(const PlatonicSolid& solid,
                                 const ModuleTopologyCurve& curve, double R,
                                 int samples_per_edge) {
  check_inputs(solid, curve, R, samples_per_edge);
  const double a = curve.edge_length;
  const int N = samples_per_edge;

  SphericalTiling tiling;
  tiling.solid = solid.name;
  tiling.R = R;
  tiling.samples_per_edge = N;
  tiling.face_boundaries.reserve(solid.face_count);

  for (int face = 0; face < solid.face_count; ++face) {
    const auto anchors = edge_anchors_of_face(solid, face);
    std::vector<SphericalPoint> boundary;
    boundary.reserve(solid.p * N + 1);
    for (const auto& anchor : anchors) {
      for (int j = 0; j < N; ++j) {
        const double x = -a / 2.0 + a * j / N;
        boundary.push_back(inverse_orthographic(x, curve(x), anchor, R));
      }
    }
    boundary.push_back(boundary.front());
    tiling.face_boundaries.push_back(std::move(boundary));
  }
  return tiling;
}

PlanarOutline planar_outline(const PlatonicSolid& solid,
                             const ModuleTopologyCurve& curve, double R,
                             int samples_per_edge) {
  check_inputs(solid, curve, R, samples_per_edge);
  const double a = curve.edge_length;
  const int N = samples_per_edge;

  PlanarOutline outline;
  outline.solid = solid.name;
  outline.p = solid.p;
  outline.face_count = solid.face_count;
  outline.a = a;
  outline.R = R;
  outline.amplitude = curve.amplitude;

  const SphericalAnchor face0 = face_anchor(solid, 0);
  const auto anchors = edge_anchors_of_face(solid, 0);

  outline.points.reserve(solid.p * N);
  for (const auto& anchor : anchors) {
    for (int j = 0; j < N; ++j) {
      const double x = -a / 2.0 + a * j / N;
      outline.points.push_back(compose_h(x, curve, anchor, face0, R));
    }
  }

  // Limb frame of edge 0: y along the edge-midpoint image (outward), x along
  // the projected straight edge. Built from the f = 0 images so the frame
  // does not depend on the amplitude.
  const auto straight = [&](double x) {
    return azimuthal_equidistant(inverse_orthographic(x, 0.0, anchors[0], R),
                                 face0, R);
  };
  const Vec2 mid = straight(0.0).vec();
  const Vec2 vplus = straight(a / 2.0).vec();
  const Vec2 vminus = straight(-a / 2.0).vec();
  outline.limb_axis_radius = mid.norm();
  const Vec2 y_axis = mid * (1.0 / mid.norm());
  Vec2 x_axis = vplus - vminus;
  x_axis = x_axis * (1.0 / x_axis.norm());
  outline.b = 2.0 * vplus.dot(x_axis);

  outline.limb.reserve(N + 1);
  for (int j = 0; j <= N; ++j) {
    const double x = -a / 2.0 + a * j / N;
    const Vec2 pt = compose_h(x, curve, anchors[0], face0, R).vec();
    outline.limb.push_back({pt.dot(x_axis), pt.dot(y_axis)});
  }
  return outline;
}

}  // namespace msoro
