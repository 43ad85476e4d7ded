#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "msoro/geometry.hpp"

namespace msoro {

enum class SolidName { tetrahedron, cube, octahedron, dodecahedron, icosahedron };

inline constexpr SolidName kAllSolids[] = {
    SolidName::tetrahedron, SolidName::cube, SolidName::octahedron,
    SolidName::dodecahedron, SolidName::icosahedron};

std::string to_string(SolidName name);
SolidName solid_from_string(std::string_view name);  // throws std::invalid_argument

// Direction on the unit sphere plus the bearing of the local curve x axis,
// measured counterclockwise from local east.
struct SphericalAnchor {
  double phi = 0.0;      // latitude, radians
  double lambda = 0.0;   // longitude, radians
  double bearing = 0.0;  // radians in (-pi, pi]

  Vec3 direction() const { return latlon_to_direction(phi, lambda); }
};

// One of the five platonic solids in a canonical orientation: face 0 is
// centered at (phi, lambda) = (0, 0) and its first edge midpoint sits on the
// equator at longitude +edge_midpoint_angle.
struct PlatonicSolid {
  SolidName name;
  int p = 0;       // edges per face
  int q = 0;       // edges meeting at a vertex
  int face_count = 0;
  int edge_count = 0;
  double dihedral = 0.0;            // radians
  double circumradius_ratio = 0.0;  // R / a
  double edge_midpoint_angle = 0.0; // central angle face center -> edge midpoint

  std::vector<Vec3> vertices;                 // unit sphere
  std::vector<std::vector<int>> faces;        // CCW viewed from outside

  // Vertex positions scaled to a circumscribing sphere of radius R.
  Vec3 vertex_at_radius(int v, double R) const { return vertices[v] * R; }
};

PlatonicSolid solid_params(SolidName name);

SphericalAnchor face_anchor(const PlatonicSolid& solid, int face_index);

// One anchor per edge of the face, in face winding order. The anchor sits on
// the radial direction through the edge midpoint; its bearing points along
// the edge in the direction the face traverses it.
std::vector<SphericalAnchor> edge_anchors_of_face(const PlatonicSolid& solid,
                                                  int face_index);

}  // namespace msoro
