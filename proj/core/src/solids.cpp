#include "msoro/solids.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace msoro {
namespace {

std::vector<Vec3> raw_vertices(SolidName name) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> v;
  switch (name) {
    case SolidName::tetrahedron:
      v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
      break;
    case SolidName::cube:
      for (int sx : {-1, 1})
        for (int sy : {-1, 1})
          for (int sz : {-1, 1}) v.push_back({double(sx), double(sy), double(sz)});
      break;
    case SolidName::octahedron:
      v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
      break;
    case SolidName::dodecahedron:
      for (int sx : {-1, 1})
        for (int sy : {-1, 1})
          for (int sz : {-1, 1}) v.push_back({double(sx), double(sy), double(sz)});
      for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
          v.push_back({0, s1 / phi, s2 * phi});
          v.push_back({s1 / phi, s2 * phi, 0});
          v.push_back({s1 * phi, 0, s2 / phi});
        }
      break;
    case SolidName::icosahedron:
      for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
          v.push_back({0, s1 * 1.0, s2 * phi});
          v.push_back({s1 * 1.0, s2 * phi, 0});
          v.push_back({s1 * phi, 0, s2 * 1.0});
        }
      break;
  }
  for (auto& p : v) p = p.normalized();
  return v;
}

std::vector<int> rotate_min_first(const std::vector<int>& cycle) {
  auto mn = std::min_element(cycle.begin(), cycle.end());
  std::vector<int> out(mn, cycle.end());
  out.insert(out.end(), cycle.begin(), mn);
  return out;
}

bool is_ccw_from_outside(const std::vector<Vec3>& verts,
                         const std::vector<int>& face) {
  Vec3 center{0, 0, 0};
  for (int v : face) center = center + verts[v];
  const Vec3 e0 = verts[face[1]] - verts[face[0]];
  const Vec3 e1 = verts[face[2]] - verts[face[1]];
  return e0.cross(e1).dot(center) > 0.0;
}

// Faces of a convex polyhedron from its vertices: connect vertices at the
// minimal pairwise distance, then trace each directed edge, always taking
// the most-counterclockwise turn around the radial direction at the vertex.
std::vector<std::vector<int>> trace_faces(const std::vector<Vec3>& verts) {
  const int n = static_cast<int>(verts.size());
  double min_d = 1e300;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      min_d = std::min(min_d, (verts[i] - verts[j]).norm());

  std::vector<std::vector<int>> nbrs(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i && (verts[i] - verts[j]).norm() < min_d * (1.0 + 1e-9))
        nbrs[i].push_back(j);

  auto next_ccw = [&](int u, int v) {
    const Vec3 normal = verts[v].normalized();
    const Vec3 din = (verts[v] - verts[u]).normalized();
    int best = -1;
    double best_turn = -10.0;
    for (int w : nbrs[v]) {
      if (w == u) continue;
      const Vec3 dout = (verts[w] - verts[v]).normalized();
      const double turn = std::atan2(normal.dot(din.cross(dout)), din.dot(dout));
      if (turn > best_turn) {
        best_turn = turn;
        best = w;
      }
    }
    return best;
  };

  std::map<std::vector<int>, std::vector<int>> unique;
  for (int u = 0; u < n; ++u) {
    for (int v0 : nbrs[u]) {
      std::vector<int> cycle;
      int a = u, b = v0;
      do {
        cycle.push_back(a);
        const int w = next_ccw(a, b);
        a = b;
        b = w;
        if (cycle.size() > 16) throw std::logic_error("face trace did not close");
      } while (!(a == u && b == v0));
      unique.emplace(rotate_min_first(cycle), rotate_min_first(cycle));
    }
  }

  std::vector<std::vector<int>> faces;
  faces.reserve(unique.size());
  for (auto& [key, cycle] : unique) faces.push_back(cycle);

  // The trace yields one consistent winding; normalize to CCW from outside.
  int ccw = 0;
  for (const auto& f : faces) ccw += is_ccw_from_outside(verts, f) ? 1 : 0;
  if (ccw == 0) {
    for (auto& f : faces) {
      std::reverse(f.begin(), f.end());
      f = rotate_min_first(f);
    }
  } else if (ccw != static_cast<int>(faces.size())) {
    throw std::logic_error("inconsistent face winding");
  }
  return faces;
}

// Rotates the embedding so face 0's center lands on +x and the midpoint of
// its first edge lands on the equator at positive longitude.
void canonicalize(std::vector<Vec3>& verts, const std::vector<int>& face0) {
  Vec3 center{0, 0, 0};
  for (int v : face0) center = center + verts[v];
  const Vec3 f = center.normalized();
  const Vec3 mid = (verts[face0[0]] + verts[face0[1]]).normalized();
  const Vec3 m_perp = (mid - f * mid.dot(f)).normalized();
  const Vec3 k = f.cross(m_perp);
  for (auto& v : verts) {
    v = Vec3{f.dot(v), m_perp.dot(v), k.dot(v)};
  }
}

struct SchlafliEntry {
  int p, q, faces;
};

SchlafliEntry schlafli(SolidName name) {
  switch (name) {
    case SolidName::tetrahedron: return {3, 3, 4};
    case SolidName::cube: return {4, 3, 6};
    case SolidName::octahedron: return {3, 4, 8};
    case SolidName::dodecahedron: return {5, 3, 12};
    case SolidName::icosahedron: return {3, 5, 20};
  }
  throw std::invalid_argument("unknown solid");
}

}  // namespace

std::string to_string(SolidName name) {
  switch (name) {
    case SolidName::tetrahedron: return "tetrahedron";
    case SolidName::cube: return "cube";
    case SolidName::octahedron: return "octahedron";
    case SolidName::dodecahedron: return "dodecahedron";
    case SolidName::icosahedron: return "icosahedron";
  }
  return "?";
}

SolidName solid_from_string(std::string_view name) {
  for (SolidName s : kAllSolids)
    if (to_string(s) == name) return s;
  throw std::invalid_argument("unknown solid '" + std::string(name) +
                              "' (expected tetrahedron, cube, octahedron, "
                              "dodecahedron or icosahedron)");
}

PlatonicSolid solid_params(SolidName name) {
  const auto [p, q, face_count] = schlafli(name);

  PlatonicSolid solid;
  solid.name = name;
  solid.p = p;
  solid.q = q;
  solid.face_count = face_count;
  solid.edge_count = face_count * p / 2;
  solid.dihedral = 2.0 * std::asin(std::cos(kPi / q) / std::sin(kPi / p));
  solid.circumradius_ratio =
      std::sin(kPi / q) / (2.0 * std::sin(kPi / p) * std::cos(solid.dihedral / 2.0));

  solid.vertices = raw_vertices(name);
  solid.faces = trace_faces(solid.vertices);
  if (static_cast<int>(solid.faces.size()) != face_count)
    throw std::logic_error("face trace produced wrong face count for " +
                           to_string(name));
  std::sort(solid.faces.begin(), solid.faces.end());
  canonicalize(solid.vertices, solid.faces[0]);

  Vec3 center{0, 0, 0};
  for (int v : solid.faces[0]) center = center + solid.vertices[v];
  const Vec3 mid =
      solid.vertices[solid.faces[0][0]] + solid.vertices[solid.faces[0][1]];
  solid.edge_midpoint_angle = central_angle(center, mid);
  return solid;
}

SphericalAnchor face_anchor(const PlatonicSolid& solid, int face_index) {
  if (face_index < 0 || face_index >= solid.face_count)
    throw std::out_of_range("face index " + std::to_string(face_index) +
                            " out of range for " + to_string(solid.name));
  const auto& face = solid.faces[face_index];
  Vec3 center{0, 0, 0};
  for (int v : face) center = center + solid.vertices[v];

  SphericalAnchor anchor;
  direction_to_latlon(center, anchor.phi, anchor.lambda);

  // Bearing points toward the first edge midpoint of the face.
  const Vec3 up = center.normalized();
  const Vec3 mid = (solid.vertices[face[0]] + solid.vertices[face[1]]).normalized();
  const Vec3 toward = (mid - up * mid.dot(up)).normalized();
  const Vec3 east = local_east(anchor.phi, anchor.lambda);
  const Vec3 north = local_north(anchor.phi, anchor.lambda);
  anchor.bearing = std::atan2(toward.dot(north), toward.dot(east));
  return anchor;
}

std::vector<SphericalAnchor> edge_anchors_of_face(const PlatonicSolid& solid,
                                                  int face_index) {
  if (face_index < 0 || face_index >= solid.face_count)
    throw std::out_of_range("face index " + std::to_string(face_index) +
                            " out of range for " + to_string(solid.name));
  const auto& face = solid.faces[face_index];
  const int p = static_cast<int>(face.size());

  std::vector<SphericalAnchor> anchors(p);
  for (int e = 0; e < p; ++e) {
    const Vec3 a = solid.vertices[face[e]];
    const Vec3 b = solid.vertices[face[(e + 1) % p]];
    SphericalAnchor& anchor = anchors[e];
    direction_to_latlon(a + b, anchor.phi, anchor.lambda);
    // A polyhedron edge is perpendicular to the radial direction through its
    // midpoint, so the edge direction is already tangent at the anchor.
    const Vec3 along = (b - a).normalized();
    const Vec3 east = local_east(anchor.phi, anchor.lambda);
    const Vec3 north = local_north(anchor.phi, anchor.lambda);
    anchor.bearing = std::atan2(along.dot(north), along.dot(east));
  }
  return anchors;
}

}  // namespace msoro
