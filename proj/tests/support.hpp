#pragma once

// Shared oracles and helpers for the test suites. Everything here is
// independent of the library's integration/assembly paths: areas come from
// spherical excess sums, set comparisons from brute-force pairwise distance.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "msoro/geometry.hpp"
#include "msoro/projection.hpp"

namespace testsupport {

using msoro::Vec2;
using msoro::Vec3;

// Signed spherical excess of the triangle (a, b, c) on the unit sphere.
inline double triangle_excess(Vec3 a, Vec3 b, Vec3 c) {
  const double num = a.dot(b.cross(c));
  const double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2.0 * std::atan2(num, den);
}

// Area of a closed spherical polygon (unit-sphere directions, first point
// not repeated) via a triangle fan about `hub`.
inline double spherical_polygon_area(const std::vector<Vec3>& ring, Vec3 hub,
                                     double radius) {
  double excess = 0.0;
  for (size_t i = 0; i < ring.size(); ++i)
    excess += triangle_excess(hub, ring[i], ring[(i + 1) % ring.size()]);
  return excess * radius * radius;
}

// Largest distance from any point of `a` to its nearest point of `b`.
inline double directed_hausdorff(const std::vector<Vec2>& a,
                                 const std::vector<Vec2>& b) {
  double worst = 0.0;
  for (const auto& p : a) {
    double best = 1e300;
    for (const auto& q : b) best = std::min(best, (p - q).norm());
    worst = std::max(worst, best);
  }
  return worst;
}

inline double polygon_area(const std::vector<Vec2>& ring) {
  double twice = 0.0;
  for (size_t i = 0; i < ring.size(); ++i) {
    const auto& u = ring[i];
    const auto& v = ring[(i + 1) % ring.size()];
    twice += u.x * v.y - v.x * u.y;
  }
  return twice / 2.0;
}

inline bool contains_origin(const std::vector<Vec2>& ring) {
  int crossings = 0;
  for (size_t i = 0; i < ring.size(); ++i) {
    const auto& u = ring[i];
    const auto& v = ring[(i + 1) % ring.size()];
    if ((u.y > 0) != (v.y > 0)) {
      const double x_at = u.x + (0.0 - u.y) / (v.y - u.y) * (v.x - u.x);
      if (x_at > 0.0) ++crossings;
    }
  }
  return crossings % 2 == 1;
}

// Strict local maxima of the radius along a closed ring, judged against a
// +-window neighborhood.
inline int count_radius_maxima(const std::vector<Vec2>& ring, int window = 5) {
  const int n = static_cast<int>(ring.size());
  int count = 0;
  for (int i = 0; i < n; ++i) {
    const double r = ring[i].norm();
    bool is_max = true;
    for (int k = -window; k <= window && is_max; ++k) {
      if (k == 0) continue;
      if (ring[(i + k + n) % n].norm() >= r) is_max = false;
    }
    if (is_max) ++count;
  }
  return count;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Numbers of an SVG path's "d" attribute as (x, y) pairs.
inline std::vector<Vec2> parse_svg_path(const std::string& svg) {
  const auto d_pos = svg.find(" d=\"");
  const auto start = d_pos + 4;
  const auto end = svg.find('"', start);
  std::string body = svg.substr(start, end - start);
  for (auto& c : body)
    if (c == 'M' || c == 'L' || c == 'Z' || c == ',') c = ' ';
  std::istringstream ss(body);
  std::vector<Vec2> pts;
  double x, y;
  while (ss >> x >> y) pts.push_back({x, y});
  return pts;
}

struct ObjData {
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> groups;        // vertex indices per group
  std::vector<std::vector<int>> polylines;     // one per "l" record
};

inline ObjData parse_obj(const std::string& text) {
  ObjData data;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      Vec3 v;
      ls >> v.x >> v.y >> v.z;
      data.vertices.push_back(v);
      if (!data.groups.empty())
        data.groups.back().push_back(static_cast<int>(data.vertices.size()) - 1);
    } else if (tag == "g") {
      data.groups.emplace_back();
    } else if (tag == "l") {
      std::vector<int> idx;
      int i;
      while (ls >> i) idx.push_back(i - 1);
      data.polylines.push_back(idx);
    }
  }
  return data;
}

}  // namespace testsupport
