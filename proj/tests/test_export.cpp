#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "msoro/export.hpp"
#include "support.hpp"

using namespace msoro;
using namespace testsupport;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("msoro_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

PlanarOutline make_outline(SolidName name, double a, double A, int N = 128) {
  const auto solid = solid_params(name);
  return planar_outline(solid, sinusoidal_curve(a, A),
                        a * solid.circumradius_ratio, N);
}

}  // namespace

TEST_CASE("planar svg: parse-back matches the source to the precision") {
  TempDir tmp;
  const auto outline = make_outline(SolidName::cube, 110.0, 0.86);
  const auto path = tmp.path / "cube.svg";
  export_planar_svg(outline, path, 6);

  const auto svg = slurp(path.string());
  CHECK(svg.find("solid=cube") != std::string::npos);
  CHECK(svg.find("edge_length_mm=110.000000") != std::string::npos);
  const auto raw = parse_svg_path(svg);
  REQUIRE(raw.size() == outline.points.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    CHECK(std::abs(raw[i].x - outline.points[i].x) < 1e-6 + 1e-12);
    CHECK(std::abs(-raw[i].y - outline.points[i].y) < 1e-6 + 1e-12);
  }
}

TEST_CASE("planar svg: bounding-box diagonal survives the round trip") {
  TempDir tmp;
  const auto outline = make_outline(SolidName::cube, 110.0, 0.86);
  const auto path = tmp.path / "cube.svg";
  export_planar_svg(outline, path, 6);

  auto diagonal = [](auto get_x, auto get_y, const auto& pts) {
    double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
    for (const auto& pt : pts) {
      min_x = std::min(min_x, get_x(pt));
      max_x = std::max(max_x, get_x(pt));
      min_y = std::min(min_y, get_y(pt));
      max_y = std::max(max_y, get_y(pt));
    }
    return std::hypot(max_x - min_x, max_y - min_y);
  };
  const auto raw = parse_svg_path(slurp(path.string()));
  const double emitted = diagonal([](Vec2 p) { return p.x; },
                                  [](Vec2 p) { return p.y; }, raw);
  const double source = diagonal([](const PlanarPoint& p) { return p.x; },
                                 [](const PlanarPoint& p) { return p.y; },
                                 outline.points);
  CHECK(std::abs(emitted - source) < 1e-3);
}

TEST_CASE("planar svg: repeated export is byte-identical") {
  TempDir tmp;
  const auto outline = make_outline(SolidName::dodecahedron, 42.0, 0.3);
  const auto p1 = tmp.path / "a.svg", p2 = tmp.path / "b.svg";
  export_planar_svg(outline, p1, 6);
  export_planar_svg(outline, p2, 6);
  CHECK(slurp(p1.string()) == slurp(p2.string()));
}

TEST_CASE("planar svg: degenerate amplitude stays p-fold symmetric") {
  TempDir tmp;
  const auto outline = make_outline(SolidName::cube, 10.0, 0.0);
  const auto path = tmp.path / "square.svg";
  export_planar_svg(outline, path, 6);
  auto pts = parse_svg_path(slurp(path.string()));
  for (auto& pt : pts) pt.y = -pt.y;
  std::vector<Vec2> rotated;
  for (const auto& pt : pts) rotated.push_back(rotate(pt, 2 * kPi / 4));
  CHECK(directed_hausdorff(rotated, pts) < 1e-5);
}

TEST_CASE("sphere obj: vertices on the sphere, one group per module") {
  TempDir tmp;
  const auto solid = solid_params(SolidName::tetrahedron);
  const double a = 80.0, R = a * solid.circumradius_ratio;
  const auto tiling = spherical_tiling(solid, sinusoidal_curve(a, 0.5), R, 64);
  const auto path = tmp.path / "tetra.obj";
  export_sphere_obj(tiling, path, 6);

  const auto data = parse_obj(slurp(path.string()));
  CHECK(data.groups.size() == 4);
  CHECK(data.polylines.size() == 4);
  for (const auto& v : data.vertices)
    CHECK(std::abs(v.norm() - R) < 1e-6 * R);
  // Polylines close on their first vertex.
  for (const auto& line : data.polylines) {
    CHECK(line.front() == line.back());
    CHECK(static_cast<int>(line.size()) == 3 * 64 + 1);
  }
}

TEST_CASE("sphere obj: shared-edge samples appear in exactly two groups") {
  TempDir tmp;
  const auto solid = solid_params(SolidName::cube);
  const double a = 10.0, R = a * solid.circumradius_ratio;
  const int N = 32;
  const auto tiling = spherical_tiling(solid, sinusoidal_curve(a, 0.4), R, N);
  const auto path = tmp.path / "cube.obj";
  export_sphere_obj(tiling, path, 6);
  const auto data = parse_obj(slurp(path.string()));

  // Probe a few interior samples of face 0's first edge.
  for (int j : {1, 7, N - 1}) {
    const Vec3 probe = tiling.face_boundaries[0][j].direction() * R;
    int containing = 0;
    for (const auto& group : data.groups) {
      bool found = false;
      for (int idx : group)
        if ((data.vertices[idx] - probe).norm() < 1e-4) found = true;
      if (found) ++containing;
    }
    CHECK(containing == 2);
  }
}

TEST_CASE("sphere obj with patches adds a triangle fan per module") {
  TempDir tmp;
  const auto solid = solid_params(SolidName::tetrahedron);
  const double a = 10.0, R = a * solid.circumradius_ratio;
  const auto tiling = spherical_tiling(solid, sinusoidal_curve(a, 0.2), R, 32);
  const auto plain = tmp.path / "plain.obj", patched = tmp.path / "patched.obj";
  export_sphere_obj(tiling, plain, 6, false);
  export_sphere_obj(tiling, patched, 6, true);
  const auto text = slurp(patched.string());
  CHECK(text.find("\nf ") != std::string::npos);
  CHECK(slurp(plain.string()).find("\nf ") == std::string::npos);
  // Patched file re-exports identically too.
  const auto again = tmp.path / "patched2.obj";
  export_sphere_obj(tiling, again, 6, true);
  CHECK(text == slurp(again.string()));
}

TEST_CASE("cavity svg renders the limb and every cavity") {
  TempDir tmp;
  const auto spec = cavity_cross_section(CavityProfile::outward_trapezoid, 5,
                                         20.0, 30.0, 2.35, 70.0, 100.0);
  const auto path = tmp.path / "cavity.svg";
  export_cavity_svg(spec, path, 6);
  const auto svg = slurp(path.string());
  CHECK(svg.find("<rect") != std::string::npos);
  size_t count = 0, pos = 0;
  while ((pos = svg.find("<path", pos)) != std::string::npos) {
    ++count;
    ++pos;
  }
  CHECK(count == 5);
}

TEST_CASE("json reports: stable key order") {
  const auto solid = solid_params(SolidName::cube);
  const auto report = distortion_report(solid, 110.0, 0.5, 0.56, -1.0, 64);
  const auto j = to_json(report);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  REQUIRE(keys.size() >= 10);
  CHECK(keys[0] == "solid");
  CHECK(keys[1] == "edge_length_mm");
  CHECK(j.dump() == to_json(report).dump());
  CHECK(j["feasible"].get<bool>());
}

TEST_CASE("trace csv: header and values round-trip") {
  TempDir tmp;
  const auto result =
      optimize_amplitude(solid_params(SolidName::cube), 0.56, 0.1, -1.0, 64);
  const auto path = tmp.path / "trace.csv";
  export_trace_csv(result, path);
  const auto text = slurp(path.string());
  REQUIRE(text.rfind("A,J,eps_inter,D_loco\n", 0) == 0);
  std::istringstream in(text);
  std::string header, line;
  std::getline(in, header);
  size_t row = 0;
  while (std::getline(in, line)) {
    double a, jv, eps, d;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &a, &jv, &eps, &d) == 4);
    CHECK(std::abs(a - result.trace[row].amplitude) < 1e-9);
    CHECK(std::abs(jv - result.trace[row].j) < 1e-9);
    ++row;
  }
  CHECK(row == result.trace.size());
}

TEST_CASE("precision is validated") {
  TempDir tmp;
  const auto outline = make_outline(SolidName::cube, 10.0, 0.0, 64);
  CHECK_THROWS_AS(export_planar_svg(outline, tmp.path / "x.svg", 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(export_planar_svg(outline, tmp.path / "x.svg", 13),
                  std::invalid_argument);
}

TEST_CASE("unwritable path reports an error") {
  const auto outline = make_outline(SolidName::cube, 10.0, 0.0, 64);
  CHECK_THROWS_AS(
      export_planar_svg(outline, "/nonexistent_dir_zz/x.svg", 6),
      std::runtime_error);
}
