#include "msoro/export.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace msoro {
namespace {

void check_precision(int precision) {
  if (precision < 3 || precision > 12)
    throw std::invalid_argument("precision must lie in [3, 12]");
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write to '" + path.string() + "'");
  return out;
}

struct Bounds {
  double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
  void add(double x, double y) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
};

void write_svg_header(std::ofstream& out, const Bounds& bb,
                      const std::string& meta, int precision) {
  const double w = (bb.max_x - bb.min_x) * 1.05;
  const double h = (bb.max_y - bb.min_y) * 1.05;
  const double x0 = bb.min_x - (bb.max_x - bb.min_x) * 0.025;
  const double y0 = bb.min_y - (bb.max_y - bb.min_y) * 0.025;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<!-- " << meta << " -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << format_fixed(w, precision) << "mm\" height=\"" << format_fixed(h, precision)
      << "mm\" viewBox=\"" << format_fixed(x0, precision) << ' '
      << format_fixed(y0, precision) << ' ' << format_fixed(w, precision) << ' '
      << format_fixed(h, precision) << "\">\n";
}

}  // namespace

std::string format_fixed(double value, int precision) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::fixed, precision);
  if (res.ec != std::errc())
    throw std::runtime_error("number formatting failed");
  return std::string(buf, res.ptr);
}

void export_planar_svg(const PlanarOutline& outline,
                       const std::filesystem::path& path, int precision) {
  check_precision(precision);
  Bounds bb;
  for (const auto& pt : outline.points) bb.add(pt.x, -pt.y);

  auto out = open_out(path);
  const std::string meta =
      "solid=" + to_string(outline.solid) +
      " edge_length_mm=" + format_fixed(outline.a, precision) +
      " R_mm=" + format_fixed(outline.R, precision) +
      " amplitude=" + format_fixed(outline.amplitude, precision) +
      " samples_per_edge=" +
      std::to_string(static_cast<int>(outline.points.size()) / outline.p);
  write_svg_header(out, bb, meta, precision);

  out << "  <path d=\"";
  for (size_t i = 0; i < outline.points.size(); ++i) {
    out << (i == 0 ? "M " : " L ") << format_fixed(outline.points[i].x, precision)
        << ' ' << format_fixed(-outline.points[i].y, precision);
  }
  out << " Z\" fill=\"none\" stroke=\"black\" stroke-width=\"0.2\"/>\n";
  out << "</svg>\n";
}

void export_sphere_obj(const SphericalTiling& tiling,
                       const std::filesystem::path& path, int precision,
                       bool patches) {
  check_precision(precision);
  auto out = open_out(path);
  out << "# module boundary polylines on the circumscribing sphere\n";
  out << "# solid=" << to_string(tiling.solid) << " R_mm="
      << format_fixed(tiling.R, precision)
      << " samples_per_edge=" << tiling.samples_per_edge << "\n";

  int base = 0;  // obj indices are 1-based and global
  for (size_t face = 0; face < tiling.face_boundaries.size(); ++face) {
    const auto& boundary = tiling.face_boundaries[face];
    const int n = static_cast<int>(boundary.size()) - 1;  // last repeats first
    out << "g module_" << face << "\n";
    Vec3 centroid{0, 0, 0};
    for (int i = 0; i < n; ++i) {
      const Vec3 v = boundary[i].direction() * tiling.R;
      centroid = centroid + v;
      out << "v " << format_fixed(v.x, precision) << ' '
          << format_fixed(v.y, precision) << ' ' << format_fixed(v.z, precision)
          << "\n";
    }
    int center_index = 0;
    if (patches) {
      const Vec3 c = centroid.normalized() * tiling.R;
      out << "v " << format_fixed(c.x, precision) << ' '
          << format_fixed(c.y, precision) << ' ' << format_fixed(c.z, precision)
          << "\n";
      center_index = base + n + 1;
    }
    out << "l";
    for (int i = 0; i < n; ++i) out << ' ' << base + i + 1;
    out << ' ' << base + 1 << "\n";
    if (patches) {
      for (int i = 0; i < n; ++i)
        out << "f " << center_index << ' ' << base + i + 1 << ' '
            << base + (i + 1) % n + 1 << "\n";
    }
    base += n + (patches ? 1 : 0);
  }
}

void export_cavity_svg(const CavitySpec& spec, const std::filesystem::path& path,
                       int precision) {
  check_precision(precision);
  Bounds bb;
  bb.add(0.0, 0.0);
  bb.add(spec.limb_length, -spec.limb_height);

  auto out = open_out(path);
  const std::string meta =
      "profile=" + to_string(spec.profile) + " cavities=" +
      std::to_string(spec.count) + " width_mm=" + format_fixed(spec.width, precision) +
      " cavity_height_mm=" + format_fixed(spec.cavity_height, precision) +
      " limb_height_mm=" + format_fixed(spec.limb_height, precision);
  write_svg_header(out, bb, meta, precision);

  out << "  <rect x=\"" << format_fixed(0.0, precision) << "\" y=\""
      << format_fixed(-spec.limb_height, precision) << "\" width=\""
      << format_fixed(spec.limb_length, precision) << "\" height=\""
      << format_fixed(spec.limb_height, precision)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.2\"/>\n";
  for (const auto& poly : spec.cavities) {
    out << "  <path d=\"";
    for (size_t i = 0; i < poly.size(); ++i)
      out << (i == 0 ? "M " : " L ") << format_fixed(poly[i].x, precision) << ' '
          << format_fixed(-poly[i].y, precision);
    out << " Z\" fill=\"none\" stroke=\"black\" stroke-width=\"0.2\"/>\n";
  }
  out << "</svg>\n";
}

void export_trace_csv(const OptimizationResult& result,
                      const std::filesystem::path& path, int precision) {
  check_precision(precision);
  auto out = open_out(path);
  out << "A,J,eps_inter,D_loco\n";
  for (const auto& pt : result.trace)
    out << format_fixed(pt.amplitude, precision) << ','
        << format_fixed(pt.j, precision) << ','
        << format_fixed(pt.eps_inter, precision) << ','
        << format_fixed(pt.d_loco, precision) << "\n";
}

nlohmann::ordered_json to_json(const DistortionReport& report) {
  nlohmann::ordered_json j;
  j["solid"] = to_string(report.solid);
  j["edge_length_mm"] = report.a;
  j["R_mm"] = report.R;
  j["circumradius_ratio"] = report.R / report.a;
  j["amplitude"] = report.amplitude;
  j["alpha"] = report.alpha;
  j["c_slack_mm"] = report.c_slack;
  j["A_loco_mm2"] = report.a_loco;
  j["clearance_mm"] = report.clearance;
  j["feasible"] = report.feasible;
  if (report.d_loco) j["D_loco"] = *report.d_loco;
  j["A_E_mm2"] = report.area_planar;
  j["A_S_mm2"] = report.area_spherical;
  j["eps_intra"] = report.eps_intra;
  j["G_E_mm3"] = report.g_e;
  j["t_star_mm"] = {report.t1, report.t2};
  j["eps_inter"] = report.eps_inter;
  if (report.j) j["J"] = *report.j;
  return j;
}

nlohmann::ordered_json to_json(const OptimizationResult& result) {
  nlohmann::ordered_json j;
  j["solid"] = to_string(result.solid);
  j["alpha"] = result.alpha;
  j["resolution"] = result.resolution;
  j["c_slack_ratio"] = result.c_slack;
  j["A_star"] = result.a_star;
  j["J_star"] = result.j_star;
  j["feasible_range"] = {result.feasible_lo, result.feasible_hi};
  j["trace_points"] = result.trace.size();
  return j;
}

nlohmann::ordered_json to_json(const CavitySpec& spec) {
  nlohmann::ordered_json j;
  j["profile"] = to_string(spec.profile);
  j["count"] = spec.count;
  j["width_mm"] = spec.width;
  j["cavity_height_mm"] = spec.cavity_height;
  j["limb_height_mm"] = spec.limb_height;
  j["limb_length_mm"] = spec.limb_length;
  j["pitch_mm"] = spec.pitch;
  if (spec.obtuse_angle_deg > 0.0) j["obtuse_angle_deg"] = spec.obtuse_angle_deg;
  auto polys = nlohmann::ordered_json::array();
  for (const auto& poly : spec.cavities) {
    auto p = nlohmann::ordered_json::array();
    for (const auto& pt : poly) p.push_back({pt.x, pt.y});
    polys.push_back(p);
  }
  j["cavity_polygons"] = polys;
  return j;
}

void write_json(const nlohmann::ordered_json& j,
                const std::filesystem::path& path) {
  auto out = open_out(path);
  out << j.dump(2) << "\n";
}

}  // namespace msoro
