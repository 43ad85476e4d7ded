// msoro: scale-invariant sphere<->plane module topology design for modular
// soft robots. Subcommands cover the full pipeline: solid catalog, topology
// generation and export, distortion metrics, amplitude optimization and
// cavity cross-sections.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "msoro/cavity.hpp"
#include "msoro/export.hpp"
#include "msoro/metrics.hpp"
#include "msoro/optimize.hpp"
#include "msoro/solids.hpp"
#include "msoro/topology.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

// Values shared by the subcommands, merged from config file defaults and
// command-line flags (flags win).
struct Design {
  std::string solid = "cube";
  double edge_length = 110.0;  // mm
  double amplitude = 0.86;
  bool optimize_amplitude = false;
  double alpha = 0.56;
  double c_slack = -1.0;  // mm; <= 0 means the calibrated default
  int samples = 512;
  double resolution = 0.005;
  int precision = 6;
  bool abs_integrand = false;
  bool printed_slack = false;

  struct Cavity {
    std::string profile = "outward_trapezoid";
    int count = 5;
    double cavity_height = 20.0;  // mm
    double limb_height = 30.0;    // mm
    double obtuse_angle = 70.0;   // deg
    double limb_length = 100.0;   // mm
    std::optional<double> curl_radius;  // mm; default: the Eq. 1 circumradius
    std::optional<double> pitch;        // mm
  } cavity;

  struct Outputs {
    std::string planar_svg, sphere_obj, report_json, trace_csv, cavity_svg,
        cavity_json;
  } outputs;
};

fs::path resolve_output(const std::string& path) {
  fs::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("MSORO_OUTPUT_DIR"))
      return fs::path(dir) / p;
  }
  return p;
}

void load_config(const fs::path& path, Design& d) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot read config file '" + path.string() + "'");
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config file '" + path.string() +
                                "' is not valid JSON: " + e.what());
  }

  if (j.contains("solid")) d.solid = j["solid"].get<std::string>();
  if (j.contains("edge_length_mm")) d.edge_length = j["edge_length_mm"].get<double>();
  if (j.contains("amplitude")) {
    if (j["amplitude"].is_string()) {
      if (j["amplitude"].get<std::string>() != "optimize")
        throw std::invalid_argument("amplitude must be a number or \"optimize\"");
      d.optimize_amplitude = true;
    } else {
      d.amplitude = j["amplitude"].get<double>();
      d.optimize_amplitude = false;
    }
  }
  if (j.contains("alpha")) d.alpha = j["alpha"].get<double>();
  if (j.contains("c_slack_mm")) {
    if (j["c_slack_mm"].is_string()) {
      if (j["c_slack_mm"].get<std::string>() != "auto")
        throw std::invalid_argument("c_slack_mm must be a number or \"auto\"");
      d.c_slack = -1.0;
    } else {
      d.c_slack = j["c_slack_mm"].get<double>();
    }
  }
  if (j.contains("samples_per_edge")) d.samples = j["samples_per_edge"].get<int>();
  if (j.contains("resolution")) d.resolution = j["resolution"].get<double>();
  if (j.contains("precision")) d.precision = j["precision"].get<int>();
  if (j.contains("abs_integrand")) d.abs_integrand = j["abs_integrand"].get<bool>();
  if (j.contains("printed_slack")) d.printed_slack = j["printed_slack"].get<bool>();

  if (j.contains("cavity")) {
    const auto& c = j["cavity"];
    if (c.contains("profile")) d.cavity.profile = c["profile"].get<std::string>();
    if (c.contains("count")) d.cavity.count = c["count"].get<int>();
    if (c.contains("cavity_height_mm"))
      d.cavity.cavity_height = c["cavity_height_mm"].get<double>();
    if (c.contains("limb_height_mm"))
      d.cavity.limb_height = c["limb_height_mm"].get<double>();
    if (c.contains("obtuse_angle_deg"))
      d.cavity.obtuse_angle = c["obtuse_angle_deg"].get<double>();
    if (c.contains("limb_length_mm"))
      d.cavity.limb_length = c["limb_length_mm"].get<double>();
    if (c.contains("curl_radius_mm") && !c["curl_radius_mm"].is_null())
      d.cavity.curl_radius = c["curl_radius_mm"].get<double>();
    if (c.contains("pitch_mm") && !c["pitch_mm"].is_null())
      d.cavity.pitch = c["pitch_mm"].get<double>();
  }
  if (j.contains("outputs")) {
    const auto& o = j["outputs"];
    auto get = [&](const char* key, std::string& into) {
      if (o.contains(key) && !o[key].is_null()) into = o[key].get<std::string>();
    };
    get("planar_svg", d.outputs.planar_svg);
    get("sphere_obj", d.outputs.sphere_obj);
    get("report_json", d.outputs.report_json);
    get("trace_csv", d.outputs.trace_csv);
    get("cavity_svg", d.outputs.cavity_svg);
    get("cavity_json", d.outputs.cavity_json);
  }
}

ordered_json effective_config(const Design& d) {
  ordered_json j;
  j["solid"] = d.solid;
  j["edge_length_mm"] = d.edge_length;
  if (d.optimize_amplitude)
    j["amplitude"] = "optimize";
  else
    j["amplitude"] = d.amplitude;
  j["alpha"] = d.alpha;
  if (d.c_slack <= 0.0)
    j["c_slack_mm"] = "auto";
  else
    j["c_slack_mm"] = d.c_slack;
  j["samples_per_edge"] = d.samples;
  j["resolution"] = d.resolution;
  j["precision"] = d.precision;
  j["abs_integrand"] = d.abs_integrand;
  j["printed_slack"] = d.printed_slack;
  ordered_json c;
  c["profile"] = d.cavity.profile;
  c["count"] = d.cavity.count;
  c["cavity_height_mm"] = d.cavity.cavity_height;
  c["limb_height_mm"] = d.cavity.limb_height;
  c["obtuse_angle_deg"] = d.cavity.obtuse_angle;
  c["limb_length_mm"] = d.cavity.limb_length;
  if (d.cavity.curl_radius) c["curl_radius_mm"] = *d.cavity.curl_radius;
  if (d.cavity.pitch) c["pitch_mm"] = *d.cavity.pitch;
  j["cavity"] = c;
  ordered_json o;
  auto put = [&](const char* key, const std::string& v) {
    if (!v.empty()) o[key] = v;
  };
  put("planar_svg", d.outputs.planar_svg);
  put("sphere_obj", d.outputs.sphere_obj);
  put("report_json", d.outputs.report_json);
  put("trace_csv", d.outputs.trace_csv);
  put("cavity_svg", d.outputs.cavity_svg);
  put("cavity_json", d.outputs.cavity_json);
  j["outputs"] = o;
  return j;
}

msoro::FeasibilityRule rule_of(const Design& d) {
  return d.printed_slack ? msoro::FeasibilityRule::printed_inequality
                         : msoro::FeasibilityRule::geometric_clearance;
}

msoro::OverlapIntegrand integrand_of(const Design& d) {
  return d.abs_integrand ? msoro::OverlapIntegrand::absolute
                         : msoro::OverlapIntegrand::squared;
}

std::vector<msoro::SolidName> solids_of(const std::string& name) {
  if (name == "all")
    return {msoro::kAllSolids, msoro::kAllSolids + 5};
  return {msoro::solid_from_string(name)};
}

void print_solids_table(std::ostream& out) {
  out << "solid          p  q   F   theta_deg    R_over_a\n";
  for (auto name : msoro::kAllSolids) {
    const auto s = msoro::solid_params(name);
    char line[128];
    std::snprintf(line, sizeof(line), "%-13s %2d %2d %3d  %10.6f  %.6f\n",
                  msoro::to_string(name).c_str(), s.p, s.q, s.face_count,
                  msoro::rad_to_deg(s.dihedral), s.circumradius_ratio);
    out << line;
  }
}

ordered_json solids_table_json() {
  auto arr = ordered_json::array();
  for (auto name : msoro::kAllSolids) {
    const auto s = msoro::solid_params(name);
    ordered_json j;
    j["solid"] = msoro::to_string(name);
    j["p"] = s.p;
    j["q"] = s.q;
    j["F"] = s.face_count;
    j["theta_deg"] = msoro::rad_to_deg(s.dihedral);
    j["R_over_a"] = s.circumradius_ratio;
    arr.push_back(j);
  }
  return arr;
}

void print_report_table(const msoro::DistortionReport& r, std::ostream& out) {
  const auto j = msoro::to_json(r);
  size_t width = 0;
  for (auto it = j.begin(); it != j.end(); ++it)
    width = std::max(width, it.key().size());
  for (auto it = j.begin(); it != j.end(); ++it)
    out << it.key() << std::string(width + 2 - it.key().size(), ' ')
        << it.value().dump() << "\n";
}

msoro::DistortionReport run_metrics(const Design& d, msoro::SolidName name) {
  const auto solid = msoro::solid_params(name);
  return msoro::distortion_report(solid, d.edge_length, d.amplitude, d.alpha,
                                  d.c_slack, d.samples, rule_of(d),
                                  integrand_of(d));
}

// Writes every output requested in the design; the workhorse behind both the
// `topology` and `export` subcommands.
void run_pipeline(Design& d, std::ostream& out) {
  const auto name = msoro::solid_from_string(d.solid);
  const auto solid = msoro::solid_params(name);
  const double R = d.edge_length * solid.circumradius_ratio;

  std::optional<msoro::OptimizationResult> opt;
  if (d.optimize_amplitude) {
    const double slack_ratio =
        d.c_slack > 0.0 ? d.c_slack / d.edge_length : -1.0;
    opt = msoro::optimize_amplitude(solid, d.alpha, d.resolution, slack_ratio,
                                    d.samples);
    d.amplitude = opt->a_star;
    out << "optimized amplitude A* = " << opt->a_star << " (J* = " << opt->j_star
        << ")\n";
  }

  out << "solid=" << d.solid << " a=" << d.edge_length << " mm R=" << R
      << " mm (R/a=" << solid.circumradius_ratio << ") A=" << d.amplitude
      << " samples=" << d.samples << "\n";

  const auto curve = msoro::sinusoidal_curve(d.edge_length, d.amplitude);
  if (!d.outputs.planar_svg.empty()) {
    const auto outline = msoro::planar_outline(solid, curve, R, d.samples);
    const auto path = resolve_output(d.outputs.planar_svg);
    msoro::export_planar_svg(outline, path, d.precision);
    out << "wrote " << path.string() << "\n";
  }
  if (!d.outputs.sphere_obj.empty()) {
    const auto tiling = msoro::spherical_tiling(solid, curve, R, d.samples);
    const auto path = resolve_output(d.outputs.sphere_obj);
    msoro::export_sphere_obj(tiling, path, d.precision, false);
    out << "wrote " << path.string() << "\n";
  }
  if (!d.outputs.report_json.empty()) {
    const auto report = run_metrics(d, name);
    const auto path = resolve_output(d.outputs.report_json);
    msoro::write_json(msoro::to_json(report), path);
    out << "wrote " << path.string() << "\n";
  }
  if (!d.outputs.trace_csv.empty()) {
    if (!opt) {
      const double slack_ratio =
          d.c_slack > 0.0 ? d.c_slack / d.edge_length : -1.0;
      opt = msoro::optimize_amplitude(solid, d.alpha, d.resolution, slack_ratio,
                                      d.samples);
    }
    const auto path = resolve_output(d.outputs.trace_csv);
    msoro::export_trace_csv(*opt, path);
    out << "wrote " << path.string() << "\n";
  }
  if (!d.outputs.cavity_json.empty() || !d.outputs.cavity_svg.empty()) {
    const double curl = d.cavity.curl_radius.value_or(R);
    const double w = msoro::cavity_width(d.edge_length, curl,
                                         d.cavity.cavity_height, d.cavity.count);
    const auto spec = msoro::cavity_cross_section(
        msoro::cavity_profile_from_string(d.cavity.profile), d.cavity.count,
        d.cavity.cavity_height, d.cavity.limb_height, w, d.cavity.obtuse_angle,
        d.cavity.limb_length, d.cavity.pitch);
    if (!d.outputs.cavity_json.empty()) {
      const auto path = resolve_output(d.outputs.cavity_json);
      msoro::write_json(msoro::to_json(spec), path);
      out << "wrote " << path.string() << "\n";
    }
    if (!d.outputs.cavity_svg.empty()) {
      const auto path = resolve_output(d.outputs.cavity_svg);
      msoro::export_cavity_svg(spec, path, d.precision);
      out << "wrote " << path.string() << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scale-invariant spherical/planar topology design for modular "
               "soft robots"};
  app.require_subcommand(1);

  Design d;
  std::string config_path, write_config_path;

  // Shared options are registered per subcommand so each --help stays short.
  auto add_common = [&](CLI::App* cmd, bool with_design) {
    cmd->add_option("--config", config_path,
                    "JSON config file; explicit flags override its values");
    cmd->add_option("--write-config", write_config_path,
                    "write the effective configuration to this path");
    if (with_design) {
      cmd->add_option("--solid", d.solid,
                      "tetrahedron|cube|octahedron|dodecahedron|icosahedron");
      cmd->add_option("--edge-length", d.edge_length, "edge length a in mm");
      cmd->add_option("--samples", d.samples, "samples per edge (>= 16)");
      cmd->add_option("--precision", d.precision, "output decimals in [3, 12]");
    }
  };

  auto* solids_cmd = app.add_subcommand("solids", "platonic solid catalog");
  std::string solids_action = "list";
  std::string format = "table";
  solids_cmd->add_option("action", solids_action, "list");
  solids_cmd->add_option("--format", format, "table|json");

  auto* topo = app.add_subcommand(
      "topology", "generate spherical/planar topology and export geometry");
  add_common(topo, true);
  topo->add_option("--amplitude", d.amplitude, "curve amplitude A in [-1, 1]");
  topo->add_option("--planar", d.outputs.planar_svg, "planar outline SVG path");
  topo->add_option("--sphere", d.outputs.sphere_obj, "spherical tiling OBJ path");
  bool patch = false;
  topo->add_flag("--patch", patch, "triangulate module patches in the OBJ");

  auto* metrics_cmd =
      app.add_subcommand("metrics", "distortion and locomotion metrics");
  add_common(metrics_cmd, true);
  metrics_cmd->add_option("--amplitude", d.amplitude, "curve amplitude A");
  metrics_cmd->add_option("--alpha", d.alpha, "objective weight in [0, 1]");
  metrics_cmd->add_option("--c-slack", d.c_slack,
                          "clearance in mm (<= 0: calibrated default)");
  metrics_cmd->add_flag("--abs-integrand", d.abs_integrand,
                        "absolute-difference overlap integrand");
  metrics_cmd->add_flag("--printed-slack", d.printed_slack,
                        "printed feasibility inequality instead of clearance");
  metrics_cmd->add_option("--format", format, "table|json");
  std::string output_path;
  metrics_cmd->add_option("--output", output_path, "write report JSON here");

  auto* opt_cmd =
      app.add_subcommand("optimize", "optimize the curve amplitude A*");
  add_common(opt_cmd, true);
  opt_cmd->add_option("--alpha", d.alpha, "objective weight in [0, 1]");
  opt_cmd->add_option("--resolution", d.resolution, "grid resolution in (0, 0.1]");
  opt_cmd->add_option("--c-slack", d.c_slack,
                      "clearance in mm at the given edge length");
  opt_cmd->add_option("--trace", d.outputs.trace_csv, "write sweep CSV here");
  opt_cmd->add_option("--output", output_path, "write result JSON here");

  auto* cavity_cmd =
      app.add_subcommand("cavity", "cavity width and cross-section profiles");
  add_common(cavity_cmd, true);
  cavity_cmd->add_option("--profile", d.cavity.profile,
                         "triangle|rectangle|inward_trapezoid|outward_trapezoid|"
                         "isosceles_trapezoid");
  cavity_cmd->add_option("--cavities", d.cavity.count, "cavity count m");
  cavity_cmd->add_option("--cavity-height", d.cavity.cavity_height,
                         "cavity height h in mm");
  cavity_cmd->add_option("--limb-height", d.cavity.limb_height,
                         "limb height l in mm");
  cavity_cmd->add_option("--obtuse-angle", d.cavity.obtuse_angle,
                         "trapezoid obtuse angle in degrees");
  cavity_cmd->add_option("--limb-length", d.cavity.limb_length,
                         "limb length in mm");
  double curl_radius = 0.0, pitch = 0.0;
  auto* curl_opt = cavity_cmd->add_option(
      "--curl-radius", curl_radius,
      "target curl radius r in mm (default: the Eq-derived circumradius)");
  auto* pitch_opt =
      cavity_cmd->add_option("--pitch", pitch, "explicit cavity pitch in mm");
  cavity_cmd->add_option("--svg", d.outputs.cavity_svg, "side-profile SVG path");
  cavity_cmd->add_option("--json", d.outputs.cavity_json, "CavitySpec JSON path");

  auto* export_cmd = app.add_subcommand(
      "export", "run the configured pipeline and write every output");
  add_common(export_cmd, true);
  export_cmd->add_option("--amplitude", d.amplitude, "curve amplitude A");

  try {
    // First pass only discovers --config so file values become the defaults
    // that explicit flags then override.
    {
      std::vector<std::string> args(argv + 1, argv + argc);
      for (size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == "--config") config_path = args[i + 1];
      if (!config_path.empty()) load_config(config_path, d);
    }
    app.parse(argc, argv);

    if (curl_opt->count() > 0) d.cavity.curl_radius = curl_radius;
    if (pitch_opt->count() > 0) d.cavity.pitch = pitch;
    if (export_cmd->parsed() && export_cmd->count("--amplitude") > 0)
      d.optimize_amplitude = false;

    if (!write_config_path.empty())
      msoro::write_json(effective_config(d), resolve_output(write_config_path));

    if (solids_cmd->parsed()) {
      if (solids_action != "list")
        throw std::invalid_argument("unknown solids action '" + solids_action +
                                    "' (expected: list)");
      if (format == "json")
        std::cout << solids_table_json().dump(2) << "\n";
      else
        print_solids_table(std::cout);
    } else if (topo->parsed()) {
      if (d.outputs.planar_svg.empty() && d.outputs.sphere_obj.empty())
        throw std::invalid_argument(
            "nothing to do: pass --planar and/or --sphere output paths");
      if (patch && !d.outputs.sphere_obj.empty()) {
        // patch flag applies to the OBJ; regenerate with patches below.
      }
      const auto name = msoro::solid_from_string(d.solid);
      const auto solid = msoro::solid_params(name);
      const double R = d.edge_length * solid.circumradius_ratio;
      std::cout << "solid=" << d.solid << " a=" << d.edge_length << " mm R=" << R
                << " mm (R/a=" << solid.circumradius_ratio << ") A="
                << d.amplitude << " samples=" << d.samples << "\n";
      const auto curve = msoro::sinusoidal_curve(d.edge_length, d.amplitude);
      if (!d.outputs.planar_svg.empty()) {
        const auto path = resolve_output(d.outputs.planar_svg);
        msoro::export_planar_svg(msoro::planar_outline(solid, curve, R, d.samples),
                                 path, d.precision);
        std::cout << "wrote " << path.string() << "\n";
      }
      if (!d.outputs.sphere_obj.empty()) {
        const auto path = resolve_output(d.outputs.sphere_obj);
        msoro::export_sphere_obj(
            msoro::spherical_tiling(solid, curve, R, d.samples), path,
            d.precision, patch);
        std::cout << "wrote " << path.string() << "\n";
      }
    } else if (metrics_cmd->parsed()) {
      const auto report = run_metrics(d, msoro::solid_from_string(d.solid));
      if (!output_path.empty()) {
        msoro::write_json(msoro::to_json(report), resolve_output(output_path));
        std::cout << "wrote " << resolve_output(output_path).string() << "\n";
      } else if (format == "json") {
        std::cout << msoro::to_json(report).dump(2) << "\n";
      } else {
        print_report_table(report, std::cout);
      }
    } else if (opt_cmd->parsed()) {
      const double slack_ratio =
          d.c_slack > 0.0 ? d.c_slack / d.edge_length : -1.0;
      auto results = ordered_json::array();
      for (auto name : solids_of(d.solid)) {
        const auto solid = msoro::solid_params(name);
        const auto result = msoro::optimize_amplitude(
            solid, d.alpha, d.resolution, slack_ratio, d.samples);
        results.push_back(msoro::to_json(result));
        if (!d.outputs.trace_csv.empty()) {
          fs::path path = resolve_output(d.outputs.trace_csv);
          if (d.solid == "all") {
            fs::path named = path.parent_path() /
                             (path.stem().string() + "_" +
                              msoro::to_string(name) + path.extension().string());
            path = named;
          }
          msoro::export_trace_csv(result, path);
          std::cout << "wrote " << path.string() << "\n";
        }
      }
      const ordered_json out =
          d.solid == "all" ? results : results.front();
      if (!output_path.empty()) {
        msoro::write_json(out, resolve_output(output_path));
        std::cout << "wrote " << resolve_output(output_path).string() << "\n";
      } else {
        std::cout << out.dump(2) << "\n";
      }
    } else if (cavity_cmd->parsed()) {
      const auto name = msoro::solid_from_string(d.solid);
      const auto solid = msoro::solid_params(name);
      const double curl =
          d.cavity.curl_radius.value_or(d.edge_length * solid.circumradius_ratio);
      const double w = msoro::cavity_width(
          d.edge_length, curl, d.cavity.cavity_height, d.cavity.count);
      const auto spec = msoro::cavity_cross_section(
          msoro::cavity_profile_from_string(d.cavity.profile), d.cavity.count,
          d.cavity.cavity_height, d.cavity.limb_height, w, d.cavity.obtuse_angle,
          d.cavity.limb_length, d.cavity.pitch);
      if (!d.outputs.cavity_svg.empty()) {
        const auto path = resolve_output(d.outputs.cavity_svg);
        msoro::export_cavity_svg(spec, path, d.precision);
        std::cout << "wrote " << path.string() << "\n";
      }
      if (!d.outputs.cavity_json.empty()) {
        const auto path = resolve_output(d.outputs.cavity_json);
        msoro::write_json(msoro::to_json(spec), path);
        std::cout << "wrote " << path.string() << "\n";
      } else {
        std::cout << msoro::to_json(spec).dump(2) << "\n";
      }
    } else if (export_cmd->parsed()) {
      run_pipeline(d, std::cout);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
