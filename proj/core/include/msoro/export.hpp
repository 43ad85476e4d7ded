#pragma once

#include <filesystem>
#include <string>

#include "msoro/cavity.hpp"
#include "msoro/metrics.hpp"
#include "msoro/optimize.hpp"
#include "msoro/topology.hpp"

#include "json.hpp"

namespace msoro {

// All writers are deterministic: identical inputs produce byte-identical
// files. Numbers are formatted locale-independently with a fixed number of
// decimals (precision must lie in [3, 12]).

// Single closed path in millimeter units; the SVG y axis points down, so the
// path stores (x, -y). The viewBox covers the outline bounding box plus a 5%
// margin, and a metadata comment records solid, a, R, A and N.
void export_planar_svg(const PlanarOutline& outline,
                       const std::filesystem::path& path, int precision = 6);

// Wavefront OBJ: one named group per module, vertices on the radius-R sphere,
// one polyline ("l") element per face boundary. With `patches` each module
// also gets a triangle fan over its spherical patch for rendering.
void export_sphere_obj(const SphericalTiling& tiling,
                       const std::filesystem::path& path, int precision = 6,
                       bool patches = false);

// Limb side profile with the cavity polygons, same conventions as the
// planar SVG.
void export_cavity_svg(const CavitySpec& spec, const std::filesystem::path& path,
                       int precision = 6);

// Amplitude sweep of the optimization as CSV with header A,J,eps_inter,D_loco.
void export_trace_csv(const OptimizationResult& result,
                      const std::filesystem::path& path, int precision = 9);

nlohmann::ordered_json to_json(const DistortionReport& report);
nlohmann::ordered_json to_json(const OptimizationResult& result);
nlohmann::ordered_json to_json(const CavitySpec& spec);

void write_json(const nlohmann::ordered_json& j,
                const std::filesystem::path& path);

// Fixed-notation, locale-independent formatting used by every writer.
std::string format_fixed(double value, int precision);

}  // namespace msoro
