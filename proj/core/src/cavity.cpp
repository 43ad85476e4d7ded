#include "msoro/cavity.hpp"

#include <cmath>
#include <stdexcept>

#include "msoro/geometry.hpp"

namespace msoro {
namespace {

// One cavity polygon centered at x = 0, opening [-w/2, w/2] at y = top.
// `slant` is the horizontal run of a leg over the cavity height.
std::vector<PlanarPoint> base_polygon(CavityProfile profile, double w, double h,
                                      double top, double slant) {
  const double bot = top - h;
  switch (profile) {
    case CavityProfile::triangle:
      return {{-w / 2, top}, {0.0, bot}, {w / 2, top}};
    case CavityProfile::rectangle:
      return {{-w / 2, top}, {-w / 2, bot}, {w / 2, bot}, {w / 2, top}};
    case CavityProfile::inward_trapezoid:
      // Right-angle leg on the actuation side (-x), slant leaning away.
      return {{-w / 2, top}, {-w / 2, bot}, {w / 2 + slant, bot}, {w / 2, top}};
    case CavityProfile::outward_trapezoid:
      return {{-w / 2, top}, {-w / 2 - slant, bot}, {w / 2, bot}, {w / 2, top}};
    case CavityProfile::isosceles_trapezoid:
      return {{-w / 2, top},
              {-w / 2 - slant, bot},
              {w / 2 + slant, bot},
              {w / 2, top}};
  }
  throw std::invalid_argument("unknown cavity profile");
}

bool is_trapezoid(CavityProfile profile) {
  return profile == CavityProfile::inward_trapezoid ||
         profile == CavityProfile::outward_trapezoid ||
         profile == CavityProfile::isosceles_trapezoid;
}

}  // namespace

std::string to_string(CavityProfile profile) {
  switch (profile) {
    case CavityProfile::triangle: return "triangle";
    case CavityProfile::rectangle: return "rectangle";
    case CavityProfile::inward_trapezoid: return "inward_trapezoid";
    case CavityProfile::outward_trapezoid: return "outward_trapezoid";
    case CavityProfile::isosceles_trapezoid: return "isosceles_trapezoid";
  }
  return "?";
}

CavityProfile cavity_profile_from_string(std::string_view name) {
  for (auto p : {CavityProfile::triangle, CavityProfile::rectangle,
                 CavityProfile::inward_trapezoid, CavityProfile::outward_trapezoid,
                 CavityProfile::isosceles_trapezoid})
    if (to_string(p) == name) return p;
  throw std::invalid_argument("unknown cavity profile '" + std::string(name) +
                              "'");
}

double cavity_width(double b, double r, double h, int m) {
  if (!(b > 0.0) || !(r > 0.0)) throw std::invalid_argument("b and r must be positive");
  if (!(h > 0.0)) throw std::invalid_argument("cavity height must be positive");
  if (m < 1) throw std::invalid_argument("cavity count must be at least 1");
  if (b > 2.0 * r)
    throw std::domain_error("no circular arc of radius " + std::to_string(r) +
                            " spans a chord of length " + std::to_string(b));
  return (2.0 * h / m) * std::asin(b / (2.0 * r));
}

CavitySpec cavity_cross_section(CavityProfile profile, int count,
                                double cavity_height, double limb_height,
                                double width, double obtuse_angle_deg,
                                double limb_length,
                                std::optional<double> pitch) {
  if (count < 1) throw std::invalid_argument("cavity count must be at least 1");
  if (!(cavity_height > 0.0 && cavity_height < limb_height))
    throw std::invalid_argument(
        "cavity height must lie strictly between 0 and the limb height");
  if (!(width > 0.0)) throw std::invalid_argument("cavity width must be positive");
  if (!(limb_length > 0.0))
    throw std::invalid_argument("limb length must be positive");

  double slant = 0.0;
  double obtuse = obtuse_angle_deg;
  if (is_trapezoid(profile)) {
    if (obtuse < 90.0) obtuse = 180.0 - obtuse;
    if (!(obtuse > 90.0 && obtuse < 180.0))
      throw std::invalid_argument(
          "trapezoid obtuse angle must lie strictly between 90 and 180 degrees");
    // The slant leg meets the bottom at 180 - obtuse; run over the height h.
    slant = cavity_height * std::tan(deg_to_rad(obtuse - 90.0));
  }

  // Widest horizontal extent of one cavity.
  double extent = width;
  if (profile == CavityProfile::inward_trapezoid ||
      profile == CavityProfile::outward_trapezoid)
    extent = width + slant;
  else if (profile == CavityProfile::isosceles_trapezoid)
    extent = width + 2.0 * slant;

  CavitySpec spec;
  spec.profile = profile;
  spec.count = count;
  spec.cavity_height = cavity_height;
  spec.limb_height = limb_height;
  spec.limb_length = limb_length;
  spec.obtuse_angle_deg = is_trapezoid(profile) ? obtuse : 0.0;
  spec.width = width;

  std::vector<double> centers(count);
  if (pitch) {
    spec.pitch = *pitch;
    const double x0 = (limb_length - (count - 1) * *pitch) / 2.0;
    for (int i = 0; i < count; ++i) centers[i] = x0 + i * *pitch;
    if (*pitch < extent || x0 - extent / 2.0 < 0.0 ||
        centers.back() + extent / 2.0 > limb_length)
      throw std::domain_error(
          "cavities overlap or leave the limb at pitch " + std::to_string(*pitch));
  } else {
    // Equal solid segments between cavities and at both ends.
    const double gap = (limb_length - count * extent) / (count + 1);
    if (gap < 0.0) {
      const int max_count = static_cast<int>(limb_length / extent);
      throw std::domain_error(
          "cavities overlap; at most " + std::to_string(max_count) +
          " cavities of this profile fit a limb of length " +
          std::to_string(limb_length));
    }
    for (int i = 0; i < count; ++i)
      centers[i] = gap * (i + 1) + extent * i + extent / 2.0;
    spec.pitch = extent + gap;
  }

  const auto base =
      base_polygon(profile, width, cavity_height, limb_height, slant);
  spec.cavities.reserve(count);
  for (double cx : centers) {
    auto poly = base;
    for (auto& pt : poly) pt.x += cx;
    spec.cavities.push_back(std::move(poly));
  }
  return spec;
}

}  // namespace msoro
