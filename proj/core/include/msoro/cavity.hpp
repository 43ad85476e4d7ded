#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "msoro/projection.hpp"

namespace msoro {

enum class CavityProfile {
  triangle,
  rectangle,
  inward_trapezoid,
  outward_trapezoid,
  isosceles_trapezoid
};

std::string to_string(CavityProfile profile);
CavityProfile cavity_profile_from_string(std::string_view name);

// Width of the cavity opening that lets a limb of straight span b curl onto a
// circular arc of radius r: w = (2h/m) * asin(b / (2r)).
// Throws std::domain_error when b > 2r (no arc fits), std::invalid_argument
// for non-positive b, r, h or m < 1.
double cavity_width(double b, double r, double h, int m);

// Side profile of one limb with its actuation cavities. Coordinates are
// x along the limb in [0, limb_length], y through the thickness in
// [0, limb_height]; cavities open at the top surface y = limb_height and all
// share the opening width `width` there. The uncut spine below the cavities
// keeps thickness limb_height - cavity_height.
struct CavitySpec {
  CavityProfile profile;
  int count = 0;              // m
  double cavity_height = 0.0; // h
  double limb_height = 0.0;   // l
  double limb_length = 0.0;
  double obtuse_angle_deg = 0.0;  // realized obtuse interior angle (trapezoids)
  double width = 0.0;             // w, opening width at the top surface
  double pitch = 0.0;             // center-to-center spacing
  std::vector<std::vector<PlanarPoint>> cavities;  // closed polygons, CCW
};

// Lays out m congruent cavity polygons, uniformly pitched with equal solid
// segments between and around them; an explicit pitch overrides the uniform
// layout. An obtuse angle given as its supplement (e.g. 70) is normalized to
// the actual obtuse interior angle (110).
// Throws std::domain_error when adjacent cavities would overlap, naming the
// maximum feasible count.
CavitySpec cavity_cross_section(CavityProfile profile, int count,
                                double cavity_height, double limb_height,
                                double width, double obtuse_angle_deg,
                                double limb_length,
                                std::optional<double> pitch = std::nullopt);

}  // namespace msoro
