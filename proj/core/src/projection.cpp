#include "msoro/projection.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace msoro {
namespace {

// c / sin(c) without the 0/0 at c = 0; two-term series below 1e-6.
double equidistant_scale(double c, double sin_c) {
  if (c < 1e-6) return 1.0 + c * c / 6.0;
  return c / sin_c;
}

}  // namespace

SphericalPoint inverse_orthographic(double x, double fx,
                                    const SphericalAnchor& anchor, double R) {
  if (!(R > 0.0)) throw std::invalid_argument("sphere radius must be positive");
  const double rho = std::hypot(x, fx);
  if (rho > R * (1.0 + 1e-12))
    throw std::domain_error(
        "curve point lies off the projectable hemisphere (rho = " +
        std::to_string(rho) + " > R = " + std::to_string(R) + ")");

  const Vec3 up = anchor.direction();
  const Vec3 east = local_east(anchor.phi, anchor.lambda);
  const Vec3 north = local_north(anchor.phi, anchor.lambda);

  // Curve axes in the tangent plane, rotated by the bearing about `up`.
  const double cb = std::cos(anchor.bearing), sb = std::sin(anchor.bearing);
  const Vec3 x_axis = east * cb + north * sb;
  const Vec3 y_axis = east * -sb + north * cb;

  const double height = std::sqrt(std::max(R * R - rho * rho, 0.0));
  const Vec3 point = x_axis * x + y_axis * fx + up * height;

  SphericalPoint out;
  direction_to_latlon(point, out.phi, out.lambda);
  return out;
}

SphericalPoint inverse_orthographic_zero_bearing(double x, double fx,
                                                 double phi0, double lambda0,
                                                 double R) {
  if (!(R > 0.0)) throw std::invalid_argument("sphere radius must be positive");
  const double rho = std::hypot(x, fx);
  if (rho > R * (1.0 + 1e-12))
    throw std::domain_error("curve point lies off the projectable hemisphere");
  if (rho == 0.0) return {phi0, wrap_longitude(lambda0)};

  const double c = std::asin(clamp_unit(rho / R));
  const double sin_c = rho / R;  // exact for c = arcsin(rho / R)
  const double cos_c = std::cos(c);

  SphericalPoint out;
  out.phi = std::asin(
      clamp_unit(cos_c * std::sin(phi0) + fx * sin_c * std::cos(phi0) / rho));
  out.lambda = wrap_longitude(
      lambda0 + std::atan2(x * sin_c,
                           rho * cos_c * std::cos(phi0) -
                               fx * sin_c * std::sin(phi0)));
  return out;
}

PlanarPoint azimuthal_equidistant(const SphericalPoint& pt,
                                  const SphericalAnchor& center, double R) {
  if (!(R > 0.0)) throw std::invalid_argument("sphere radius must be positive");
  const double sin_phi = std::sin(pt.phi), cos_phi = std::cos(pt.phi);
  const double sin_phi1 = std::sin(center.phi), cos_phi1 = std::cos(center.phi);
  const double dl = pt.lambda - center.lambda;

  const double cos_c =
      clamp_unit(sin_phi1 * sin_phi + cos_phi1 * cos_phi * std::cos(dl));
  const double c = std::acos(cos_c);
  if (c > kPi - 1e-9)
    throw std::domain_error("point is antipodal to the projection center");

  const double k = equidistant_scale(c, std::sin(c));
  return {R * k * cos_phi * std::sin(dl),
          R * k * (cos_phi1 * sin_phi - sin_phi1 * cos_phi * std::cos(dl))};
}

PlanarPoint compose_h(double x, const ModuleTopologyCurve& curve,
                      const SphericalAnchor& edge, const SphericalAnchor& face,
                      double R) {
  return azimuthal_equidistant(inverse_orthographic(x, curve(x), edge, R), face,
                               R);
}

}  // namespace msoro
