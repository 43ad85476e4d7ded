#pragma once

#include <cmath>
#include <numbers>

namespace msoro {

inline constexpr double kPi = std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

// Counterclockwise rotation about the origin.
inline Vec2 rotate(Vec2 v, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(Vec3 o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 normalized() const {
    const double n = norm();
    return {x / n, y / n, z / n};
  }
};

inline Vec3 operator*(double s, Vec3 v) { return v * s; }

// Angle between two directions, robust near 0 and pi.
inline double central_angle(Vec3 u, Vec3 v) {
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

inline double clamp_unit(double t) {
  if (t > 1.0) return 1.0;
  if (t < -1.0) return -1.0;
  return t;
}

inline double deg_to_rad(double d) { return d * kPi / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / kPi; }

// Normalizes a longitude-like angle into (-pi, pi].
inline double wrap_longitude(double lambda) {
  double l = std::remainder(lambda, 2.0 * kPi);
  if (l <= -kPi) l += 2.0 * kPi;
  return l;
}

// Latitude/longitude of a direction; x axis is (phi=0, lambda=0).
inline void direction_to_latlon(Vec3 dir, double& phi, double& lambda) {
  const Vec3 u = dir.normalized();
  phi = std::asin(clamp_unit(u.z));
  lambda = std::atan2(u.y, u.x);
}

inline Vec3 latlon_to_direction(double phi, double lambda) {
  const double c = std::cos(phi);
  return {c * std::cos(lambda), c * std::sin(lambda), std::sin(phi)};
}

// Local east/north tangent basis at (phi, lambda).
inline Vec3 local_east(double /*phi*/, double lambda) {
  return {-std::sin(lambda), std::cos(lambda), 0.0};
}

inline Vec3 local_north(double phi, double lambda) {
  return {-std::sin(phi) * std::cos(lambda), -std::sin(phi) * std::sin(lambda),
          std::cos(phi)};
}

}  // namespace msoro
