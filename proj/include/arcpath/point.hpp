#pragma once

#include <cmath>
#include <numbers>

namespace arcpath {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(Point2 a, Point2 b) { return !(a == b); }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(b - a); }
inline Point2 normalized(Point2 p) {
  const double n = norm(p);
  return {p.x / n, p.y / n};
}
// 90-degree counterclockwise rotation.
inline Point2 perp_ccw(Point2 p) { return {-p.y, p.x}; }

inline Point2 unit_from_angle(double radians) {
  return {std::cos(radians), std::sin(radians)};
}

// Wraps an angle into (-pi, pi].
inline double wrap_pi(double radians) {
  double a = std::remainder(radians, 2.0 * std::numbers::pi);
  if (a <= -std::numbers::pi) a = std::numbers::pi;
  return a;
}

}  // namespace arcpath
