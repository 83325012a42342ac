#pragma once

#include <cmath>
#include <vector>

namespace strokegraph {

struct Point {
  double x = 0.0;
  double y = 0.0;

  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  Point operator*(double s) const { return {x * s, y * s}; }
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

using Polyline = std::vector<Point>;

inline double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline double arc_length(const Polyline& pts) {
  double len = 0.0;
  for (size_t i = 1; i < pts.size(); ++i) len += distance(pts[i - 1], pts[i]);
  return len;
}

// Rotation by theta radians about `center`, then translation by (dx, dy).
inline Point rotate_translate(const Point& p, double theta, const Point& center,
                              double dx, double dy) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double rx = p.x - center.x, ry = p.y - center.y;
  return {c * rx - s * ry + center.x + dx, s * rx + c * ry + center.y + dy};
}

inline Point reflect_x(const Point& p, double axis_x) {
  return {2.0 * axis_x - p.x, p.y};
}

// Unsigned angle in [0, pi] at point b between segments a->b and b->c.
// Degenerate (zero-length) segments give 0.
inline double turning_angle(const Point& a, const Point& b, const Point& c) {
  const double ux = b.x - a.x, uy = b.y - a.y;
  const double wx = c.x - b.x, wy = c.y - b.y;
  const double cross = ux * wy - uy * wx;
  const double dot = ux * wx + uy * wy;
  if (cross == 0.0 && dot == 0.0) return 0.0;
  return std::atan2(std::fabs(cross), dot);
}

}  // namespace strokegraph
