#pragma once

#include <cmath>
#include <vector>

namespace mmplan {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

inline double squared_distance(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

/// Axis-aligned rectangle in meters. Bounds are inclusive.
struct Rect {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }
  Point center() const { return {0.5 * (x_min + x_max), 0.5 * (y_min + y_max)}; }

  bool contains(Point p) const { return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max; }
  bool strictly_contains(Point p) const { return p.x > x_min && p.x < x_max && p.y > y_min && p.y < y_max; }
  bool contains(const Rect& r) const {
    return r.x_min >= x_min && r.x_max <= x_max && r.y_min >= y_min && r.y_max <= y_max;
  }
  bool valid() const { return x_max > x_min && y_max > y_min; }

  Point clamp(Point p) const {
    return {std::fmin(std::fmax(p.x, x_min), x_max), std::fmin(std::fmax(p.y, y_min), y_max)};
  }

  friend bool operator==(const Rect&, const Rect&) = default;
};

/// Intersection of two rectangles; the result is not valid() when they only touch or are disjoint.
inline Rect intersection(const Rect& a, const Rect& b) {
  return {std::fmax(a.x_min, b.x_min), std::fmin(a.x_max, b.x_max), std::fmax(a.y_min, b.y_min),
          std::fmin(a.y_max, b.y_max)};
}

}  // namespace mmplan
