#pragma once

#include <cmath>

namespace prox {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 a) { return dot(a, a); }

inline double degToRad(double deg) { return deg * 3.141592653589793238462643383279502884 / 180.0; }

inline Vec2 rotateAbout(Vec2 p, Vec2 center, double angleDeg) {
  const double r = degToRad(angleDeg);
  const double c = std::cos(r), s = std::sin(r);
  const Vec2 d = p - center;
  return {center.x + c * d.x - s * d.y, center.y + s * d.x + c * d.y};
}

// World-coordinate axis-aligned rectangle describing a rendered window.
struct Window {
  double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
  double dx(int width) const { return (x1 - x0) / width; }
  double dy(int height) const { return (y1 - y0) / height; }
};

}  // namespace prox
