#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "prox/geometry.hpp"
#include "prox/grid.hpp"

namespace prox {

// World-space shapes with explicit boundary semantics. `closedBoundary`
// decides whether points exactly on the boundary belong to the shape.
struct Disk {
  Vec2 center;
  double radius = 1.0;
  bool closedBoundary = true;
};

struct Triangle {
  Vec2 a, b, c;
  bool closedBoundary = true;
};

struct RectShape {
  Vec2 lo, hi;  // normalised: lo.x <= hi.x, lo.y <= hi.y
  bool closedBoundary = true;
};

struct Shape;

struct UnionShape {
  std::vector<Shape> parts;
};

// Complement relative to the ambient plane; the window cuts it down when
// rasterised.
struct ComplementShape {
  std::shared_ptr<const Shape> inner;
};

struct Shape {
  std::variant<Disk, Triangle, RectShape, UnionShape, ComplementShape> node;
};

Shape makeDisk(Vec2 center, double radius, bool closedBoundary = true);
Shape makeTriangle(Vec2 a, Vec2 b, Vec2 c, bool closedBoundary = true);
Shape makeRect(Vec2 cornerA, Vec2 cornerB, bool closedBoundary = true);
Shape makeUnion(std::vector<Shape> parts);
Shape makeComplement(Shape inner);

bool contains(const Shape& s, Vec2 p);

// Pixel (ix, iy) is set when its centre lies in the shape.
GridRegion rasterize(const GridSpace& g, const Shape& s);

}  // namespace prox
