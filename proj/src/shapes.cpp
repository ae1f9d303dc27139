#include "prox/shapes.hpp"

#include <algorithm>
#include <cmath>

#include "prox/errors.hpp"

namespace prox {

Shape makeDisk(Vec2 center, double radius, bool closedBoundary) {
  if (!(radius > 0.0)) throw ValidationError("disk radius must be positive");
  return Shape{Disk{center, radius, closedBoundary}};
}

Shape makeTriangle(Vec2 a, Vec2 b, Vec2 c, bool closedBoundary) {
  if (cross(b - a, c - a) == 0.0) throw ValidationError("triangle vertices are collinear");
  return Shape{Triangle{a, b, c, closedBoundary}};
}

Shape makeRect(Vec2 cornerA, Vec2 cornerB, bool closedBoundary) {
  Vec2 lo{std::min(cornerA.x, cornerB.x), std::min(cornerA.y, cornerB.y)};
  Vec2 hi{std::max(cornerA.x, cornerB.x), std::max(cornerA.y, cornerB.y)};
  if (!(lo.x < hi.x) || !(lo.y < hi.y)) throw ValidationError("rectangle is degenerate");
  return Shape{RectShape{lo, hi, closedBoundary}};
}

Shape makeUnion(std::vector<Shape> parts) {
  if (parts.empty()) throw ValidationError("union needs at least one shape");
  return Shape{UnionShape{std::move(parts)}};
}

Shape makeComplement(Shape inner) {
  return Shape{ComplementShape{std::make_shared<Shape>(std::move(inner))}};
}

bool contains(const Shape& s, Vec2 p) {
  return std::visit(
      [&](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Disk>) {
          const double d2 = norm2(p - node.center);
          const double r2 = node.radius * node.radius;
          return node.closedBoundary ? d2 <= r2 : d2 < r2;
        } else if constexpr (std::is_same_v<T, Triangle>) {
          // Normalise winding so "inside" means nonnegative cross products.
          Vec2 a = node.a, b = node.b, c = node.c;
          if (cross(b - a, c - a) < 0.0) std::swap(b, c);
          const double d0 = cross(b - a, p - a);
          const double d1 = cross(c - b, p - b);
          const double d2 = cross(a - c, p - c);
          if (node.closedBoundary) return d0 >= 0.0 && d1 >= 0.0 && d2 >= 0.0;
          return d0 > 0.0 && d1 > 0.0 && d2 > 0.0;
        } else if constexpr (std::is_same_v<T, RectShape>) {
          if (node.closedBoundary)
            return p.x >= node.lo.x && p.x <= node.hi.x && p.y >= node.lo.y && p.y <= node.hi.y;
          return p.x > node.lo.x && p.x < node.hi.x && p.y > node.lo.y && p.y < node.hi.y;
        } else if constexpr (std::is_same_v<T, UnionShape>) {
          for (const Shape& part : node.parts)
            if (contains(part, p)) return true;
          return false;
        } else {
          return !contains(*node.inner, p);
        }
      },
      s.node);
}

GridRegion rasterize(const GridSpace& g, const Shape& s) {
  GridRegion out(g.width(), g.height());
  for (int iy = 0; iy < g.height(); ++iy)
    for (int ix = 0; ix < g.width(); ++ix)
      if (contains(s, g.pixelCenter(ix, iy))) out.set(ix, iy);
  return out;
}

}  // namespace prox
