#pragma once

#include <boost/dynamic_bitset.hpp>
#include <string>
#include <vector>

#include "prox/errors.hpp"
#include "prox/geometry.hpp"

namespace prox {

// Raster model: a width x height pixel lattice viewed through a world-space
// window. Pixel (ix, iy) covers the world cell with centre
// (x0 + (ix+0.5)dx, y0 + (iy+0.5)dy); iy grows upward in world space.
class GridSpace {
 public:
  GridSpace(int width, int height, Window window, int adjacency = 8, bool windowAsSpace = true);

  int width() const { return w_; }
  int height() const { return h_; }
  int adjacency() const { return adj_; }
  bool windowAsSpace() const { return was_; }
  const Window& window() const { return win_; }

  Vec2 pixelCenter(int ix, int iy) const {
    return {win_.x0 + (ix + 0.5) * dx_, win_.y0 + (iy + 0.5) * dy_};
  }
  // Nearest pixel to a world point; false when it falls outside the window.
  bool nearestPixel(Vec2 p, int& ix, int& iy) const;

  double dx() const { return dx_; }
  double dy() const { return dy_; }

 private:
  int w_, h_, adj_;
  bool was_;
  Window win_;
  double dx_, dy_;
};

// Subset of a grid carrier as a flat bitset, row-major, bit = iy*width + ix.
struct GridRegion {
  int width = 0;
  int height = 0;
  boost::dynamic_bitset<> bits;

  GridRegion() = default;
  GridRegion(int w, int h) : width(w), height(h), bits(static_cast<std::size_t>(w) * h) {}

  bool test(int ix, int iy) const {
    return bits.test(static_cast<std::size_t>(iy) * width + ix);
  }
  void set(int ix, int iy, bool v = true) {
    bits.set(static_cast<std::size_t>(iy) * width + ix, v);
  }
  std::size_t count() const { return bits.count(); }
  bool operator==(const GridRegion& o) const {
    return width == o.width && height == o.height && bits == o.bits;
  }
};

GridRegion emptyRegion(const GridSpace& g);
GridRegion fullRegion(const GridSpace& g);

// Shift the whole region by (dx, dy) pixels; cells pulled in from outside the
// window read as `fill`.
GridRegion shifted(const GridSpace& g, const GridRegion& s, int dx, int dy, bool fill);

// Morphological interior: keep pixels whose whole stencil neighbourhood
// (3x3 for 8-adjacency, plus-shape for 4) lies in S. When the window is the
// whole space, out-of-window neighbours are ignored; otherwise border pixels
// are never interior.
GridRegion interior(const GridSpace& g, const GridRegion& s);

// Dual of interior, bit for bit: closure(S) = ~interior(~S).
GridRegion closure(const GridSpace& g, const GridRegion& s);

bool isConnected(const GridSpace& g, const GridRegion& s);

// Nonempty and equal to interior(closure(S)).
bool isRegularOpen(const GridSpace& g, const GridRegion& s);

std::string describeRegion(const GridRegion& s);  // "popcount=12 bbox=[3..9]x[2..4]"

}  // namespace prox
