#include "prox/grid.hpp"

#include <cmath>
#include <deque>

#include "prox/sets.hpp"

namespace prox {

std::vector<std::pair<GridRegion, std::string>> elementSamples(const GridSpace&,
                                                               const GridRegion& within, int cap) {
  std::vector<std::pair<GridRegion, std::string>> out;
  const std::size_t total = within.count();
  if (total == 0 || cap <= 0) return out;
  const std::size_t step = std::max<std::size_t>(1, total / static_cast<std::size_t>(cap));
  std::size_t idx = 0;
  for (std::size_t b = within.bits.find_first(); b != boost::dynamic_bitset<>::npos;
       b = within.bits.find_next(b), ++idx) {
    if (idx % step != 0) continue;
    if (static_cast<int>(out.size()) >= cap) break;
    GridRegion s(within.width, within.height);
    s.bits.set(b);
    const int x = static_cast<int>(b % within.width);
    const int y = static_cast<int>(b / within.width);
    out.emplace_back(std::move(s), "(" + std::to_string(x) + "," + std::to_string(y) + ")");
  }
  return out;
}

GridSpace::GridSpace(int width, int height, Window window, int adjacency, bool windowAsSpace)
    : w_(width), h_(height), adj_(adjacency), was_(windowAsSpace), win_(window) {
  if (w_ <= 0 || h_ <= 0) throw ValidationError("grid dimensions must be positive");
  if (static_cast<long long>(w_) * h_ > 4'000'000)
    throw CapacityError("grid limited to 4M pixels");
  if (adj_ != 4 && adj_ != 8) throw ValidationError("adjacency must be 4 or 8");
  if (!(win_.x1 > win_.x0) || !(win_.y1 > win_.y0))
    throw ValidationError("window must have positive extent");
  dx_ = win_.dx(w_);
  dy_ = win_.dy(h_);
}

bool GridSpace::nearestPixel(Vec2 p, int& ix, int& iy) const {
  const double fx = (p.x - win_.x0) / dx_ - 0.5;
  const double fy = (p.y - win_.y0) / dy_ - 0.5;
  ix = static_cast<int>(std::lround(fx));
  iy = static_cast<int>(std::lround(fy));
  return ix >= 0 && ix < w_ && iy >= 0 && iy < h_;
}

GridRegion emptyRegion(const GridSpace& g) { return GridRegion(g.width(), g.height()); }

GridRegion fullRegion(const GridSpace& g) {
  GridRegion r(g.width(), g.height());
  r.bits.set();
  return r;
}

static void checkSame(const GridSpace& g, const GridRegion& s) {
  if (s.width != g.width() || s.height != g.height())
    throw ValidationError("region does not match grid dimensions");
}

GridRegion shifted(const GridSpace& g, const GridRegion& s, int dx, int dy, bool fill) {
  checkSame(g, s);
  const int w = g.width(), h = g.height();
  GridRegion out(w, h);
  if (std::abs(dx) >= w || std::abs(dy) >= h) {
    if (fill) out.bits.set();
    return out;
  }
  // Result(x, y) = S(x+dx, y+dy): one flat bitset shift, then overwrite the
  // columns/rows that either wrapped across a row boundary or pulled cells
  // from outside the window. Both effects are confined to the same stripes.
  const long long sb = static_cast<long long>(dy) * w + dx;
  if (sb >= 0)
    out.bits = s.bits >> static_cast<std::size_t>(sb);
  else
    out.bits = s.bits << static_cast<std::size_t>(-sb);
  auto fixColumn = [&](int x) {
    for (int y = 0; y < h; ++y) out.set(x, y, fill);
  };
  auto fixRow = [&](int y) {
    for (int x = 0; x < w; ++x) out.set(x, y, fill);
  };
  for (int x = w - dx; x < w; ++x) fixColumn(x);      // dx > 0
  for (int x = 0; x < -dx; ++x) fixColumn(x);         // dx < 0
  for (int y = h - dy; y < h; ++y) fixRow(y);         // dy > 0
  for (int y = 0; y < -dy; ++y) fixRow(y);            // dy < 0
  return out;
}

GridRegion interior(const GridSpace& g, const GridRegion& s) {
  checkSame(g, s);
  GridRegion out = s;
  // Out-of-window neighbours count as present exactly when the window is the
  // whole space.
  const bool fill = g.windowAsSpace();
  out.bits &= shifted(g, s, 1, 0, fill).bits;
  out.bits &= shifted(g, s, -1, 0, fill).bits;
  out.bits &= shifted(g, s, 0, 1, fill).bits;
  out.bits &= shifted(g, s, 0, -1, fill).bits;
  if (g.adjacency() == 8) {
    out.bits &= shifted(g, s, 1, 1, fill).bits;
    out.bits &= shifted(g, s, 1, -1, fill).bits;
    out.bits &= shifted(g, s, -1, 1, fill).bits;
    out.bits &= shifted(g, s, -1, -1, fill).bits;
  }
  if (!g.windowAsSpace()) {
    const int w = g.width(), h = g.height();
    for (int x = 0; x < w; ++x) {
      out.set(x, 0, false);
      out.set(x, h - 1, false);
    }
    for (int y = 0; y < h; ++y) {
      out.set(0, y, false);
      out.set(w - 1, y, false);
    }
  }
  return out;
}

GridRegion closure(const GridSpace& g, const GridRegion& s) {
  checkSame(g, s);
  GridRegion inv = s;
  inv.bits.flip();
  GridRegion out = interior(g, inv);
  out.bits.flip();
  return out;
}

bool isConnected(const GridSpace& g, const GridRegion& s) {
  checkSame(g, s);
  if (s.bits.none()) return true;
  const int w = g.width(), h = g.height();
  boost::dynamic_bitset<> seen(s.bits.size());
  std::deque<std::pair<int, int>> queue;
  {
    const std::size_t first = s.bits.find_first();
    seen.set(first);
    queue.emplace_back(static_cast<int>(first % w), static_cast<int>(first / w));
  }
  const int dx8[] = {1, -1, 0, 0, 1, 1, -1, -1};
  const int dy8[] = {0, 0, 1, -1, 1, -1, 1, -1};
  const int nd = (g.adjacency() == 8) ? 8 : 4;
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (int k = 0; k < nd; ++k) {
      const int nx = x + dx8[k], ny = y + dy8[k];
      if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
      const std::size_t bit = static_cast<std::size_t>(ny) * w + nx;
      if (seen.test(bit) || !s.bits.test(bit)) continue;
      seen.set(bit);
      queue.emplace_back(nx, ny);
    }
  }
  return seen == s.bits;
}

bool isRegularOpen(const GridSpace& g, const GridRegion& s) {
  checkSame(g, s);
  if (s.bits.none()) return false;
  return s == interior(g, closure(g, s));
}

std::string describeRegion(const GridRegion& s) {
  if (s.bits.none()) return "popcount=0";
  int x0 = s.width, x1 = -1, y0 = s.height, y1 = -1;
  for (std::size_t b = s.bits.find_first(); b != boost::dynamic_bitset<>::npos;
       b = s.bits.find_next(b)) {
    const int x = static_cast<int>(b % s.width);
    const int y = static_cast<int>(b / s.width);
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  return "popcount=" + std::to_string(s.count()) + " bbox=[" + std::to_string(x0) + ".." +
         std::to_string(x1) + "]x[" + std::to_string(y0) + ".." + std::to_string(y1) + "]";
}

}  // namespace prox
