#include <doctest.h>

#include <random>

#include "prox/sets.hpp"
#include "prox/shapes.hpp"

using namespace prox;

namespace {

// 8x8 unit-window grid used by most raster tests.
GridSpace tiny(int adjacency = 8, bool windowAsSpace = true) {
  return GridSpace(8, 8, Window{0, 0, 8, 8}, adjacency, windowAsSpace);
}

GridRegion from(const GridSpace& g, std::initializer_list<std::pair<int, int>> px) {
  GridRegion r = emptyRegion(g);
  for (auto [x, y] : px) r.set(x, y);
  return r;
}

}  // namespace

TEST_CASE("grid construction validates its inputs") {
  CHECK_THROWS_AS(GridSpace(0, 8, Window{0, 0, 1, 1}), ValidationError);
  CHECK_THROWS_AS(GridSpace(8, 8, Window{0, 0, 1, 1}, 6), ValidationError);
  CHECK_THROWS_AS(GridSpace(8, 8, Window{1, 0, 0, 1}), ValidationError);
  CHECK_THROWS_AS(GridSpace(4000, 4000, Window{0, 0, 1, 1}), CapacityError);
  CHECK_NOTHROW(GridSpace(2000, 2000, Window{0, 0, 1, 1}));
}

TEST_CASE("pixel centres and nearest pixel round-trip") {
  const GridSpace g(10, 5, Window{-1, -1, 1, 1});
  CHECK(g.dx() == doctest::Approx(0.2));
  CHECK(g.dy() == doctest::Approx(0.4));
  for (int iy = 0; iy < 5; ++iy)
    for (int ix = 0; ix < 10; ++ix) {
      int jx = -1, jy = -1;
      REQUIRE(g.nearestPixel(g.pixelCenter(ix, iy), jx, jy));
      CHECK(jx == ix);
      CHECK(jy == iy);
    }
  int ix, iy;
  CHECK(!g.nearestPixel({1.5, 0}, ix, iy));
  CHECK(!g.nearestPixel({0, -1.01}, ix, iy));
  // the exact min corner is half a pixel from any centre and rounds out
  CHECK(!g.nearestPixel({-1, -1}, ix, iy));
  CHECK(g.nearestPixel({-0.99, -0.99}, ix, iy));
  CHECK(ix == 0);
  CHECK(iy == 0);
}

TEST_CASE("shifted samples the source at an offset") {
  const GridSpace g = tiny();
  const GridRegion r = from(g, {{1, 1}, {2, 1}, {1, 2}});
  // Result(x, y) = S(x+dx, y+dy): positive dx pulls content leftwards
  const GridRegion left = shifted(g, r, 1, 0, false);
  CHECK(left == from(g, {{0, 1}, {1, 1}, {0, 2}}));
  const GridRegion up = shifted(g, r, 0, -2, false);
  CHECK(up == from(g, {{1, 3}, {2, 3}, {1, 4}}));
  // bits pulled past the edge vanish
  const GridRegion far = shifted(g, r, 2, 0, false);
  CHECK(far == from(g, {{0, 1}}));
  // fill=true floods the band pulled in from outside the window
  const GridRegion filled = shifted(g, emptyRegion(g), 3, 0, true);
  CHECK(filled.count() == 3u * 8);
  for (int y = 0; y < 8; ++y)
    for (int x = 5; x < 8; ++x) CHECK(filled.test(x, y));
  // shifts at least as large as the grid clear (or flood) everything
  CHECK(shifted(g, fullRegion(g), 8, 0, false).count() == 0);
  CHECK(shifted(g, emptyRegion(g), 0, -9, true).count() == 64);
}

TEST_CASE("interior depends on the adjacency stencil") {
  // plus-shape: centre plus the four axis neighbours
  const GridSpace g8 = tiny(8);
  const GridSpace g4 = tiny(4);
  const GridRegion plus = from(g8, {{3, 3}, {2, 3}, {4, 3}, {3, 2}, {3, 4}});
  CHECK(interior(g8, plus).count() == 0);     // 3x3 stencil never fits
  CHECK(interior(g4, plus) == from(g4, {{3, 3}}));  // plus stencil fits at the centre
  const GridRegion block = from(g8, {{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {4, 3},
                                     {2, 4}, {3, 4}, {4, 4}});
  CHECK(interior(g8, block) == from(g8, {{3, 3}}));
  CHECK(closure(g8, from(g8, {{3, 3}})) == block);
}

TEST_CASE("window-as-space toggles the border behaviour") {
  const GridSpace clipped = tiny(8, true);
  const GridSpace bordered = tiny(8, false);
  CHECK(interior(clipped, fullRegion(clipped)) == fullRegion(clipped));
  // with an ambient plane beyond the window, border pixels are not interior
  const GridRegion inner = interior(bordered, fullRegion(bordered));
  CHECK(inner.count() == 6u * 6);
  CHECK(!inner.test(0, 0));
  CHECK(inner.test(1, 1));
}

TEST_CASE("closure is the bitwise dual of interior on random regions") {
  const GridSpace g(16, 16, Window{0, 0, 16, 16});
  std::mt19937 rng(7);
  for (int round = 0; round < 20; ++round) {
    GridRegion s = emptyRegion(g);
    for (int b = 0; b < 256; ++b)
      if (rng() & 1) s.bits.set(b);
    GridRegion viaDual = setComplement(g, interior(g, setComplement(g, s)));
    CHECK(closure(g, s) == viaDual);
    CHECK(subsetOf(g, interior(g, s), s));
    CHECK(subsetOf(g, s, closure(g, s)));
    // erosion/dilation are monotone but (unlike true topology) not idempotent
    CHECK(subsetOf(g, interior(g, interior(g, s)), interior(g, s)));
    CHECK(subsetOf(g, closure(g, s), closure(g, closure(g, s))));
  }
}

TEST_CASE("grid connectivity follows the adjacency") {
  const GridSpace g8 = tiny(8);
  const GridSpace g4 = tiny(4);
  const GridRegion diag = from(g8, {{1, 1}, {2, 2}});
  CHECK(isConnected(g8, diag));
  CHECK(!isConnected(g4, diag));
  const GridRegion ell = from(g8, {{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}});
  CHECK(isConnected(g8, ell));
  CHECK(isConnected(g4, ell));
  CHECK(!isConnected(g8, from(g8, {{0, 0}, {5, 5}})));
  CHECK(isConnected(g8, emptyRegion(g8)));
}

TEST_CASE("regular openness on rasters") {
  const GridSpace g = tiny();
  const GridRegion solid = from(g, {{2, 2}, {3, 2}, {2, 3}, {3, 3}});
  CHECK(isRegularOpen(g, solid));
  // int(cl(.)) is a morphological closing: thin lines survive it, but this
  // one's closure touches the window edge, where the interior gains (0,4)
  const GridRegion line = from(g, {{1, 4}, {2, 4}, {3, 4}, {4, 4}});
  CHECK(!isRegularOpen(g, line));
  // a one-pixel hole gets filled by the closing, so the donut is out too
  GridRegion donut = from(g, {{2, 2}, {3, 2}, {4, 2}, {2, 3}, {4, 3}, {2, 4}, {3, 4}, {4, 4}});
  CHECK(!isRegularOpen(g, donut));
  CHECK(isRegularOpen(g, from(g, {{4, 4}})));  // a lone pixel is closing-invariant
  CHECK(!isRegularOpen(g, emptyRegion(g)));
  CHECK(describeRegion(solid) == "popcount=4 bbox=[2..3]x[2..3]");
  CHECK(describeRegion(emptyRegion(g)) == "popcount=0");
}

TEST_CASE("shape membership is exact") {
  const Shape closedDisk = makeDisk({3, 4}, 5, true);
  const Shape openDisk = makeDisk({3, 4}, 5, false);
  CHECK(contains(closedDisk, {6, 8}));    // 3-4-5 triangle: on the boundary
  CHECK(!contains(openDisk, {6, 8}));
  CHECK(contains(openDisk, {3, 4}));
  CHECK(!contains(closedDisk, {3, 9.001}));

  const Shape tri = makeTriangle({0, 0}, {4, 0}, {0, 4}, true);
  const Shape triFlipped = makeTriangle({0, 0}, {0, 4}, {4, 0}, true);  // opposite winding
  for (Vec2 p : {Vec2{1, 1}, Vec2{2, 2}, Vec2{0, 0}, Vec2{3.5, 0.2}}) {
    CHECK(contains(tri, p) == contains(triFlipped, p));
    CHECK(contains(tri, p));
  }
  const Shape triOpen = makeTriangle({0, 0}, {4, 0}, {0, 4}, false);
  CHECK(!contains(triOpen, {2, 2}));   // hypotenuse
  CHECK(contains(triOpen, {1, 1}));
  CHECK_THROWS_AS(makeTriangle({0, 0}, {1, 1}, {2, 2}, true), ValidationError);

  const Shape box = makeRect({5, 7}, {1, 2}, true);  // corners in any order
  CHECK(contains(box, {1, 2}));
  CHECK(contains(box, {5, 7}));
  CHECK(contains(box, {3, 3}));
  CHECK(!contains(box, {0.999, 3}));
  const Shape boxOpen = makeRect({1, 2}, {5, 7}, false);
  CHECK(!contains(boxOpen, {1, 3}));
  CHECK(contains(boxOpen, {1.001, 2.001}));

  const Shape u = makeUnion({closedDisk, box});
  CHECK(contains(u, {6, 8}));
  CHECK(contains(u, {1, 2}));
  const Shape outside = makeComplement(closedDisk);
  CHECK(contains(outside, {20, 20}));
  CHECK(!contains(outside, {3, 4}));
}

TEST_CASE("rasterisation samples pixel centres") {
  const GridSpace g = tiny();
  // disk of radius 1.1 around the centre of pixel (3,3), which is (3.5,3.5)
  const GridRegion r = rasterize(g, makeDisk({3.5, 3.5}, 1.1, true));
  CHECK(r == from(g, {{3, 3}, {2, 3}, {4, 3}, {3, 2}, {3, 4}}));
  CHECK(rasterize(g, makeDisk({100, 100}, 1, true)).count() == 0);
  CHECK(rasterize(g, makeComplement(makeDisk({100, 100}, 1, true))).count() == 64);
}
