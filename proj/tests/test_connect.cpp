#include <doctest.h>

#include "prox/connect.hpp"
#include "prox/shapes.hpp"

using namespace prox;

namespace {

FiniteSpace demo() { return FiniteSpace::generate({"a", "b", "c"}, {0b011, 0b110}); }

const StrongProximityKind kInterior{};  // interiorOverlap, both clauses on

GridRegion rectOn(const GridSpace& g, Vec2 a, Vec2 b) {
  return rasterize(g, makeRect(a, b, false));
}

}  // namespace

TEST_CASE("verify reports the first broken requirement") {
  const FiniteSpace sp = demo();
  const PointSet X = 0b111, ab = 0b011, bc = 0b110, ac = 0b101, c = 0b100;

  CHECK(!verifyDecomposition(kInterior, sp, X, {}).ok);
  CHECK(verifyDecomposition(kInterior, sp, X, std::vector<PointSet>{}).failure == "no pieces");
  CHECK(verifyDecomposition(kInterior, sp, X, {ab, PointSet{0}}).failure == "piece 2 is empty");
  CHECK(verifyDecomposition(kInterior, sp, X, {ab}).failure ==
        "pieces do not union to the target");
  CHECK(verifyDecomposition(kInterior, sp, X, {ac, bc}).failure == "piece 1 is not connected");
  CHECK(verifyDecomposition(kInterior, sp, X, {ab, c}).failure == "pieces 1 and 2 are not near");
  CHECK(verifyDecomposition(kInterior, sp, X, {ab, bc}).ok);
  const VerifyResult good = verifyDecomposition(kInterior, sp, X, {ab, bc});
  CHECK(good.failure.empty());
  CHECK(static_cast<bool>(good));
}

TEST_CASE("verify catches a disconnected interior on the grid") {
  const GridSpace g(24, 12, Window{0, 0, 24, 12});
  // dumbbell: two 4x4 blocks joined by a 1-pixel bridge; connected, but the
  // interior erodes the bridge away and falls apart
  GridRegion dumbbell = setUnion(g, rectOn(g, {2, 4}, {6, 8}), rectOn(g, {12, 4}, {16, 8}));
  for (int x = 6; x < 12; ++x) dumbbell.set(x, 6);
  REQUIRE(isConnected(g, dumbbell));
  REQUIRE(!isConnected(g, interior(g, dumbbell)));
  CHECK(verifyDecomposition(kInterior, g, dumbbell, {dumbbell}).failure ==
        "interior of piece 1 is not connected");
}

TEST_CASE("search returns the lexicographically first decomposition") {
  const FiniteSpace sp = demo();
  const PointSet X = 0b111, ab = 0b011, bc = 0b110, b = 0b010;

  const auto found = findDecomposition(kInterior, sp, X, {ab, bc, b});
  REQUIRE(found.has_value());
  CHECK(*found == std::vector<int>{0, 1});

  // reordering the candidates changes which indices come out, still lex-first
  const auto reordered = findDecomposition(kInterior, sp, X, {bc, ab, b});
  REQUIRE(reordered.has_value());
  CHECK(*reordered == std::vector<int>{0, 1});  // bc then ab

  // duplicates collapse onto the first occurrence
  const auto dup = findDecomposition(kInterior, sp, X, {ab, ab, bc});
  REQUIRE(dup.has_value());
  CHECK(*dup == std::vector<int>{0, 2});

  CHECK(!findDecomposition(kInterior, sp, 0b101, {ab, bc}).has_value());
  CHECK_THROWS_AS(findDecomposition(kInterior, sp, X, {ab, bc}, 0), CapacityError);
}

TEST_CASE("search capacity counts usable candidates only") {
  const GridSpace g(42, 8, Window{0, 0, 42, 8});
  const GridRegion whole = fullRegion(g);
  std::vector<GridRegion> cands;
  for (int i = 0; i < 13; ++i) cands.push_back(rectOn(g, {i * 3.0, 0}, {i * 3.0 + 6, 8}));
  CHECK_THROWS_AS(findDecomposition(kInterior, g, whole, cands), CapacityError);
  // dropping one and padding with an empty is fine: empties are not usable
  cands.resize(12);
  GridRegion target = emptyRegion(g);
  for (const GridRegion& c : cands) target = setUnion(g, target, c);
  cands.push_back(emptyRegion(g));
  const auto found = findDecomposition(kInterior, g, target, cands);
  REQUIRE(found.has_value());
  CHECK(found->size() == 12);  // every slab contributes fresh columns
}

TEST_CASE("grid decompositions: overlap glues, separation starves the search") {
  const GridSpace g(32, 16, Window{0, 0, 32, 16});
  const GridRegion left = rectOn(g, {2, 2}, {14, 14});
  const GridRegion right = rectOn(g, {10, 2}, {26, 14});
  const GridRegion both = setUnion(g, left, right);
  CHECK(verifyDecomposition(kInterior, g, both, {left, right}).ok);
  CHECK(findDecomposition(kInterior, g, both, {left, right}).has_value());

  const GridRegion farRight = rectOn(g, {20, 2}, {30, 14});
  const GridRegion split = setUnion(g, left, farRight);
  CHECK(!findDecomposition(kInterior, g, split, {left, farRight}).has_value());
  CHECK(deltaImpliesConnected(kInterior, g, both, {left, right}));
  CHECK_THROWS_AS(deltaImpliesConnected(kInterior, g, split, {left, farRight}),
                  PreconditionError);
}

TEST_CASE("closures of a regular-open decomposition still decompose the closure") {
  const GridSpace g(32, 16, Window{0, 0, 32, 16});
  const GridRegion left = rectOn(g, {2, 2}, {14, 14});
  const GridRegion right = rectOn(g, {10, 2}, {26, 14});
  CHECK(closureTheoremCheck(kInterior, g, std::vector<GridRegion>{left, right}));

  // closing fills a one-pixel hole, so a punctured block is not regular open
  GridRegion donut = emptyRegion(g);
  for (int x = 6; x <= 8; ++x)
    for (int y = 6; y <= 8; ++y) donut.set(x, y);
  donut.set(7, 7, false);
  CHECK(!isRegularOpen(g, donut));
  CHECK_THROWS_AS(closureTheoremCheck(kInterior, g, std::vector<GridRegion>{left, donut}),
                  PreconditionError);
}

TEST_CASE("between theorem: anything between the union and its closure") {
  const GridSpace g(32, 16, Window{0, 0, 32, 16});
  const GridRegion left = rectOn(g, {2, 2}, {14, 14});
  const GridRegion right = rectOn(g, {10, 2}, {26, 14});
  const GridRegion both = setUnion(g, left, right);
  CHECK(betweenTheoremCheck(kInterior, g, {left, right}, closure(g, both)));
  CHECK(betweenTheoremCheck(kInterior, g, {left, right}, both));
  const GridRegion tooBig = fullRegion(g);
  CHECK_THROWS_AS(betweenTheoremCheck(kInterior, g, {left, right}, tooBig), PreconditionError);
}

TEST_CASE("countable criterion needs one open witness per junction") {
  const FiniteSpace sp = demo();
  const PointSet ab = 0b011, bc = 0b110, b = 0b010;
  std::vector<CountableWitness<PointSet>> ws{{b, b}};
  CHECK(countableCriterionCheck(kInterior, sp, {ab, bc}, ws));

  // wrong number of witnesses
  CHECK_THROWS_AS(countableCriterionCheck(kInterior, sp, {ab, bc},
                                          std::vector<CountableWitness<PointSet>>{}),
                  PreconditionError);
  // witness open not inside the overlap of the adjacent pieces
  std::vector<CountableWitness<PointSet>> bad{{b, ab}};
  CHECK_THROWS_AS(countableCriterionCheck(kInterior, sp, {ab, bc}, bad), PreconditionError);

  // grid flavour, where "open" means regular open: a punctured block is not
  const GridSpace g(24, 12, Window{0, 0, 24, 12});
  const GridRegion left = rectOn(g, {0, 0}, {14, 12});
  const GridRegion right = rectOn(g, {10, 0}, {24, 12});
  GridRegion pt = emptyRegion(g);
  pt.set(12, 6);
  GridRegion block = rectOn(g, {11, 4}, {13, 8});
  std::vector<CountableWitness<GridRegion>> gws{{pt, block}};
  CHECK(countableCriterionCheck(kInterior, g, {left, right}, gws));
  GridRegion holed = emptyRegion(g);
  for (int x = 11; x <= 13; ++x)
    for (int y = 5; y <= 7; ++y) holed.set(x, y);
  holed.set(12, 6, false);
  GridRegion edge = emptyRegion(g);
  edge.set(11, 5);
  std::vector<CountableWitness<GridRegion>> notOpen{{edge, holed}};
  CHECK_THROWS_AS(countableCriterionCheck(kInterior, g, {left, right}, notOpen),
                  PreconditionError);
}

TEST_CASE("strong chains walk the cover") {
  const FiniteSpace sp = demo();
  const PointSet ab = 0b011, bc = 0b110, a = 0b001, c = 0b100;

  const auto chain = findStrongChain(kInterior, sp, {ab, bc}, a, c);
  REQUIRE(chain.has_value());
  CHECK(*chain == std::vector<int>{0, 1});

  // endpoints in the same link: the chain is that single link
  const auto self = findStrongChain(kInterior, sp, {ab, bc}, a, a);
  REQUIRE(self.has_value());
  CHECK(*self == std::vector<int>{0});

  // a discrete cover of singletons has no near links at all
  const FiniteSpace disc = FiniteSpace::generate({"a", "b", "c"}, {0b001, 0b010, 0b100});
  CHECK(!findStrongChain(kInterior, disc, {0b001, 0b010, 0b100}, 0b001, 0b100).has_value());

  CHECK_THROWS_AS(findStrongChain(kInterior, sp, {ab, bc}, ab, c), ValidationError);
  // {a,c} is not open, so it cannot serve as a cover element
  CHECK_THROWS_AS(findStrongChain(kInterior, sp, {ab, bc, 0b101}, a, c), PreconditionError);
  // cover must reach every point
  CHECK_THROWS_AS(findStrongChain(kInterior, sp, {ab}, a, a), PreconditionError);
  CHECK_THROWS_AS(findStrongChain(kInterior, sp, {}, a, c), PreconditionError);
}
