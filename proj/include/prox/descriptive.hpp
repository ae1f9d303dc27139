#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prox/finite_space.hpp"
#include "prox/proximity.hpp"
#include "prox/shapes.hpp"

namespace prox {

// Descriptors are colour subsets over three channels: bit 0 = g, 1 = r, 2 = b.
std::uint8_t parseColors(const std::string& s);  // "gr" -> 3
std::string colorsName(std::uint8_t d);          // 3 -> "gr", 0 -> "none"

// The eight descriptor values topologised by the fixed probe base; shared,
// built once.
const FiniteSpace& descriptorSpace();

// A closed cell of a picture tessellation carrying one colour set.
struct ColoredCell {
  std::string name;
  Shape shape;
  std::uint8_t colors = 0;
};

struct Tessellation {
  std::vector<ColoredCell> cells;

  // Union of the colours of every cell containing p; cells are closed, so
  // points on shared edges pick up both sides.
  std::uint8_t descriptorOf(Vec2 p) const;
};

// Descriptor values attained at the centres of the set pixels, as a subset of
// the descriptor carrier.
PointSet descriptorImage(const Tessellation& t, const GridSpace& g, const GridRegion& r);

// A picture region observed at one instant, assigned to the cell it lies in.
struct TimedRegion {
  std::string name;
  int instant = 0;
  std::string cell;
  GridRegion region;
};

struct DescriptivePair {
  std::string a, b;
  bool sameInstant = true;
  bool spatiallyNear = false;
  bool descriptivelyNear = false;
  bool ok = true;
  std::string note;
};

struct DescriptiveReport {
  bool ok = true;
  std::string witness;  // first pair where spatial nearness lost its descriptive shadow
  std::vector<DescriptivePair> pairs;
  std::vector<std::pair<std::string, PointSet>> images;  // per region, in input order
};

// Spatially near co-temporal regions must have strongly near descriptor
// images. Pairs from different instants are recorded but not compared.
// Validates that every region is nonempty, lies inside its declared cell and
// that no two regions share a cell at the same instant.
DescriptiveReport descriptiveSpcCheck(const StrongProximityKind& spatial,
                                      const StrongProximityKind& descriptive, const GridSpace& g,
                                      const Tessellation& t,
                                      const std::vector<TimedRegion>& family);

}  // namespace prox
