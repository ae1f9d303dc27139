#pragma once

#include <string>
#include <utility>
#include <vector>

#include "prox/finite_space.hpp"
#include "prox/grid.hpp"

// Uniform set vocabulary over both backends so relation/theorem code can be
// written once. FiniteSpace uses PointSet (bitmask); GridSpace uses
// GridRegion.

namespace prox {

// ---- finite backend ----

inline bool isEmptySet(const FiniteSpace&, PointSet s) { return s == 0; }
inline bool isWholeSet(const FiniteSpace& sp, PointSet s) { return s == sp.carrier(); }
inline bool isSingletonSet(const FiniteSpace&, PointSet s) { return popcount(s) == 1; }
inline bool setsEqual(const FiniteSpace&, PointSet a, PointSet b) { return a == b; }
inline bool setsIntersect(const FiniteSpace&, PointSet a, PointSet b) { return (a & b) != 0; }
inline bool subsetOf(const FiniteSpace&, PointSet a, PointSet b) { return (a & ~b) == 0; }
inline PointSet setUnion(const FiniteSpace&, PointSet a, PointSet b) { return a | b; }
inline PointSet setIntersect(const FiniteSpace&, PointSet a, PointSet b) { return a & b; }
inline PointSet setMinus(const FiniteSpace&, PointSet a, PointSet b) { return a & ~b; }
inline PointSet setComplement(const FiniteSpace& sp, PointSet a) { return sp.carrier() & ~a; }
inline PointSet emptySetOf(const FiniteSpace&) { return 0; }
inline PointSet wholeSetOf(const FiniteSpace& sp) { return sp.carrier(); }
inline PointSet interior(const FiniteSpace& sp, PointSet s) { return sp.interior(s); }
inline PointSet closure(const FiniteSpace& sp, PointSet s) { return sp.closure(s); }
inline bool isConnected(const FiniteSpace& sp, PointSet s) { return sp.isConnected(s); }
inline bool isRegularOpen(const FiniteSpace& sp, PointSet s) { return sp.isRegularOpen(s); }
inline std::string describeSet(const FiniteSpace& sp, PointSet s) { return sp.describe(s); }

// Cover elements must be open; on the finite backend that is literal.
inline bool isCoverOpen(const FiniteSpace& sp, PointSet s) { return sp.isOpen(s); }

// Singletons of every point of `within`, with printable names.
std::vector<std::pair<PointSet, std::string>> elementSamples(const FiniteSpace& sp,
                                                             PointSet within, int cap);

// ---- grid backend ----

inline bool isEmptySet(const GridSpace&, const GridRegion& s) { return s.bits.none(); }
inline bool isWholeSet(const GridSpace&, const GridRegion& s) { return s.bits.all(); }
inline bool isSingletonSet(const GridSpace&, const GridRegion& s) { return s.count() == 1; }
inline bool setsEqual(const GridSpace&, const GridRegion& a, const GridRegion& b) {
  return a.bits == b.bits;
}
inline bool setsIntersect(const GridSpace&, const GridRegion& a, const GridRegion& b) {
  return a.bits.intersects(b.bits);
}
inline bool subsetOf(const GridSpace&, const GridRegion& a, const GridRegion& b) {
  return a.bits.is_subset_of(b.bits);
}
inline GridRegion setUnion(const GridSpace&, GridRegion a, const GridRegion& b) {
  a.bits |= b.bits;
  return a;
}
inline GridRegion setIntersect(const GridSpace&, GridRegion a, const GridRegion& b) {
  a.bits &= b.bits;
  return a;
}
inline GridRegion setMinus(const GridSpace&, GridRegion a, const GridRegion& b) {
  a.bits -= b.bits;
  return a;
}
inline GridRegion setComplement(const GridSpace&, GridRegion a) {
  a.bits.flip();
  return a;
}
inline GridRegion emptySetOf(const GridSpace& g) { return emptyRegion(g); }
inline GridRegion wholeSetOf(const GridSpace& g) { return fullRegion(g); }
inline std::string describeSet(const GridSpace&, const GridRegion& s) { return describeRegion(s); }

// Digital openness gate: cover elements and open-map samples count as open
// when they are regular open on the lattice.
inline bool isCoverOpen(const GridSpace& g, const GridRegion& s) { return isRegularOpen(g, s); }

std::vector<std::pair<GridRegion, std::string>> elementSamples(const GridSpace& g,
                                                               const GridRegion& within, int cap);

}  // namespace prox
