#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prox/maps.hpp"
#include "prox/proximity.hpp"

namespace prox {

constexpr int kMaxHyperPoints = 5;
constexpr std::size_t kMaxHyperFamily = std::size_t{1} << 21;

// How an open A contributes miss sets to the subbase: A-plus keeps the
// members contained in A, A-plus-plus keeps the members far (in the plain
// proximity) from the complement of A. On finite spaces the two agree for
// open A; both are kept so that can be demonstrated rather than assumed.
enum class MissVariant { plus, plusPlus };

// Subset of the hyperspace carrier, one bit per member index.
using HyperSet = std::uint32_t;

struct HyperSpace {
  std::vector<PointSet> members;         // nonempty closed sets, ascending
  std::vector<std::string> memberNames;  // "{a,b}" style
  std::vector<HyperSet> subbase;         // construction order, deduplicated
  std::vector<HyperSet> base;            // ascending
  std::vector<HyperSet> opens;           // ascending
};

// Members strongly near the open V.
HyperSet hyperHitSet(const StrongProximityKind& k, const FiniteSpace& sp,
                     const std::vector<PointSet>& members, PointSet v);

// Members missing the complement of the open A, in the chosen sense.
HyperSet hyperMissSet(const PlainProximity& miss, MissVariant variant, const FiniteSpace& sp,
                      const std::vector<PointSet>& members, PointSet a);

// Hyperspace of nonempty closed sets with the hit-and-miss topology: hit sets
// of every nonempty open plus miss sets of every open, a base of finite
// intersections and the opens as arbitrary unions. Both closure stages stop
// with a CapacityError beyond 2^21 sets.
HyperSpace buildHyper(const StrongProximityKind& k, const PlainProximity& miss,
                      MissVariant variant, const FiniteSpace& sp);

// Theorem harness: a bijective strong proximal equivalence between spaces
// whose relations are compatible with their topologies induces a
// homeomorphism of the hyperspaces (plus misses). Preconditions -
// compatibility on both sides, bijectivity, the exhaustive equivalence - are
// enforced with PreconditionError; the returned flag is the comparison of the
// induced hyperspace topologies.
bool homeomorphismTheoremCheck(const StrongProximityKind& kx, const FiniteSpace& X,
                               const StrongProximityKind& ky, const FiniteSpace& Y,
                               const TableMap& f);

}  // namespace prox
