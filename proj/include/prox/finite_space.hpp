#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prox/errors.hpp"

namespace prox {

// Subset of a finite carrier, one bit per point. Carriers are capped at 16
// points, so 32 bits are plenty.
using PointSet = std::uint32_t;

inline int popcount(PointSet s) { return __builtin_popcount(s); }

// A finite topological space: named points plus the full lattice of opens,
// realised through per-point minimal neighbourhoods.
class FiniteSpace {
 public:
  static constexpr int kMaxPoints = 16;

  // Generates the topology from an arbitrary subbasis: all unions of finite
  // intersections of basis elements, together with the empty set and the
  // whole carrier.
  static FiniteSpace generate(const std::vector<std::string>& pointNames,
                              const std::vector<PointSet>& basis);

  // Wraps an existing family of opens (must already be a topology).
  static FiniteSpace fromOpens(const std::vector<std::string>& pointNames,
                               const std::vector<PointSet>& opens);

  int size() const { return n_; }
  PointSet carrier() const { return full_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<PointSet>& opens() const { return opens_; }

  // Minimal open neighbourhood of point x.
  PointSet minNbhd(int x) const { return minNbhd_[x]; }

  bool isOpen(PointSet s) const { return openFlag_[s]; }

  PointSet interior(PointSet s) const {
    PointSet r = 0;
    for (int x = 0; x < n_; ++x)
      if ((s >> x) & 1u)
        if ((minNbhd_[x] & ~s) == 0) r |= (1u << x);
    return r;
  }

  PointSet closure(PointSet s) const { return full_ & ~interior(full_ & ~s); }

  // Connectivity of the subspace S: flood fill on the specialisation graph,
  // where x ~ y when one lies in the other's minimal neighbourhood cut to S.
  bool isConnected(PointSet s) const;

  // Nonempty and equal to the interior of its own closure.
  bool isRegularOpen(PointSet s) const {
    return s != 0 && s == interior(closure(s));
  }

  int indexOf(const std::string& name) const;  // -1 when absent
  std::string describe(PointSet s) const;      // "{a,b}" style

 private:
  int n_ = 0;
  PointSet full_ = 0;
  std::vector<std::string> names_;
  std::vector<PointSet> opens_;     // ascending, deduplicated
  std::vector<PointSet> minNbhd_;   // per point
  std::vector<bool> openFlag_;      // indexed by subset value

  void finishFromMinNbhds();
};

// All labelled topologies on n points (n <= 4), each given as its sorted
// family of opens. Deterministic ascending enumeration order.
std::vector<std::vector<PointSet>> enumerateTopologies(int n);

}  // namespace prox
