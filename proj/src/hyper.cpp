#include "prox/hyper.hpp"

#include <algorithm>
#include <unordered_set>

namespace prox {

namespace {

// BFS closure of the generators under one binary operation, deterministic
// (elements are combined with the original generators in listed order).
std::vector<HyperSet> closeUnder(const std::vector<HyperSet>& gens, bool unionOp,
                                 const char* what) {
  std::vector<HyperSet> all;
  std::unordered_set<HyperSet> seen;
  for (HyperSet g : gens)
    if (seen.insert(g).second) all.push_back(g);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const HyperSet a = all[i];
    for (HyperSet g : gens) {
      const HyperSet v = unionOp ? (a | g) : (a & g);
      if (seen.insert(v).second) {
        all.push_back(v);
        if (all.size() > kMaxHyperFamily)
          throw CapacityError(std::string("hyperspace ") + what + " family exceeds 2^21 sets");
      }
    }
  }
  return all;
}

}  // namespace

HyperSet hyperHitSet(const StrongProximityKind& k, const FiniteSpace& sp,
                     const std::vector<PointSet>& members, PointSet v) {
  HyperSet h = 0;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (stronglyNear(k, sp, members[i], v)) h |= (HyperSet{1} << i);
  return h;
}

HyperSet hyperMissSet(const PlainProximity& miss, MissVariant variant, const FiniteSpace& sp,
                      const std::vector<PointSet>& members, PointSet a) {
  const PointSet rest = sp.carrier() & ~a;
  HyperSet h = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const bool in = variant == MissVariant::plus ? (members[i] & ~a) == 0
                                                 : !plainNear(miss, sp, members[i], rest);
    if (in) h |= (HyperSet{1} << i);
  }
  return h;
}

HyperSpace buildHyper(const StrongProximityKind& k, const PlainProximity& miss,
                      MissVariant variant, const FiniteSpace& sp) {
  if (sp.size() > kMaxHyperPoints)
    throw CapacityError("hyperspaces are limited to carriers of " +
                        std::to_string(kMaxHyperPoints) + " points");
  HyperSpace h;
  for (PointSet s = 1; s <= sp.carrier(); ++s)
    if ((s & ~sp.carrier()) == 0 && sp.isOpen(sp.carrier() & ~s)) {
      h.members.push_back(s);
      h.memberNames.push_back(sp.describe(s));
    }

  const HyperSet full =
      h.members.size() >= 32 ? ~HyperSet{0} : (HyperSet{1} << h.members.size()) - 1;
  auto push = [&](HyperSet s) {
    if (std::find(h.subbase.begin(), h.subbase.end(), s) == h.subbase.end())
      h.subbase.push_back(s);
  };
  for (PointSet v : sp.opens())
    if (v != 0) push(hyperHitSet(k, sp, h.members, v));
  for (PointSet a : sp.opens()) push(hyperMissSet(miss, variant, sp, h.members, a));

  std::vector<HyperSet> gens = h.subbase;
  gens.push_back(full);  // the empty intersection
  h.base = closeUnder(gens, false, "base");

  std::vector<HyperSet> bgens = h.base;
  bgens.push_back(0);  // the empty union
  h.opens = closeUnder(bgens, true, "opens");

  std::sort(h.base.begin(), h.base.end());
  std::sort(h.opens.begin(), h.opens.end());
  return h;
}

bool homeomorphismTheoremCheck(const StrongProximityKind& kx, const FiniteSpace& X,
                               const StrongProximityKind& ky, const FiniteSpace& Y,
                               const TableMap& f) {
  if (!isCompatible(kx, X).compatible)
    throw PreconditionError("source relation is not compatible with its topology");
  if (!isCompatible(ky, Y).compatible)
    throw PreconditionError("target relation is not compatible with its topology");
  const int n = X.size();
  if (Y.size() != n || static_cast<int>(f.table.size()) != n)
    throw PreconditionError("map must be a bijection between carriers of equal size");
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    const int y = f.table[static_cast<std::size_t>(x)];
    if (y < 0 || y >= n || hits[static_cast<std::size_t>(y)]++)
      throw PreconditionError("map is not a bijection");
  }

  std::vector<PointSet> img(std::size_t{1} << n);
  for (PointSet s = 0; s <= X.carrier(); ++s) img[s] = applyTable(f, X, s, n);
  for (PointSet a = 0; a <= X.carrier(); ++a)
    for (PointSet b = 0; b <= X.carrier(); ++b)
      if (stronglyNear(kx, X, a, b) != stronglyNear(ky, Y, img[a], img[b]))
        throw PreconditionError("map is not a strong proximal equivalence on " + X.describe(a) +
                                " / " + X.describe(b));

  const HyperSpace hx = buildHyper(kx, PlainProximity{}, MissVariant::plus, X);
  const HyperSpace hy = buildHyper(ky, PlainProximity{}, MissVariant::plus, Y);
  if (hx.members.size() != hy.members.size()) return false;

  std::vector<int> remap(hx.members.size());
  for (std::size_t i = 0; i < hx.members.size(); ++i) {
    const PointSet m = img[hx.members[i]];
    const auto it = std::lower_bound(hy.members.begin(), hy.members.end(), m);
    if (it == hy.members.end() || *it != m) return false;  // image is not closed over there
    remap[i] = static_cast<int>(it - hy.members.begin());
  }
  std::vector<HyperSet> mapped;
  mapped.reserve(hx.opens.size());
  for (HyperSet o : hx.opens) {
    HyperSet r = 0;
    for (std::size_t i = 0; i < hx.members.size(); ++i)
      if ((o >> i) & 1u) r |= (HyperSet{1} << remap[i]);
    mapped.push_back(r);
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == hy.opens;
}

}  // namespace prox
