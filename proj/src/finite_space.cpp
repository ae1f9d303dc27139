#include "prox/finite_space.hpp"

#include <algorithm>

#include "prox/sets.hpp"

namespace prox {

std::vector<std::pair<PointSet, std::string>> elementSamples(const FiniteSpace& sp,
                                                             PointSet within, int cap) {
  std::vector<std::pair<PointSet, std::string>> out;
  for (int x = 0; x < sp.size() && static_cast<int>(out.size()) < cap; ++x)
    if ((within >> x) & 1u)
      out.emplace_back(static_cast<PointSet>(1u << x), sp.names()[x]);
  return out;
}

static void checkPointCount(std::size_t n) {
  if (n == 0) throw ValidationError("finite space needs at least one point");
  if (n > FiniteSpace::kMaxPoints)
    throw CapacityError("finite space limited to 16 points, got " + std::to_string(n));
}

FiniteSpace FiniteSpace::generate(const std::vector<std::string>& pointNames,
                                  const std::vector<PointSet>& basis) {
  checkPointCount(pointNames.size());
  FiniteSpace sp;
  sp.n_ = static_cast<int>(pointNames.size());
  sp.full_ = static_cast<PointSet>((1u << sp.n_) - 1u);
  sp.names_ = pointNames;
  for (PointSet b : basis)
    if ((b & ~sp.full_) != 0) throw ValidationError("basis element mentions unknown point");

  // Minimal neighbourhood of x: intersection of the basis elements holding x,
  // or the whole carrier when none does. Opens are exactly the sets closed
  // under these neighbourhoods.
  sp.minNbhd_.assign(sp.n_, 0);
  for (int x = 0; x < sp.n_; ++x) {
    PointSet u = sp.full_;
    for (PointSet b : basis)
      if ((b >> x) & 1u) u &= b;
    sp.minNbhd_[x] = u;
  }
  sp.finishFromMinNbhds();
  return sp;
}

FiniteSpace FiniteSpace::fromOpens(const std::vector<std::string>& pointNames,
                                   const std::vector<PointSet>& opens) {
  checkPointCount(pointNames.size());
  FiniteSpace sp;
  sp.n_ = static_cast<int>(pointNames.size());
  sp.full_ = static_cast<PointSet>((1u << sp.n_) - 1u);
  sp.names_ = pointNames;

  std::vector<bool> flag(1u << sp.n_, false);
  for (PointSet o : opens) {
    if ((o & ~sp.full_) != 0) throw ValidationError("open mentions unknown point");
    flag[o] = true;
  }
  if (!flag[0] || !flag[sp.full_])
    throw ValidationError("opens must contain the empty set and the carrier");
  for (PointSet a = 0; a <= sp.full_; ++a) {
    if (!flag[a]) continue;
    for (PointSet b = a; b <= sp.full_; ++b) {
      if (!flag[b]) continue;
      if (!flag[a | b] || !flag[a & b])
        throw ValidationError("family of opens is not closed under union/intersection");
    }
  }

  sp.minNbhd_.assign(sp.n_, 0);
  for (int x = 0; x < sp.n_; ++x) {
    PointSet u = sp.full_;
    for (PointSet o = 0; o <= sp.full_; ++o)
      if (flag[o] && ((o >> x) & 1u)) u &= o;
    sp.minNbhd_[x] = u;
  }
  sp.finishFromMinNbhds();
  return sp;
}

void FiniteSpace::finishFromMinNbhds() {
  openFlag_.assign(1u << n_, false);
  opens_.clear();
  for (PointSet s = 0; s <= full_; ++s) {
    bool open = true;
    for (int x = 0; x < n_ && open; ++x)
      if ((s >> x) & 1u)
        if ((minNbhd_[x] & ~s) != 0) open = false;
    if (open) {
      openFlag_[s] = true;
      opens_.push_back(s);
    }
  }
}

bool FiniteSpace::isConnected(PointSet s) const {
  if (s == 0) return true;
  const int start = __builtin_ctz(s);
  PointSet seen = 1u << start;
  PointSet frontier = seen;
  while (frontier != 0) {
    PointSet next = 0;
    for (int x = 0; x < n_; ++x) {
      if (!((frontier >> x) & 1u)) continue;
      for (int y = 0; y < n_; ++y) {
        if (!((s >> y) & 1u) || ((seen >> y) & 1u)) continue;
        const bool adj = ((minNbhd_[x] & s) >> y & 1u) || ((minNbhd_[y] & s) >> x & 1u);
        if (adj) next |= (1u << y);
      }
    }
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

int FiniteSpace::indexOf(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  return -1;
}

std::string FiniteSpace::describe(PointSet s) const {
  std::string out = "{";
  bool first = true;
  for (int x = 0; x < n_; ++x) {
    if (!((s >> x) & 1u)) continue;
    if (!first) out += ",";
    out += names_[x];
    first = false;
  }
  out += "}";
  return out;
}

std::vector<std::vector<PointSet>> enumerateTopologies(int n) {
  if (n < 1 || n > 4) throw CapacityError("topology enumeration supported for 1..4 points");
  const int nSubsets = 1 << n;
  const PointSet full = static_cast<PointSet>(nSubsets - 1);
  std::vector<std::vector<PointSet>> out;

  // A family of subsets is a bitmask over the 2^n possible subsets; test
  // every family for the lattice axioms.
  const std::uint32_t nFamilies = 1u << nSubsets;
  for (std::uint64_t fam = 0; fam < nFamilies; ++fam) {
    if (!((fam >> 0) & 1u) || !((fam >> full) & 1u)) continue;
    std::vector<PointSet> members;
    for (int s = 0; s < nSubsets; ++s)
      if ((fam >> s) & 1u) members.push_back(static_cast<PointSet>(s));
    bool ok = true;
    for (std::size_t i = 0; i < members.size() && ok; ++i)
      for (std::size_t j = i; j < members.size() && ok; ++j) {
        if (!((fam >> (members[i] | members[j])) & 1u)) ok = false;
        if (!((fam >> (members[i] & members[j])) & 1u)) ok = false;
      }
    if (ok) out.push_back(std::move(members));
  }
  return out;
}

}  // namespace prox
