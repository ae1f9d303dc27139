#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prox/proximity.hpp"

namespace prox {

constexpr int kMaxSearchCandidates = 12;

struct VerifyResult {
  bool ok = true;
  std::string failure;  // first failing condition, human readable
  explicit operator bool() const { return ok; }
};

// A decomposition demonstrates strong connectedness of `target`: pieces are
// nonempty, union to the target, are connected with connected interior, and
// consecutive pieces are near. Reports the first failing condition.
template <class Sp, class Set>
VerifyResult verifyDecomposition(const StrongProximityKind& k, const Sp& sp, const Set& target,
                                 const std::vector<Set>& pieces) {
  VerifyResult r;
  if (pieces.empty()) {
    r.ok = false;
    r.failure = "no pieces";
    return r;
  }
  Set u = emptySetOf(sp);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (isEmptySet(sp, pieces[i])) {
      r.ok = false;
      r.failure = "piece " + std::to_string(i + 1) + " is empty";
      return r;
    }
    u = setUnion(sp, u, pieces[i]);
  }
  if (!setsEqual(sp, u, target)) {
    r.ok = false;
    r.failure = "pieces do not union to the target";
    return r;
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!isConnected(sp, pieces[i])) {
      r.ok = false;
      r.failure = "piece " + std::to_string(i + 1) + " is not connected";
      return r;
    }
    if (!isConnected(sp, interior(sp, pieces[i]))) {
      r.ok = false;
      r.failure = "interior of piece " + std::to_string(i + 1) + " is not connected";
      return r;
    }
  }
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    if (!stronglyNear(k, sp, pieces[i], pieces[i + 1])) {
      r.ok = false;
      r.failure = "pieces " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                  " are not near";
      return r;
    }
  }
  return r;
}

// Lexicographically first ordering (by candidate index) of distinct useful
// candidates that verifies as a decomposition of `target`; nullopt when the
// search space is exhausted. Returned indices refer to the input list.
template <class Sp, class Set>
std::optional<std::vector<int>> findDecomposition(const StrongProximityKind& k, const Sp& sp,
                                                  const Set& target,
                                                  const std::vector<Set>& candidates,
                                                  int maxPieces = kMaxSearchCandidates) {
  if (maxPieces < 1 || maxPieces > kMaxSearchCandidates)
    throw CapacityError("piece bound must be between 1 and 12");

  // Deduplicate by value and keep only candidates that could ever be pieces.
  std::vector<int> idx;
  std::vector<Set> cs;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Set& c = candidates[i];
    if (isEmptySet(sp, c)) continue;
    if (!subsetOf(sp, c, target)) continue;
    bool dup = false;
    for (const Set& seen : cs)
      if (setsEqual(sp, seen, c)) {
        dup = true;
        break;
      }
    if (dup) continue;
    if (!isConnected(sp, c)) continue;
    if (!isConnected(sp, interior(sp, c))) continue;
    idx.push_back(static_cast<int>(i));
    cs.push_back(c);
  }
  const int n = static_cast<int>(cs.size());
  if (n > kMaxSearchCandidates)
    throw CapacityError("decomposition search limited to 12 usable candidates, got " +
                        std::to_string(n));
  if (n == 0) return std::nullopt;

  std::vector<std::vector<bool>> near(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) near[i][j] = stronglyNear(k, sp, cs[i], cs[j]);

  std::vector<int> seq;
  std::vector<bool> used(n, false);

  // Upper bound for pruning: nothing outside the remaining candidates can
  // ever cover missing target points.
  Set all = emptySetOf(sp);
  for (const Set& c : cs) all = setUnion(sp, all, c);
  if (!setsEqual(sp, setIntersect(sp, all, target), target)) return std::nullopt;

  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, const Set& covered) -> bool {
    if (!seq.empty() && setsEqual(sp, covered, target)) {
      std::vector<int> out;
      for (int s : seq) out.push_back(idx[static_cast<std::size_t>(s)]);
      found = std::move(out);
      return true;
    }
    if (static_cast<int>(seq.size()) >= maxPieces) return false;
    Set reachable = covered;
    for (int j = 0; j < n; ++j)
      if (!used[j]) reachable = setUnion(sp, reachable, cs[j]);
    if (!setsEqual(sp, setIntersect(sp, reachable, target), target)) return false;
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      if (!seq.empty() && !near[static_cast<std::size_t>(seq.back())][j]) continue;
      used[j] = true;
      seq.push_back(j);
      if (self(self, setUnion(sp, covered, cs[j]))) return true;
      seq.pop_back();
      used[j] = false;
    }
    return false;
  };
  rec(rec, emptySetOf(sp));
  return found;
}

// Theorem harness: a verified decomposition forces plain connectedness.
template <class Sp, class Set>
bool deltaImpliesConnected(const StrongProximityKind& k, const Sp& sp, const Set& target,
                           const std::vector<Set>& pieces) {
  const VerifyResult v = verifyDecomposition(k, sp, target, pieces);
  if (!v.ok) throw PreconditionError("decomposition does not verify: " + v.failure);
  return isConnected(sp, target);
}

// Theorem harness: closures of a verified regular-open decomposition give a
// verified decomposition of the closure of the union.
template <class Sp, class Set>
bool closureTheoremCheck(const StrongProximityKind& k, const Sp& sp,
                         const std::vector<Set>& pieces) {
  Set target = emptySetOf(sp);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!isRegularOpen(sp, pieces[i]))
      throw PreconditionError("piece " + std::to_string(i + 1) + " is not regular open");
    target = setUnion(sp, target, pieces[i]);
  }
  const VerifyResult v = verifyDecomposition(k, sp, target, pieces);
  if (!v.ok) throw PreconditionError("decomposition does not verify: " + v.failure);

  std::vector<Set> cls;
  cls.reserve(pieces.size());
  for (const Set& p : pieces) cls.push_back(closure(sp, p));
  return verifyDecomposition(k, sp, closure(sp, target), cls).ok;
}

// Theorem harness: any G squeezed between a verified regular-open target and
// its closure is itself strongly connected; pieces are the G-relative
// closures of the originals. Direct order first, search as fallback.
template <class Sp, class Set>
bool betweenTheoremCheck(const StrongProximityKind& k, const Sp& sp,
                         const std::vector<Set>& pieces, const Set& g) {
  Set target = emptySetOf(sp);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!isRegularOpen(sp, pieces[i]))
      throw PreconditionError("piece " + std::to_string(i + 1) + " is not regular open");
    target = setUnion(sp, target, pieces[i]);
  }
  const VerifyResult v = verifyDecomposition(k, sp, target, pieces);
  if (!v.ok) throw PreconditionError("decomposition does not verify: " + v.failure);
  if (!subsetOf(sp, target, g) || !subsetOf(sp, g, closure(sp, target)))
    throw PreconditionError("set does not lie between the union and its closure");

  std::vector<Set> rel;
  rel.reserve(pieces.size());
  for (const Set& p : pieces) rel.push_back(setIntersect(sp, closure(sp, p), g));
  if (verifyDecomposition(k, sp, g, rel).ok) return true;
  return findDecomposition(k, sp, g, rel).has_value();
}

template <class Set>
struct CountableWitness {
  Set point;  // singleton
  Set open_;  // open set with point inside open_ inside both adjacent pieces
};

// Theorem harness: pieces covering the carrier, consecutive pairs glued by an
// open neighbourhood of a shared point, force strong connectedness of the
// carrier. Witness checking is strict; the glue sets need not coincide.
template <class Sp, class Set>
bool countableCriterionCheck(const StrongProximityKind& k, const Sp& sp,
                             const std::vector<Set>& pieces,
                             const std::vector<CountableWitness<Set>>& ws) {
  if (pieces.empty()) throw PreconditionError("no pieces");
  if (ws.size() + 1 != pieces.size())
    throw PreconditionError("need exactly one witness per consecutive pair");
  Set u = emptySetOf(sp);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!isConnected(sp, pieces[i]))
      throw PreconditionError("piece " + std::to_string(i + 1) + " is not connected");
    if (!isConnected(sp, interior(sp, pieces[i])))
      throw PreconditionError("interior of piece " + std::to_string(i + 1) + " is not connected");
    u = setUnion(sp, u, pieces[i]);
  }
  if (!setsEqual(sp, u, wholeSetOf(sp)))
    throw PreconditionError("pieces do not cover the carrier");
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const auto& w = ws[i];
    const std::string tag = "witness " + std::to_string(i + 1);
    if (!isSingletonSet(sp, w.point)) throw PreconditionError(tag + ": point is not a singleton");
    if (isEmptySet(sp, w.open_)) throw PreconditionError(tag + ": glue set is empty");
    if (!isCoverOpen(sp, w.open_)) throw PreconditionError(tag + ": glue set is not open");
    if (!subsetOf(sp, w.point, w.open_)) throw PreconditionError(tag + ": point not in glue set");
    const Set inter = setIntersect(sp, pieces[i], pieces[i + 1]);
    if (!subsetOf(sp, w.open_, inter))
      throw PreconditionError(tag + ": glue set not inside the consecutive intersection");
  }
  return findDecomposition(k, sp, wholeSetOf(sp), pieces).has_value();
}

// Lexicographically first strong chain through the open cover from a to b:
// a only in the first link, b only in the last, consecutive links near, every
// link near itself. Links are distinct cover elements, reported by index.
template <class Sp, class Set>
std::optional<std::vector<int>> findStrongChain(const StrongProximityKind& k, const Sp& sp,
                                                const std::vector<Set>& cover, const Set& a,
                                                const Set& b) {
  const int n = static_cast<int>(cover.size());
  if (n == 0) throw PreconditionError("empty cover");
  if (n > kMaxSearchCandidates) throw CapacityError("chain search limited to covers of 12");
  if (!isSingletonSet(sp, a) || !isSingletonSet(sp, b))
    throw ValidationError("chain endpoints must be single points");
  Set u = emptySetOf(sp);
  for (int i = 0; i < n; ++i) {
    if (!isCoverOpen(sp, cover[static_cast<std::size_t>(i)]))
      throw PreconditionError("cover element " + std::to_string(i + 1) + " is not open");
    u = setUnion(sp, u, cover[static_cast<std::size_t>(i)]);
  }
  if (!setsEqual(sp, u, wholeSetOf(sp)))
    throw PreconditionError("cover does not cover the carrier");

  std::vector<bool> hasA(n), hasB(n), selfNear(n);
  std::vector<std::vector<bool>> near(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i) {
    hasA[i] = subsetOf(sp, a, cover[static_cast<std::size_t>(i)]);
    hasB[i] = subsetOf(sp, b, cover[static_cast<std::size_t>(i)]);
    selfNear[i] =
        stronglyNear(k, sp, cover[static_cast<std::size_t>(i)], cover[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j)
      near[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          stronglyNear(k, sp, cover[static_cast<std::size_t>(i)], cover[static_cast<std::size_t>(j)]);
  }

  std::vector<int> seq;
  std::vector<bool> used(n, false);
  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, int last) -> bool {
    if (hasB[static_cast<std::size_t>(last)]) {
      found = seq;
      return true;
    }
    for (int j = 0; j < n; ++j) {
      if (used[j] || hasA[j] || !selfNear[j]) continue;
      if (!near[static_cast<std::size_t>(last)][static_cast<std::size_t>(j)]) continue;
      used[j] = true;
      seq.push_back(j);
      if (self(self, j)) return true;
      seq.pop_back();
      used[j] = false;
    }
    return false;
  };
  for (int i = 0; i < n; ++i) {
    if (!hasA[i] || !selfNear[i]) continue;
    used[static_cast<std::size_t>(i)] = true;
    seq.push_back(i);
    if (rec(rec, i)) return found;
    seq.pop_back();
    used[static_cast<std::size_t>(i)] = false;
  }
  return std::nullopt;
}

}  // namespace prox
