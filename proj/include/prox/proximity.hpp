#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "prox/rng.hpp"
#include "prox/sets.hpp"

namespace prox {

// Configurable strong-nearness relation. Evaluation order is fixed:
//   1. either side empty                      -> false
//   2. whole-space clause (other side known nonempty) -> true
//   3. two singletons                         -> equality
//   4. exactly one singleton {x}              -> x inside interior(other)
//   5. variant predicate on (A, B)
struct StrongProximityKind {
  enum class Variant { overlap, mixedOverlap, interiorOverlap };
  Variant variant = Variant::interiorOverlap;
  bool wholeSpaceClause = true;
  bool singletonClauses = true;
};

std::string kindName(const StrongProximityKind& k);
std::optional<StrongProximityKind::Variant> variantFromName(const std::string& name);

template <class Sp, class Set>
bool stronglyNear(const StrongProximityKind& k, const Sp& sp, const Set& A, const Set& B) {
  if (isEmptySet(sp, A) || isEmptySet(sp, B)) return false;
  if (k.wholeSpaceClause && (isWholeSet(sp, A) || isWholeSet(sp, B))) return true;
  if (k.singletonClauses) {
    const bool sa = isSingletonSet(sp, A);
    const bool sb = isSingletonSet(sp, B);
    if (sa && sb) return setsEqual(sp, A, B);
    if (sa) return setsIntersect(sp, A, interior(sp, B));
    if (sb) return setsIntersect(sp, B, interior(sp, A));
  }
  switch (k.variant) {
    case StrongProximityKind::Variant::overlap:
      return setsIntersect(sp, A, B);
    case StrongProximityKind::Variant::mixedOverlap:
      return setsIntersect(sp, A, interior(sp, B)) || setsIntersect(sp, interior(sp, A), B);
    case StrongProximityKind::Variant::interiorOverlap:
    default:
      return setsIntersect(sp, interior(sp, A), interior(sp, B));
  }
}

// ---- axiom suite ----

struct AxiomResult {
  std::string axiom;   // "N0".."N6"
  bool pass = true;
  std::string witness;  // first counterexample, empty when passing
  long long checked = 0;
};

struct AxiomReport {
  std::vector<AxiomResult> axioms;
  bool allPass = true;
  const AxiomResult& operator[](int i) const { return axioms[static_cast<std::size_t>(i)]; }
};

// Axioms verified against a supplied relation so deliberately broken
// relations can be planted in tests. `family` supplies the quantified sets;
// empty set and carrier are adjoined internally. N3 runs exhaustively over
// pairs, over triples when the family is small, and over seeded larger
// tuples otherwise.
template <class Sp, class Set, class NearFn>
AxiomReport checkAxiomsWith(NearFn&& near, const Sp& sp, std::vector<Set> family,
                            std::uint64_t seed = 0) {
  AxiomReport rep;
  const Set empty = emptySetOf(sp);
  const Set whole = wholeSetOf(sp);
  family.push_back(whole);

  AxiomResult n0{"N0", true, "", 0};
  for (const Set& A : family) {
    ++n0.checked;
    if (near(empty, A) || near(A, empty)) {
      n0.pass = false;
      n0.witness = "empty set near " + describeSet(sp, A);
      break;
    }
    if (!isEmptySet(sp, A) && (!near(whole, A) || !near(A, whole))) {
      n0.pass = false;
      n0.witness = "carrier not near " + describeSet(sp, A);
      break;
    }
  }
  rep.axioms.push_back(n0);

  AxiomResult n1{"N1", true, "", 0};
  for (std::size_t i = 0; i < family.size() && n1.pass; ++i)
    for (std::size_t j = i; j < family.size(); ++j) {
      ++n1.checked;
      if (near(family[i], family[j]) != near(family[j], family[i])) {
        n1.pass = false;
        n1.witness = describeSet(sp, family[i]) + " / " + describeSet(sp, family[j]);
        break;
      }
    }
  rep.axioms.push_back(n1);

  AxiomResult n2{"N2", true, "", 0};
  for (std::size_t i = 0; i < family.size() && n2.pass; ++i)
    for (std::size_t j = 0; j < family.size(); ++j) {
      ++n2.checked;
      if (near(family[i], family[j]) && !setsIntersect(sp, family[i], family[j])) {
        n2.pass = false;
        n2.witness = describeSet(sp, family[i]) + " near but disjoint from " +
                     describeSet(sp, family[j]);
        break;
      }
    }
  rep.axioms.push_back(n2);

  // N3: A near B1 with nonempty interior(B1) stays near any union B1 u ... .
  // The designated-member gate is hoisted out of the union loops.
  AxiomResult n3{"N3", true, "", 0};
  auto n3Union = [&](const Set& A, const Set& B1, const Set& unionAll) {
    ++n3.checked;
    if (near(A, unionAll)) return;
    n3.pass = false;
    n3.witness = describeSet(sp, A) + " near " + describeSet(sp, B1) + " but not near union " +
                 describeSet(sp, unionAll);
  };
  for (std::size_t i = 0; i < family.size() && n3.pass; ++i)
    for (std::size_t j = 0; j < family.size() && n3.pass; ++j) {
      const Set& A = family[i];
      const Set& B1 = family[j];
      if (!near(A, B1)) continue;
      if (isEmptySet(sp, interior(sp, B1))) continue;  // proviso: designated member needs interior
      for (std::size_t l = 0; l < family.size() && n3.pass; ++l)
        n3Union(A, B1, setUnion(sp, B1, family[l]));
      if (!n3.pass) break;
      if (family.size() <= 12) {
        for (std::size_t l = 0; l < family.size() && n3.pass; ++l)
          for (std::size_t m = 0; m < family.size() && n3.pass; ++m)
            n3Union(A, B1, setUnion(sp, setUnion(sp, B1, family[l]), family[m]));
      }
    }
  if (n3.pass && family.size() > 12) {
    Rng rng(seed);
    const int fs = static_cast<int>(family.size());
    for (int t = 0; t < 512 && n3.pass; ++t) {
      const Set& A = family[static_cast<std::size_t>(rng.below(fs))];
      const Set& B1 = family[static_cast<std::size_t>(rng.below(fs))];
      if (!near(A, B1) || isEmptySet(sp, interior(sp, B1))) continue;
      Set u = B1;
      const int extra = 1 + rng.below(3);
      for (int e = 0; e < extra; ++e)
        u = setUnion(sp, u, family[static_cast<std::size_t>(rng.below(fs))]);
      n3Union(A, B1, u);
    }
  }
  rep.axioms.push_back(n3);

  AxiomResult n4{"N4", true, "", 0};
  for (std::size_t i = 0; i < family.size() && n4.pass; ++i)
    for (std::size_t j = 0; j < family.size(); ++j) {
      ++n4.checked;
      if (setsIntersect(sp, interior(sp, family[i]), interior(sp, family[j])) &&
          !near(family[i], family[j])) {
        n4.pass = false;
        n4.witness = "interiors of " + describeSet(sp, family[i]) + " and " +
                     describeSet(sp, family[j]) + " meet but sets are not near";
        break;
      }
    }
  rep.axioms.push_back(n4);

  AxiomResult n5{"N5", true, "", 0};
  for (const Set& A : family) {
    if (!n5.pass) break;
    for (const auto& [pt, name] : elementSamples(sp, interior(sp, A), 64)) {
      ++n5.checked;
      if (!near(pt, A)) {
        n5.pass = false;
        n5.witness = "interior point " + name + " not near " + describeSet(sp, A);
        break;
      }
    }
  }
  rep.axioms.push_back(n5);

  AxiomResult n6{"N6", true, "", 0};
  {
    const auto pts = elementSamples(sp, whole, 32);
    for (std::size_t i = 0; i < pts.size() && n6.pass; ++i)
      for (std::size_t j = 0; j < pts.size(); ++j) {
        ++n6.checked;
        const bool same = setsEqual(sp, pts[i].first, pts[j].first);
        if (near(pts[i].first, pts[j].first) != same) {
          n6.pass = false;
          n6.witness = pts[i].second + " / " + pts[j].second;
          break;
        }
      }
  }
  rep.axioms.push_back(n6);

  for (const AxiomResult& a : rep.axioms) rep.allPass = rep.allPass && a.pass;
  return rep;
}

template <class Sp, class Set>
AxiomReport checkAxioms(const StrongProximityKind& k, const Sp& sp, std::vector<Set> family,
                        std::uint64_t seed = 0) {
  auto near = [&](const Set& A, const Set& B) { return stronglyNear(k, sp, A, B); };
  return checkAxiomsWith(near, sp, std::move(family), seed);
}

// ---- compatibility with the topology (finite backend) ----

constexpr int kMaxCompatPoints = 8;

// Sets A whose every point x has {x} near A. With singleton clauses on, every
// singleton qualifies, so this family always contains all singletons.
std::vector<PointSet> generatedOpens(const StrongProximityKind& k, const FiniteSpace& sp);
std::vector<PointSet> generatedOpensWith(const std::function<bool(PointSet, PointSet)>& near,
                                         const FiniteSpace& sp);

struct IntersectionConditionResult {
  bool holds = true;
  std::string witness;
};

// For every point x and sets A, B: x near A and x near B imply x near (A&B).
IntersectionConditionResult intersectionCondition(const StrongProximityKind& k,
                                                  const FiniteSpace& sp);

struct CompatibilityResult {
  bool intersectionHolds = false;
  std::string intersectionWitness;
  bool generationMatches = false;
  bool compatible = false;
  std::vector<PointSet> generated;
};

// The relation is compatible when the generated family, closed under the
// usual topology generation, reproduces exactly the opens of the space.
// Requires the intersection condition (otherwise the generated family is not
// even a candidate topology and the result reports that instead).
CompatibilityResult isCompatible(const StrongProximityKind& k, const FiniteSpace& sp);
CompatibilityResult isCompatibleWith(const std::function<bool(PointSet, PointSet)>& near,
                                     const FiniteSpace& sp);

// ---- plain (non-strong) proximity, used by hyperspace misses ----

struct PlainProximity {
  enum class Kind { closureOverlap, overlap };
  Kind kind = Kind::closureOverlap;
};

template <class Sp, class Set>
bool plainNear(const PlainProximity& p, const Sp& sp, const Set& A, const Set& B) {
  if (p.kind == PlainProximity::Kind::overlap) return setsIntersect(sp, A, B);
  return setsIntersect(sp, closure(sp, A), closure(sp, B));
}

}  // namespace prox
