#include "prox/proximity.hpp"

#include <algorithm>

namespace prox {

std::string kindName(const StrongProximityKind& k) {
  std::string base;
  switch (k.variant) {
    case StrongProximityKind::Variant::overlap: base = "overlap"; break;
    case StrongProximityKind::Variant::mixedOverlap: base = "mixedOverlap"; break;
    case StrongProximityKind::Variant::interiorOverlap: base = "interiorOverlap"; break;
  }
  if (!k.wholeSpaceClause) base += "-noWholeSpace";
  if (!k.singletonClauses) base += "-noSingletons";
  return base;
}

std::optional<StrongProximityKind::Variant> variantFromName(const std::string& name) {
  if (name == "overlap") return StrongProximityKind::Variant::overlap;
  if (name == "mixedOverlap") return StrongProximityKind::Variant::mixedOverlap;
  if (name == "interiorOverlap") return StrongProximityKind::Variant::interiorOverlap;
  return std::nullopt;
}

static void checkCompatSize(const FiniteSpace& sp) {
  if (sp.size() > kMaxCompatPoints)
    throw CapacityError("compatibility sweep limited to 8 points, got " +
                        std::to_string(sp.size()));
}

std::vector<PointSet> generatedOpensWith(const std::function<bool(PointSet, PointSet)>& near,
                                         const FiniteSpace& sp) {
  checkCompatSize(sp);
  std::vector<PointSet> out;
  for (PointSet A = 0; A <= sp.carrier(); ++A) {
    bool all = true;
    for (int x = 0; x < sp.size() && all; ++x)
      if ((A >> x) & 1u)
        if (!near(static_cast<PointSet>(1u << x), A)) all = false;
    if (all) out.push_back(A);
  }
  return out;
}

std::vector<PointSet> generatedOpens(const StrongProximityKind& k, const FiniteSpace& sp) {
  return generatedOpensWith(
      [&](PointSet a, PointSet b) { return stronglyNear(k, sp, a, b); }, sp);
}

IntersectionConditionResult intersectionCondition(const StrongProximityKind& k,
                                                  const FiniteSpace& sp) {
  checkCompatSize(sp);
  IntersectionConditionResult res;
  for (int x = 0; x < sp.size(); ++x) {
    const PointSet px = 1u << x;
    for (PointSet A = 0; A <= sp.carrier(); ++A) {
      if (!stronglyNear(k, sp, px, A)) continue;
      for (PointSet B = 0; B <= sp.carrier(); ++B) {
        if (!stronglyNear(k, sp, px, B)) continue;
        if (!stronglyNear(k, sp, px, A & B)) {
          res.holds = false;
          res.witness = "point " + sp.names()[x] + " near " + sp.describe(A) + " and " +
                        sp.describe(B) + " but not their intersection";
          return res;
        }
      }
    }
  }
  return res;
}

static CompatibilityResult compatibilityFrom(const FiniteSpace& sp,
                                             IntersectionConditionResult inter,
                                             std::vector<PointSet> generated) {
  CompatibilityResult res;
  res.intersectionHolds = inter.holds;
  res.intersectionWitness = inter.witness;
  res.generated = std::move(generated);
  if (!res.intersectionHolds) return res;  // generated family is not a topology candidate

  const FiniteSpace regen = FiniteSpace::generate(sp.names(), res.generated);
  res.generationMatches = regen.opens() == sp.opens();
  res.compatible = res.generationMatches;
  return res;
}

CompatibilityResult isCompatible(const StrongProximityKind& k, const FiniteSpace& sp) {
  checkCompatSize(sp);
  return compatibilityFrom(sp, intersectionCondition(k, sp), generatedOpens(k, sp));
}

CompatibilityResult isCompatibleWith(const std::function<bool(PointSet, PointSet)>& near,
                                     const FiniteSpace& sp) {
  checkCompatSize(sp);
  // Intersection condition re-checked against the injected relation.
  IntersectionConditionResult inter;
  for (int x = 0; x < sp.size() && inter.holds; ++x) {
    const PointSet px = 1u << x;
    for (PointSet A = 0; A <= sp.carrier() && inter.holds; ++A) {
      if (!near(px, A)) continue;
      for (PointSet B = 0; B <= sp.carrier(); ++B) {
        if (!near(px, B)) continue;
        if (!near(px, A & B)) {
          inter.holds = false;
          inter.witness = "point " + sp.names()[x] + " near " + sp.describe(A) + " and " +
                          sp.describe(B) + " but not their intersection";
          break;
        }
      }
    }
  }
  return compatibilityFrom(sp, inter, generatedOpensWith(near, sp));
}

}  // namespace prox
