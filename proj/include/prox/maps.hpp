#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "prox/finite_space.hpp"
#include "prox/proximity.hpp"
#include "prox/shapes.hpp"

namespace prox {

struct PointMap;
struct MaskExpr;

// Boolean world-space predicates used as map domains.
struct InsideShape {
  Shape shape;
};
struct OutsideShape {
  Shape shape;
};
struct AllOfMask {
  std::vector<MaskExpr> parts;
};
struct AnyOfMask {
  std::vector<MaskExpr> parts;
};
struct NotMask {
  std::shared_ptr<const MaskExpr> inner;
};
// Membership through a map: p belongs when some branch preimage of p under
// `map` satisfies `mask`. Lets later stages of a piecewise pipeline refer to
// images of earlier stages without rasterising them.
struct ImageOfMask {
  std::shared_ptr<const PointMap> map;
  std::shared_ptr<const MaskExpr> mask;
};

struct MaskExpr {
  std::variant<InsideShape, OutsideShape, AllOfMask, AnyOfMask, NotMask, ImageOfMask> node;
};

struct IdentityMap {};
struct RotationMap {
  Vec2 center;
  double angleDeg = 0;
};
// Inversion in the circle |p - center| = k; `domain` (when set) restricts the
// inversion to that region with identity elsewhere.
struct InversionMap {
  Vec2 center;
  double k = 1.0;
  std::shared_ptr<const MaskExpr> domain;
};
// Affine scaling about a centre. A zero factor collapses that axis; such maps
// are rasterised forward (they have no finite preimage sets).
struct ScaleMap {
  Vec2 center;
  double sx = 1.0;
  double sy = 1.0;
};
struct PixelTranslationMap {
  int dx = 0;
  int dy = 0;
};
// Finite-space map: point i goes to table[i] in the target carrier.
struct TableMap {
  std::vector<int> table;
};
// Stages applied in list order: stages[0] first.
struct CompositionMap {
  std::vector<PointMap> stages;
};
// Applies `inner` where `mask` holds, identity elsewhere.
struct MaskedMap {
  std::shared_ptr<const PointMap> inner;
  MaskExpr mask;
};

struct PointMap {
  std::variant<IdentityMap, RotationMap, InversionMap, ScaleMap, PixelTranslationMap, TableMap,
               CompositionMap, MaskedMap>
      node;
};

PointMap makeIdentity();
PointMap makeRotation(Vec2 center, double angleDeg);
PointMap makeInversion(Vec2 center, double k, std::shared_ptr<const MaskExpr> domain = nullptr);
PointMap makeScale(Vec2 center, double sx, double sy);
PointMap makePixelTranslation(int dx, int dy);
PointMap makeTable(std::vector<int> table);
PointMap makeComposition(std::vector<PointMap> stages);
PointMap makeMasked(PointMap inner, MaskExpr mask);

MaskExpr maskInside(Shape s);
MaskExpr maskOutside(Shape s);
MaskExpr maskAllOf(std::vector<MaskExpr> parts);
MaskExpr maskAnyOf(std::vector<MaskExpr> parts);
MaskExpr maskNot(MaskExpr inner);
MaskExpr maskImageOf(PointMap map, MaskExpr mask);

bool maskContains(const MaskExpr& m, Vec2 p);

// World-point evaluation. Pixel translations and table maps have no world
// semantics and refuse. Inversion within ~1e-12 of its pole refuses.
Vec2 applyPoint(const PointMap& m, Vec2 p);

// All world points that the map sends exactly to q, one per consistent
// branch of the piecewise structure.
std::vector<Vec2> preimages(const PointMap& m, Vec2 q);

using WorldPred = std::function<bool(Vec2)>;

// Image of a raster region. Pixel translations shift the bitset exactly and
// refuse when set pixels would leave the window. Degenerate scales rasterise
// forward. Everything else rasterises by destination-pixel preimage lookup:
// the source is read through `srcPred` when given (exact world test),
// otherwise through the source bitset via nearest pixel.
GridRegion applyRegion(const PointMap& m, const GridRegion& src, const GridSpace& gsrc,
                       const GridSpace& gdst, const WorldPred& srcPred = nullptr);

// Finite-space image of a subset under a table map into a carrier of nOut
// points.
PointSet applyTable(const TableMap& f, const FiniteSpace& domain, PointSet s, int nOut);

struct WitnessReport {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// Bijective with open image and open preimage of opens (checked exhaustively).
WitnessReport isHomeomorphismWitness(const FiniteSpace& X, const FiniteSpace& Y,
                                     const TableMap& f);

struct SpcReport {
  bool spcOk = true;   // near pairs keep near images
  bool speOk = true;   // and conversely
  std::string spcWitness;
  std::string speWitness;
  int orderedPairs = 0;
  int nearPairs = 0;
};

SpcReport spcCheck(const StrongProximityKind& kx, const FiniteSpace& X,
                   const StrongProximityKind& ky, const FiniteSpace& Y, const TableMap& f,
                   const std::vector<PointSet>& family, const std::vector<std::string>& names);

SpcReport spcCheck(const StrongProximityKind& kx, const GridSpace& gx,
                   const StrongProximityKind& ky, const GridSpace& gy, const PointMap& f,
                   const std::vector<GridRegion>& family, const std::vector<std::string>& names,
                   const std::vector<WorldPred>& preds = {});

struct OpenMapReport {
  bool ok = true;
  std::string witness;
  int samples = 0;
};

// Samples must be open (finite: literally; grid: regular open, and the image
// is compared with interior(closure(image)) up to a one-pixel band).
OpenMapReport openMapCheck(const FiniteSpace& X, const FiniteSpace& Y, const TableMap& f,
                           const std::vector<PointSet>& samples,
                           const std::vector<std::string>& names);

OpenMapReport openMapCheck(const GridSpace& gx, const GridSpace& gy, const PointMap& f,
                           const std::vector<GridRegion>& samples,
                           const std::vector<std::string>& names,
                           const std::vector<WorldPred>& preds = {});

// Ready-made chained-inversion scenario: four disks on a line, a pipeline of
// three domain-restricted inversions, mixed-overlap source relation and
// interior-overlap target relation. With `plantFailure` the pipeline is
// replaced by a squash that flattens the second disk, so the check must fail
// with the (A1, A2) witness.
struct InversionFixture {
  GridSpace source;
  GridSpace target;
  StrongProximityKind kindX;
  StrongProximityKind kindY;
  PointMap f;
  std::vector<std::string> names;
  std::vector<Shape> shapes;
  std::vector<GridRegion> family;
  std::vector<WorldPred> preds;

  SpcReport check() const;
};

InversionFixture inversionExampleFixture(bool plantFailure = false);

// Homeomorphic, proximally faithful images of verified decompositions stay
// verified. Preconditions (homeomorphism witness, spc on the pieces, verified
// source decomposition) are enforced; on grids the map must be the identity
// or a pixel translation.
bool imagePreservationCheck(const StrongProximityKind& kx, const FiniteSpace& X,
                            const StrongProximityKind& ky, const FiniteSpace& Y, const TableMap& f,
                            PointSet target, const std::vector<PointSet>& pieces);

bool imagePreservationCheck(const StrongProximityKind& kx, const GridSpace& gx,
                            const StrongProximityKind& ky, const GridSpace& gy, const PointMap& f,
                            const GridRegion& target, const std::vector<GridRegion>& pieces);

}  // namespace prox
