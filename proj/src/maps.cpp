#include "prox/maps.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "prox/connect.hpp"

namespace prox {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kPoleDist2 = 1e-24;

Vec2 invertAbout(Vec2 c, double k, Vec2 p) {
  const Vec2 d = p - c;
  const double d2 = norm2(d);
  if (d2 < kPoleDist2) throw PoleError("inversion evaluated at its pole");
  return c + (k * k / d2) * d;
}

void pushUnique(std::vector<Vec2>& v, Vec2 q) {
  const double tol = 1e-12 * (1.0 + std::abs(q.x) + std::abs(q.y));
  for (const Vec2& e : v)
    if (std::abs(e.x - q.x) <= tol && std::abs(e.y - q.y) <= tol) return;
  v.push_back(q);
}

bool hasDegenerateScale(const PointMap& m) {
  return std::visit(
      Overloaded{[](const ScaleMap& s) { return s.sx == 0.0 || s.sy == 0.0; },
                 [](const CompositionMap& c) {
                   for (const PointMap& st : c.stages)
                     if (hasDegenerateScale(st)) return true;
                   return false;
                 },
                 [](const MaskedMap& mm) { return hasDegenerateScale(*mm.inner); },
                 [](const auto&) { return false; }},
      m.node);
}

// Branch-consistent preimages: every point pushed maps back to q exactly (up
// to roundoff), because the branch condition is checked at the preimage.
void preimagesInto(const PointMap& m, Vec2 q, std::vector<Vec2>& out) {
  std::visit(
      Overloaded{
          [&](const IdentityMap&) { pushUnique(out, q); },
          [&](const RotationMap& r) { pushUnique(out, rotateAbout(q, r.center, -r.angleDeg)); },
          [&](const InversionMap& inv) {
            const double d2 = norm2(q - inv.center);
            if (d2 >= kPoleDist2) {
              const Vec2 pre = invertAbout(inv.center, inv.k, q);
              if (!inv.domain || maskContains(*inv.domain, pre)) pushUnique(out, pre);
            }
            if (inv.domain && !maskContains(*inv.domain, q)) pushUnique(out, q);
          },
          [&](const ScaleMap& s) {
            if (s.sx == 0.0 || s.sy == 0.0)
              throw ValidationError("a collapsed scale has no pointwise preimages");
            pushUnique(out, {s.center.x + (q.x - s.center.x) / s.sx,
                             s.center.y + (q.y - s.center.y) / s.sy});
          },
          [&](const PixelTranslationMap&) {
            throw ValidationError("pixel translations have no world-point semantics");
          },
          [&](const TableMap&) {
            throw ValidationError("table maps have no world-point semantics");
          },
          [&](const CompositionMap& c) {
            std::vector<Vec2> cur{q}, next;
            for (auto it = c.stages.rbegin(); it != c.stages.rend(); ++it) {
              next.clear();
              for (Vec2 v : cur) preimagesInto(*it, v, next);
              cur.swap(next);
            }
            for (Vec2 v : cur) pushUnique(out, v);
          },
          [&](const MaskedMap& mm) {
            std::vector<Vec2> inner;
            preimagesInto(*mm.inner, q, inner);
            for (Vec2 v : inner)
              if (maskContains(mm.mask, v)) pushUnique(out, v);
            if (!maskContains(mm.mask, q)) pushUnique(out, q);
          }},
      m.node);
}

}  // namespace

PointMap makeIdentity() { return {IdentityMap{}}; }

PointMap makeRotation(Vec2 center, double angleDeg) {
  if (!std::isfinite(angleDeg)) throw ValidationError("rotation angle must be finite");
  return {RotationMap{center, angleDeg}};
}

PointMap makeInversion(Vec2 center, double k, std::shared_ptr<const MaskExpr> domain) {
  if (!(k > 0.0) || !std::isfinite(k))
    throw ValidationError("inversion radius must be positive and finite");
  return {InversionMap{center, k, std::move(domain)}};
}

PointMap makeScale(Vec2 center, double sx, double sy) {
  if (!std::isfinite(sx) || !std::isfinite(sy))
    throw ValidationError("scale factors must be finite");
  return {ScaleMap{center, sx, sy}};
}

PointMap makePixelTranslation(int dx, int dy) { return {PixelTranslationMap{dx, dy}}; }

PointMap makeTable(std::vector<int> table) {
  for (int v : table)
    if (v < 0) throw ValidationError("table entries must be non-negative point indices");
  return {TableMap{std::move(table)}};
}

PointMap makeComposition(std::vector<PointMap> stages) {
  if (stages.empty()) throw ValidationError("a pipeline needs at least one stage");
  return {CompositionMap{std::move(stages)}};
}

PointMap makeMasked(PointMap inner, MaskExpr mask) {
  return {MaskedMap{std::make_shared<const PointMap>(std::move(inner)), std::move(mask)}};
}

MaskExpr maskInside(Shape s) { return {InsideShape{std::move(s)}}; }
MaskExpr maskOutside(Shape s) { return {OutsideShape{std::move(s)}}; }

MaskExpr maskAllOf(std::vector<MaskExpr> parts) {
  if (parts.empty()) throw ValidationError("allOf mask needs at least one part");
  return {AllOfMask{std::move(parts)}};
}

MaskExpr maskAnyOf(std::vector<MaskExpr> parts) {
  if (parts.empty()) throw ValidationError("anyOf mask needs at least one part");
  return {AnyOfMask{std::move(parts)}};
}

MaskExpr maskNot(MaskExpr inner) {
  return {NotMask{std::make_shared<const MaskExpr>(std::move(inner))}};
}

MaskExpr maskImageOf(PointMap map, MaskExpr mask) {
  return {ImageOfMask{std::make_shared<const PointMap>(std::move(map)),
                      std::make_shared<const MaskExpr>(std::move(mask))}};
}

bool maskContains(const MaskExpr& m, Vec2 p) {
  return std::visit(
      Overloaded{[&](const InsideShape& s) { return contains(s.shape, p); },
                 [&](const OutsideShape& s) { return !contains(s.shape, p); },
                 [&](const AllOfMask& a) {
                   for (const MaskExpr& e : a.parts)
                     if (!maskContains(e, p)) return false;
                   return true;
                 },
                 [&](const AnyOfMask& a) {
                   for (const MaskExpr& e : a.parts)
                     if (maskContains(e, p)) return true;
                   return false;
                 },
                 [&](const NotMask& n) { return !maskContains(*n.inner, p); },
                 [&](const ImageOfMask& im) {
                   for (Vec2 q : preimages(*im.map, p))
                     if (maskContains(*im.mask, q)) return true;
                   return false;
                 }},
      m.node);
}

Vec2 applyPoint(const PointMap& m, Vec2 p) {
  return std::visit(
      Overloaded{[&](const IdentityMap&) { return p; },
                 [&](const RotationMap& r) { return rotateAbout(p, r.center, r.angleDeg); },
                 [&](const InversionMap& inv) {
                   if (inv.domain && !maskContains(*inv.domain, p)) return p;
                   return invertAbout(inv.center, inv.k, p);
                 },
                 [&](const ScaleMap& s) {
                   return Vec2{s.center.x + s.sx * (p.x - s.center.x),
                               s.center.y + s.sy * (p.y - s.center.y)};
                 },
                 [&](const PixelTranslationMap&) -> Vec2 {
                   throw ValidationError("pixel translations have no world-point semantics");
                 },
                 [&](const TableMap&) -> Vec2 {
                   throw ValidationError("table maps have no world-point semantics");
                 },
                 [&](const CompositionMap& c) {
                   Vec2 v = p;
                   for (const PointMap& st : c.stages) v = applyPoint(st, v);
                   return v;
                 },
                 [&](const MaskedMap& mm) {
                   return maskContains(mm.mask, p) ? applyPoint(*mm.inner, p) : p;
                 }},
      m.node);
}

std::vector<Vec2> preimages(const PointMap& m, Vec2 q) {
  std::vector<Vec2> out;
  preimagesInto(m, q, out);
  return out;
}

GridRegion applyRegion(const PointMap& m, const GridRegion& src, const GridSpace& gsrc,
                       const GridSpace& gdst, const WorldPred& srcPred) {
  if (src.width != gsrc.width() || src.height != gsrc.height())
    throw ValidationError("region size does not match its grid");

  if (const auto* pt = std::get_if<PixelTranslationMap>(&m.node)) {
    if (gsrc.width() != gdst.width() || gsrc.height() != gdst.height())
      throw ValidationError("pixel translations need source and target grids of equal size");
    // shifted() samples at +offset, so negate to move content by (dx, dy)
    GridRegion out = shifted(gsrc, src, -pt->dx, -pt->dy, false);
    if (out.count() != src.count())
      throw ValidationError("pixel translation pushes " +
                            std::to_string(src.count() - out.count()) +
                            " pixel(s) out of the window");
    return out;
  }
  if (std::holds_alternative<TableMap>(m.node))
    throw ValidationError("table maps act on finite carriers, not rasters");

  GridRegion out(gdst.width(), gdst.height());

  // Collapsed scales have no finite preimage sets; rasterise forward instead.
  if (hasDegenerateScale(m)) {
    for (auto idx = src.bits.find_first(); idx != boost::dynamic_bitset<>::npos;
         idx = src.bits.find_next(idx)) {
      const int ix = static_cast<int>(idx) % src.width;
      const int iy = static_cast<int>(idx) / src.width;
      Vec2 q;
      try {
        q = applyPoint(m, gsrc.pixelCenter(ix, iy));
      } catch (const PoleError&) {
        continue;  // that source point has no image
      }
      int jx, jy;
      if (gdst.nearestPixel(q, jx, jy)) out.set(jx, jy);
    }
    return out;
  }

  std::vector<Vec2> pres;
  for (int iy = 0; iy < gdst.height(); ++iy)
    for (int ix = 0; ix < gdst.width(); ++ix) {
      pres.clear();
      preimagesInto(m, gdst.pixelCenter(ix, iy), pres);
      for (Vec2 q : pres) {
        int jx, jy;
        if (!gsrc.nearestPixel(q, jx, jy)) continue;
        const bool inSource = srcPred ? srcPred(q) : src.test(jx, jy);
        if (inSource) {
          out.set(ix, iy);
          break;
        }
      }
    }
  return out;
}

PointSet applyTable(const TableMap& f, const FiniteSpace& domain, PointSet s, int nOut) {
  if (static_cast<int>(f.table.size()) != domain.size())
    throw ValidationError("table has " + std::to_string(f.table.size()) + " entries for " +
                          std::to_string(domain.size()) + " points");
  PointSet out = 0;
  for (int x = 0; x < domain.size(); ++x) {
    const int y = f.table[static_cast<std::size_t>(x)];
    if (y < 0 || y >= nOut) throw ValidationError("table entry out of range of the target");
    if ((s >> x) & 1u) out |= (1u << y);
  }
  return out;
}

WitnessReport isHomeomorphismWitness(const FiniteSpace& X, const FiniteSpace& Y,
                                     const TableMap& f) {
  WitnessReport r;
  const int n = X.size();
  if (Y.size() != n) {
    r.ok = false;
    r.reason = "carriers differ in size";
    return r;
  }
  if (static_cast<int>(f.table.size()) != n) {
    r.ok = false;
    r.reason = "table size does not match the source carrier";
    return r;
  }
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    const int y = f.table[static_cast<std::size_t>(x)];
    if (y < 0 || y >= n) {
      r.ok = false;
      r.reason = "table entry out of range";
      return r;
    }
    if (hits[static_cast<std::size_t>(y)]++) {
      r.ok = false;
      r.reason = "not injective: two points land on " + Y.names()[static_cast<std::size_t>(y)];
      return r;
    }
  }
  for (PointSet u : X.opens()) {
    const PointSet img = applyTable(f, X, u, n);
    if (!Y.isOpen(img)) {
      r.ok = false;
      r.reason = "image " + Y.describe(img) + " of open " + X.describe(u) + " is not open";
      return r;
    }
  }
  for (PointSet v : Y.opens()) {
    PointSet pre = 0;
    for (int x = 0; x < n; ++x)
      if ((v >> f.table[static_cast<std::size_t>(x)]) & 1u) pre |= (1u << x);
    if (!X.isOpen(pre)) {
      r.ok = false;
      r.reason = "preimage " + X.describe(pre) + " of open " + Y.describe(v) + " is not open";
      return r;
    }
  }
  return r;
}

namespace {

// Shared pair scan for both backends once images are in hand.
template <class SpX, class SpY, class Set>
SpcReport scanPairs(const StrongProximityKind& kx, const SpX& X, const StrongProximityKind& ky,
                    const SpY& Y, const std::vector<Set>& family, const std::vector<Set>& images,
                    const std::vector<std::string>& names) {
  SpcReport r;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j) {
      ++r.orderedPairs;
      const bool nx = stronglyNear(kx, X, family[i], family[j]);
      const bool ny = stronglyNear(ky, Y, images[i], images[j]);
      if (nx) ++r.nearPairs;
      if (nx && !ny && r.spcOk) {
        r.spcOk = false;
        r.spcWitness = names[i] + "/" + names[j];
      }
      if (!nx && ny && r.speOk) {
        r.speOk = false;
        r.speWitness = names[i] + "/" + names[j];
      }
    }
  return r;
}

}  // namespace

SpcReport spcCheck(const StrongProximityKind& kx, const FiniteSpace& X,
                   const StrongProximityKind& ky, const FiniteSpace& Y, const TableMap& f,
                   const std::vector<PointSet>& family, const std::vector<std::string>& names) {
  if (names.size() != family.size()) throw ValidationError("one name per family member, please");
  std::vector<PointSet> images;
  images.reserve(family.size());
  for (PointSet s : family) images.push_back(applyTable(f, X, s, Y.size()));
  return scanPairs(kx, X, ky, Y, family, images, names);
}

SpcReport spcCheck(const StrongProximityKind& kx, const GridSpace& gx,
                   const StrongProximityKind& ky, const GridSpace& gy, const PointMap& f,
                   const std::vector<GridRegion>& family, const std::vector<std::string>& names,
                   const std::vector<WorldPred>& preds) {
  if (names.size() != family.size()) throw ValidationError("one name per family member, please");
  if (!preds.empty() && preds.size() != family.size())
    throw ValidationError("either no predicates or one per family member");
  std::vector<GridRegion> images;
  images.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    images.push_back(applyRegion(f, family[i], gx, gy, preds.empty() ? WorldPred{} : preds[i]));
  return scanPairs(kx, gx, ky, gy, family, images, names);
}

OpenMapReport openMapCheck(const FiniteSpace& X, const FiniteSpace& Y, const TableMap& f,
                           const std::vector<PointSet>& samples,
                           const std::vector<std::string>& names) {
  if (names.size() != samples.size()) throw ValidationError("one name per sample, please");
  OpenMapReport r;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!X.isOpen(samples[i]))
      throw PreconditionError("sample " + names[i] + " is not open in the source");
    ++r.samples;
    const PointSet img = applyTable(f, X, samples[i], Y.size());
    if (!Y.isOpen(img) && r.ok) {
      r.ok = false;
      r.witness = names[i] + " maps to " + Y.describe(img) + ", which is not open";
    }
  }
  return r;
}

OpenMapReport openMapCheck(const GridSpace& gx, const GridSpace& gy, const PointMap& f,
                           const std::vector<GridRegion>& samples,
                           const std::vector<std::string>& names,
                           const std::vector<WorldPred>& preds) {
  if (names.size() != samples.size()) throw ValidationError("one name per sample, please");
  if (!preds.empty() && preds.size() != samples.size())
    throw ValidationError("either no predicates or one per sample");
  OpenMapReport r;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!isRegularOpen(gx, samples[i]))
      throw PreconditionError("sample " + names[i] + " is not regular open in the source");
    ++r.samples;
    const GridRegion img =
        applyRegion(f, samples[i], gx, gy, preds.empty() ? WorldPred{} : preds[i]);
    // Digital openness up to raster error: the image must agree with the
    // regularised interior(closure(image)) within a one-pixel band each way.
    const GridRegion reg = interior(gy, closure(gy, img));
    const bool close = subsetOf(gy, img, closure(gy, reg)) && subsetOf(gy, reg, closure(gy, img));
    if ((img.bits.none() || !close) && r.ok) {
      r.ok = false;
      r.witness = names[i] + " maps to " + describeRegion(img) + ", not open up to one pixel";
    }
  }
  return r;
}

SpcReport InversionFixture::check() const {
  return spcCheck(kindX, source, kindY, target, f, family, names, preds);
}

InversionFixture inversionExampleFixture(bool plantFailure) {
  const Shape a1 = makeUnion({makeDisk({0, 0}, 3, true), makeDisk({0, 0}, 2, true)});
  const Shape a2 = makeDisk({5, 0}, 3, false);
  const Shape a3 = makeUnion({makeDisk({10, 0}, 3, true), makeDisk({10, 0}, 2, true)});
  const Shape a4 = makeDisk({15, 0}, 3, false);

  // Three inversions chained left to right; each later domain is phrased in
  // the coordinates produced by the earlier stages.
  const PointMap i1 = makeInversion(
      {0, 0}, 2.0, std::make_shared<const MaskExpr>(maskOutside(makeDisk({0, 0}, 2, true))));
  const PointMap i2 = makeInversion(
      {1.25, 0}, 0.75,
      std::make_shared<const MaskExpr>(maskAllOf({maskInside(makeDisk({0, 0}, 2, true)),
                                                  maskOutside(makeDisk({1.25, 0}, 0.75, false))})));
  const PointMap i3 = makeInversion(
      {25.0 / 44, 0}, 3.0 / 44,
      std::make_shared<const MaskExpr>(maskAllOf(
          {maskInside(makeDisk({1.25, 0}, 0.75, false)),
           maskNot(maskImageOf(makeComposition({i1, i2}),
                               maskInside(makeDisk({10, 0}, 3, true))))})));

  GridSpace source(880, 288, Window{-3.5, -3.6, 18.5, 3.6});
  GridSpace target = plantFailure ? source : GridSpace(640, 640, Window{0.2, -0.4, 1.0, 0.4});
  PointMap f = plantFailure
                   ? makeMasked(makeScale({5, 0}, 1, 0), maskInside(makeDisk({5, 0}, 3, true)))
                   : makeComposition({i1, i2, i3});

  InversionFixture fx{std::move(source),
                      std::move(target),
                      StrongProximityKind{StrongProximityKind::Variant::mixedOverlap, true, true},
                      StrongProximityKind{StrongProximityKind::Variant::interiorOverlap, true,
                                          true},
                      std::move(f),
                      {"A1", "A2", "A3", "A4"},
                      {a1, a2, a3, a4},
                      {},
                      {}};
  for (const Shape& s : fx.shapes) {
    fx.family.push_back(rasterize(fx.source, s));
    fx.preds.push_back([s](Vec2 q) { return contains(s, q); });
  }
  return fx;
}

bool imagePreservationCheck(const StrongProximityKind& kx, const FiniteSpace& X,
                            const StrongProximityKind& ky, const FiniteSpace& Y, const TableMap& f,
                            PointSet target, const std::vector<PointSet>& pieces) {
  const WitnessReport h = isHomeomorphismWitness(X, Y, f);
  if (!h.ok) throw PreconditionError("map is not a homeomorphism witness: " + h.reason);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < pieces.size(); ++i) names.push_back("piece " + std::to_string(i + 1));
  const SpcReport s = spcCheck(kx, X, ky, Y, f, pieces, names);
  if (!s.spcOk || !s.speOk) throw PreconditionError("map is not proximally faithful on the pieces");
  const VerifyResult v = verifyDecomposition(kx, X, target, pieces);
  if (!v.ok) throw PreconditionError("source decomposition does not verify: " + v.failure);

  std::vector<PointSet> imgPieces;
  for (PointSet p : pieces) imgPieces.push_back(applyTable(f, X, p, Y.size()));
  return verifyDecomposition(ky, Y, applyTable(f, X, target, Y.size()), imgPieces).ok;
}

bool imagePreservationCheck(const StrongProximityKind& kx, const GridSpace& gx,
                            const StrongProximityKind& ky, const GridSpace& gy, const PointMap& f,
                            const GridRegion& target, const std::vector<GridRegion>& pieces) {
  if (!std::holds_alternative<IdentityMap>(f.node) &&
      !std::holds_alternative<PixelTranslationMap>(f.node))
    throw ValidationError(
        "raster image preservation supports the identity and pixel translations only");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < pieces.size(); ++i) names.push_back("piece " + std::to_string(i + 1));
  const SpcReport s = spcCheck(kx, gx, ky, gy, f, pieces, names);
  if (!s.spcOk || !s.speOk) throw PreconditionError("map is not proximally faithful on the pieces");
  const VerifyResult v = verifyDecomposition(kx, gx, target, pieces);
  if (!v.ok) throw PreconditionError("source decomposition does not verify: " + v.failure);

  std::vector<GridRegion> imgPieces;
  for (const GridRegion& p : pieces) imgPieces.push_back(applyRegion(f, p, gx, gy));
  return verifyDecomposition(ky, gy, applyRegion(f, target, gx, gy), imgPieces).ok;
}

}  // namespace prox
