#include "prox/scene.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>

#include "prox/connect.hpp"
#include "prox/descriptive.hpp"
#include "prox/hyper.hpp"
#include "prox/svg.hpp"

namespace prox {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw SceneError(msg, where);
}

const ojson& field(const ojson& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string asString(const ojson& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

double asNumber(const ojson& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

int asInt(const ojson& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

bool asBool(const ojson& j, const std::string& where) {
  if (!j.is_boolean()) fail(where, "expected a boolean");
  return j.get<bool>();
}

Vec2 asVec2(const ojson& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected [x, y]");
  return {asNumber(j[0], where + "[0]"), asNumber(j[1], where + "[1]")};
}

std::string optString(const ojson& j, const char* key, const std::string& def,
                      const std::string& where) {
  if (!j.is_object() || !j.contains(key)) return def;
  return asString(j.at(key), where + "." + key);
}

bool optBool(const ojson& j, const char* key, bool def, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) return def;
  return asBool(j.at(key), where + "." + key);
}

int optInt(const ojson& j, const char* key, int def, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) return def;
  return asInt(j.at(key), where + "." + key);
}

// ---- resolved scene ----

struct RegionRec {
  GridRegion raster;
  WorldPred pred;   // exact world test, when the region has one
  PointSet pts = 0;
};

struct Model {
  std::string name, title, backend;
  std::optional<GridSpace> grid, targetGrid;
  std::optional<FiniteSpace> fin, targetFin;
  std::map<std::string, Shape> shapes;
  std::map<std::string, PointMap> maps;
  std::vector<std::string> regionOrder;
  std::map<std::string, RegionRec> regions;
  Tessellation tess;
  StrongProximityKind defaultKind;
  std::vector<std::string> renderList;
  const ojson* checks = nullptr;

  bool isGrid() const { return backend == "grid"; }
};

StrongProximityKind kindFrom(const ojson& j, const StrongProximityKind& def,
                             const std::string& where, const char* variantKey = "variant") {
  StrongProximityKind k = def;
  if (j.is_object() && j.contains(variantKey)) {
    const std::string v = asString(j.at(variantKey), where + "." + variantKey);
    const auto parsed = variantFromName(v);
    if (!parsed) fail(where + "." + variantKey, "unknown variant '" + v + "'");
    k.variant = *parsed;
  }
  k.wholeSpaceClause = optBool(j, "whole_space", k.wholeSpaceClause, where);
  k.singletonClauses = optBool(j, "singletons", k.singletonClauses, where);
  return k;
}

GridSpace parseGrid(const ojson& j, int adjacencyOverride, const std::string& where) {
  const int w = asInt(field(j, "width", where), where + ".width");
  const int h = asInt(field(j, "height", where), where + ".height");
  const ojson& win = field(j, "window", where);
  if (!win.is_array() || win.size() != 4) fail(where + ".window", "expected [x0, y0, x1, y1]");
  Window window{asNumber(win[0], where + ".window[0]"), asNumber(win[1], where + ".window[1]"),
                asNumber(win[2], where + ".window[2]"), asNumber(win[3], where + ".window[3]")};
  int adj = optInt(j, "adjacency", 8, where);
  if (adjacencyOverride != 0) adj = adjacencyOverride;
  const bool was = optBool(j, "window_as_space", true, where);
  try {
    return GridSpace(w, h, window, adj, was);
  } catch (const ProxError& e) {
    fail(where, e.what());
  }
}

FiniteSpace parseFinite(const ojson& j, const std::string& where) {
  const ojson& pts = field(j, "points", where);
  if (!pts.is_array() || pts.empty()) fail(where + ".points", "expected a list of point names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < pts.size(); ++i)
    names.push_back(asString(pts[i], where + ".points[" + std::to_string(i) + "]"));
  auto parseSets = [&](const ojson& arr, const std::string& w) {
    std::vector<PointSet> sets;
    if (!arr.is_array()) fail(w, "expected a list of point-name lists");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string wi = w + "[" + std::to_string(i) + "]";
      if (!arr[i].is_array()) fail(wi, "expected a list of point names");
      PointSet s = 0;
      for (std::size_t k = 0; k < arr[i].size(); ++k) {
        const std::string nm = asString(arr[i][k], wi + "[" + std::to_string(k) + "]");
        const auto it = std::find(names.begin(), names.end(), nm);
        if (it == names.end()) fail(wi, "unknown point '" + nm + "'");
        s |= (1u << (it - names.begin()));
      }
      sets.push_back(s);
    }
    return sets;
  };
  try {
    if (j.contains("basis")) return FiniteSpace::generate(names, parseSets(j.at("basis"), where + ".basis"));
    if (j.contains("opens")) return FiniteSpace::fromOpens(names, parseSets(j.at("opens"), where + ".opens"));
  } catch (const ProxError& e) {
    fail(where, e.what());
  }
  fail(where, "needs either 'basis' or 'opens'");
}

const Shape& shapeRef(const Model& m, const ojson& j, const std::string& where) {
  const std::string n = asString(j, where);
  const auto it = m.shapes.find(n);
  if (it == m.shapes.end()) fail(where, "unknown shape '" + n + "'");
  return it->second;
}

const PointMap& mapRef(const Model& m, const ojson& j, const std::string& where) {
  const std::string n = asString(j, where);
  const auto it = m.maps.find(n);
  if (it == m.maps.end()) fail(where, "unknown map '" + n + "'");
  return it->second;
}

const RegionRec& regionRef(const Model& m, const ojson& j, const std::string& where) {
  const std::string n = asString(j, where);
  const auto it = m.regions.find(n);
  if (it == m.regions.end()) fail(where, "unknown region '" + n + "'");
  return it->second;
}

MaskExpr parseMask(const Model& m, const ojson& j, const std::string& where) {
  if (!j.is_object() || j.size() != 1) fail(where, "expected a mask object with one key");
  try {
    if (j.contains("inside")) return maskInside(shapeRef(m, j.at("inside"), where + ".inside"));
    if (j.contains("outside")) return maskOutside(shapeRef(m, j.at("outside"), where + ".outside"));
    if (j.contains("not")) return maskNot(parseMask(m, j.at("not"), where + ".not"));
    if (j.contains("all_of") || j.contains("any_of")) {
      const bool all = j.contains("all_of");
      const ojson& arr = all ? j.at("all_of") : j.at("any_of");
      const std::string w = where + (all ? ".all_of" : ".any_of");
      if (!arr.is_array() || arr.empty()) fail(w, "expected a non-empty list of masks");
      std::vector<MaskExpr> parts;
      for (std::size_t i = 0; i < arr.size(); ++i)
        parts.push_back(parseMask(m, arr[i], w + "[" + std::to_string(i) + "]"));
      return all ? maskAllOf(std::move(parts)) : maskAnyOf(std::move(parts));
    }
    if (j.contains("image_of")) {
      const ojson& im = j.at("image_of");
      const std::string w = where + ".image_of";
      return maskImageOf(mapRef(m, field(im, "map", w), w + ".map"),
                         parseMask(m, field(im, "mask", w), w + ".mask"));
    }
  } catch (const ProxError& e) {
    if (dynamic_cast<const SceneError*>(&e)) throw;
    fail(where, e.what());
  }
  fail(where, "unknown mask kind");
}

void parseShapes(Model& m, const ojson& j) {
  if (!j.contains("shapes")) return;
  const ojson& arr = j.at("shapes");
  if (!arr.is_array()) fail("shapes", "expected a list");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "shapes[" + std::to_string(i) + "]";
    const ojson& s = arr[i];
    const std::string name = asString(field(s, "name", where), where + ".name");
    if (m.shapes.count(name)) fail(where + ".name", "duplicate shape '" + name + "'");
    const std::string kind = asString(field(s, "kind", where), where + ".kind");
    const bool closed = optBool(s, "closed", true, where);
    try {
      if (kind == "disk") {
        m.shapes.emplace(name, makeDisk(asVec2(field(s, "center", where), where + ".center"),
                                        asNumber(field(s, "radius", where), where + ".radius"),
                                        closed));
      } else if (kind == "triangle") {
        m.shapes.emplace(name, makeTriangle(asVec2(field(s, "a", where), where + ".a"),
                                            asVec2(field(s, "b", where), where + ".b"),
                                            asVec2(field(s, "c", where), where + ".c"), closed));
      } else if (kind == "rect") {
        m.shapes.emplace(name, makeRect(asVec2(field(s, "a", where), where + ".a"),
                                        asVec2(field(s, "b", where), where + ".b"), closed));
      } else if (kind == "union") {
        const ojson& parts = field(s, "parts", where);
        if (!parts.is_array() || parts.empty())
          fail(where + ".parts", "expected a non-empty list of shape names");
        std::vector<Shape> ps;
        for (std::size_t k = 0; k < parts.size(); ++k)
          ps.push_back(shapeRef(m, parts[k], where + ".parts[" + std::to_string(k) + "]"));
        m.shapes.emplace(name, makeUnion(std::move(ps)));
      } else if (kind == "complement") {
        m.shapes.emplace(name, makeComplement(shapeRef(m, field(s, "of", where), where + ".of")));
      } else {
        fail(where + ".kind", "unknown shape kind '" + kind + "'");
      }
    } catch (const ProxError& e) {
      if (dynamic_cast<const SceneError*>(&e)) throw;
      fail(where, e.what());
    }
  }
}

int pointIndex(const FiniteSpace& sp, const std::string& name, const std::string& where) {
  const int i = sp.indexOf(name);
  if (i < 0) fail(where, "unknown point '" + name + "'");
  return i;
}

void parseMaps(Model& m, const ojson& j) {
  if (!j.contains("maps")) return;
  const ojson& arr = j.at("maps");
  if (!arr.is_array()) fail("maps", "expected a list");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "maps[" + std::to_string(i) + "]";
    const ojson& s = arr[i];
    const std::string name = asString(field(s, "name", where), where + ".name");
    if (m.maps.count(name)) fail(where + ".name", "duplicate map '" + name + "'");
    const std::string kind = asString(field(s, "kind", where), where + ".kind");
    try {
      if (kind == "identity") {
        m.maps.emplace(name, makeIdentity());
      } else if (kind == "rotation") {
        m.maps.emplace(name,
                       makeRotation(asVec2(field(s, "center", where), where + ".center"),
                                    asNumber(field(s, "angle_deg", where), where + ".angle_deg")));
      } else if (kind == "inversion") {
        std::shared_ptr<const MaskExpr> domain;
        if (s.contains("domain"))
          domain = std::make_shared<const MaskExpr>(
              parseMask(m, s.at("domain"), where + ".domain"));
        m.maps.emplace(name, makeInversion(asVec2(field(s, "center", where), where + ".center"),
                                           asNumber(field(s, "k", where), where + ".k"), domain));
      } else if (kind == "scale") {
        m.maps.emplace(name, makeScale(asVec2(field(s, "center", where), where + ".center"),
                                       asNumber(field(s, "sx", where), where + ".sx"),
                                       asNumber(field(s, "sy", where), where + ".sy")));
      } else if (kind == "pixel_translation") {
        m.maps.emplace(name, makePixelTranslation(asInt(field(s, "dx", where), where + ".dx"),
                                                  asInt(field(s, "dy", where), where + ".dy")));
      } else if (kind == "table") {
        if (!m.fin) fail(where, "table maps need a finite backend");
        const FiniteSpace& target = m.targetFin ? *m.targetFin : *m.fin;
        const ojson& tab = field(s, "table", where);
        if (!tab.is_array()) fail(where + ".table", "expected a list of target point names");
        std::vector<int> table;
        for (std::size_t k = 0; k < tab.size(); ++k) {
          const std::string w = where + ".table[" + std::to_string(k) + "]";
          table.push_back(pointIndex(target, asString(tab[k], w), w));
        }
        m.maps.emplace(name, makeTable(std::move(table)));
      } else if (kind == "pipeline") {
        const ojson& st = field(s, "stages", where);
        if (!st.is_array() || st.empty())
          fail(where + ".stages", "expected a non-empty list of map names");
        std::vector<PointMap> stages;
        for (std::size_t k = 0; k < st.size(); ++k)
          stages.push_back(mapRef(m, st[k], where + ".stages[" + std::to_string(k) + "]"));
        m.maps.emplace(name, makeComposition(std::move(stages)));
      } else if (kind == "masked") {
        m.maps.emplace(name, makeMasked(mapRef(m, field(s, "inner", where), where + ".inner"),
                                        parseMask(m, field(s, "mask", where), where + ".mask")));
      } else {
        fail(where + ".kind", "unknown map kind '" + kind + "'");
      }
    } catch (const ProxError& e) {
      if (dynamic_cast<const SceneError*>(&e)) throw;
      fail(where, e.what());
    }
  }
}

void parseRegions(Model& m, const ojson& j) {
  if (!j.contains("regions")) return;
  const ojson& arr = j.at("regions");
  if (!arr.is_array()) fail("regions", "expected a list");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "regions[" + std::to_string(i) + "]";
    const ojson& s = arr[i];
    const std::string name = asString(field(s, "name", where), where + ".name");
    if (m.regions.count(name)) fail(where + ".name", "duplicate region '" + name + "'");
    RegionRec rec;
    try {
      if (s.contains("points")) {
        if (!m.fin) fail(where, "'points' regions need a finite backend");
        const ojson& pts = s.at("points");
        if (!pts.is_array()) fail(where + ".points", "expected a list of point names");
        for (std::size_t k = 0; k < pts.size(); ++k) {
          const std::string w = where + ".points[" + std::to_string(k) + "]";
          rec.pts |= (1u << pointIndex(*m.fin, asString(pts[k], w), w));
        }
      } else if (!m.isGrid()) {
        fail(where, "finite regions are defined by 'points'");
      } else if (s.contains("shape")) {
        const Shape& sh = shapeRef(m, s.at("shape"), where + ".shape");
        rec.raster = rasterize(*m.grid, sh);
        rec.pred = [sh](Vec2 p) { return contains(sh, p); };
      } else if (s.contains("union") || s.contains("intersect")) {
        const bool uni = s.contains("union");
        const ojson& parts = uni ? s.at("union") : s.at("intersect");
        const std::string w = where + (uni ? ".union" : ".intersect");
        if (!parts.is_array() || parts.empty()) fail(w, "expected a non-empty list of regions");
        std::vector<WorldPred> preds;
        bool allPreds = true;
        for (std::size_t k = 0; k < parts.size(); ++k) {
          const RegionRec& part = regionRef(m, parts[k], w + "[" + std::to_string(k) + "]");
          if (k == 0)
            rec.raster = part.raster;
          else if (uni)
            rec.raster.bits |= part.raster.bits;
          else
            rec.raster.bits &= part.raster.bits;
          preds.push_back(part.pred);
          allPreds = allPreds && static_cast<bool>(part.pred);
        }
        if (allPreds)
          rec.pred = [preds, uni](Vec2 p) {
            for (const WorldPred& q : preds) {
              if (uni && q(p)) return true;
              if (!uni && !q(p)) return false;
            }
            return !uni;
          };
      } else if (s.contains("image")) {
        const ojson& im = s.at("image");
        const std::string w = where + ".image";
        const PointMap& f = mapRef(m, field(im, "map", w), w + ".map");
        const RegionRec& src = regionRef(m, field(im, "of", w), w + ".of");
        rec.raster = applyRegion(f, src.raster, *m.grid, *m.grid, src.pred);
      } else if (s.contains("closure")) {
        rec.raster = closure(*m.grid, regionRef(m, s.at("closure"), where + ".closure").raster);
      } else if (s.contains("interior")) {
        rec.raster = interior(*m.grid, regionRef(m, s.at("interior"), where + ".interior").raster);
      } else if (s.contains("pixel_at")) {
        const Vec2 p = asVec2(s.at("pixel_at"), where + ".pixel_at");
        int ix, iy;
        if (!m.grid->nearestPixel(p, ix, iy)) fail(where + ".pixel_at", "point is outside the window");
        rec.raster = emptyRegion(*m.grid);
        rec.raster.set(ix, iy);
      } else {
        fail(where, "unknown region kind");
      }
    } catch (const ProxError& e) {
      if (dynamic_cast<const SceneError*>(&e)) throw;
      fail(where, e.what());
    }
    m.regionOrder.push_back(name);
    m.regions.emplace(name, std::move(rec));
  }
}

void parseCells(Model& m, const ojson& j) {
  if (!j.contains("cells")) return;
  const ojson& arr = j.at("cells");
  if (!arr.is_array()) fail("cells", "expected a list");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "cells[" + std::to_string(i) + "]";
    const ojson& s = arr[i];
    ColoredCell c;
    c.name = asString(field(s, "name", where), where + ".name");
    c.shape = shapeRef(m, field(s, "shape", where), where + ".shape");
    try {
      c.colors = parseColors(asString(field(s, "colors", where), where + ".colors"));
    } catch (const ProxError& e) {
      fail(where + ".colors", e.what());
    }
    m.tess.cells.push_back(std::move(c));
  }
}

Model buildModel(const ojson& j, const RunOptions& opt) {
  Model m;
  if (!j.is_object()) fail("$", "scene must be a JSON object");
  if (optInt(j, "version", 0, "$") != 1) fail("version", "expected schema version 1");
  m.name = asString(field(j, "name", "$"), "name");
  m.title = optString(j, "title", "", "$");
  m.backend = asString(field(j, "backend", "$"), "backend");
  if (m.backend != "grid" && m.backend != "finite")
    fail("backend", "expected 'grid' or 'finite'");
  if (m.isGrid()) {
    m.grid = parseGrid(field(j, "grid", "$"), opt.adjacency, "grid");
    if (j.contains("target_grid"))
      m.targetGrid = parseGrid(j.at("target_grid"), opt.adjacency, "target_grid");
  } else {
    m.fin = parseFinite(field(j, "finite", "$"), "finite");
    if (j.contains("target_finite"))
      m.targetFin = parseFinite(j.at("target_finite"), "target_finite");
  }
  if (j.contains("proximity")) m.defaultKind = kindFrom(j.at("proximity"), {}, "proximity");
  parseShapes(m, j);
  parseMaps(m, j);
  parseRegions(m, j);
  parseCells(m, j);
  if (j.contains("render")) {
    const ojson& r = field(j.at("render"), "regions", "render");
    if (!r.is_array()) fail("render.regions", "expected a list of region names");
    for (std::size_t i = 0; i < r.size(); ++i) {
      const std::string w = "render.regions[" + std::to_string(i) + "]";
      const std::string n = asString(r[i], w);
      if (!m.regions.count(n)) fail(w, "unknown region '" + n + "'");
      m.renderList.push_back(n);
    }
  } else {
    m.renderList = m.regionOrder;
  }
  if (!j.contains("checks") || !j.at("checks").is_array())
    fail("checks", "expected a list of checks");
  m.checks = &j.at("checks");
  return m;
}

// ---- check execution ----

std::vector<std::string> nameList(const ojson& arr, const std::string& where) {
  if (!arr.is_array() || arr.empty()) fail(where, "expected a non-empty list of region names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(asString(arr[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::string joinNames(const std::vector<std::string>& names, const std::vector<int>& idx) {
  std::string s;
  for (int i : idx) {
    if (!s.empty()) s += " -> ";
    s += names[static_cast<std::size_t>(i)];
  }
  return s;
}

// Family of named sets on whichever backend the scene uses.
struct Family {
  std::vector<std::string> names;
  std::vector<GridRegion> rasters;
  std::vector<WorldPred> preds;
  std::vector<PointSet> pts;
};

Family familyFrom(const Model& m, const ojson& arr, const std::string& where) {
  Family f;
  f.names = nameList(arr, where);
  for (std::size_t i = 0; i < f.names.size(); ++i) {
    const RegionRec& r = regionRef(m, ojson(f.names[i]), where + "[" + std::to_string(i) + "]");
    if (m.isGrid()) {
      f.rasters.push_back(r.raster);
      f.preds.push_back(r.pred);
    } else {
      f.pts.push_back(r.pts);
    }
  }
  return f;
}

// A single set reference: a region name, or (grid) [x, y], or (finite) a
// point name, the latter two yielding singletons.
struct SetRef {
  GridRegion raster;
  PointSet pts = 0;
  std::string label;
};

SetRef setRef(const Model& m, const ojson& j, const std::string& where) {
  SetRef s;
  if (j.is_array()) {
    if (!m.isGrid()) fail(where, "coordinate points need a grid backend");
    const Vec2 p = asVec2(j, where);
    int ix, iy;
    if (!m.grid->nearestPixel(p, ix, iy)) fail(where, "point is outside the window");
    s.raster = emptyRegion(*m.grid);
    s.raster.set(ix, iy);
    s.label = "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
    return s;
  }
  const std::string n = asString(j, where);
  const auto it = m.regions.find(n);
  if (it != m.regions.end()) {
    s.raster = it->second.raster;
    s.pts = it->second.pts;
    s.label = n;
    return s;
  }
  if (!m.isGrid()) {
    const int i = m.fin->indexOf(n);
    if (i >= 0) {
      s.pts = 1u << i;
      s.label = n;
      return s;
    }
  }
  fail(where, "unknown region or point '" + n + "'");
}

std::string verdictOf(bool pass) { return pass ? "pass" : "fail"; }

void checkExpect(const std::string& e, const std::string& where) {
  if (e != "pass" && e != "fail" && e != "none-found" && e != "error")
    fail(where, "expect must be pass, fail, none-found or error");
}

// Runs one check; with dry=true only resolves references and validates
// fields. The record's ok/verdict are filled by the caller's expect logic.
CheckRecord executeCheck(const Model& m, const ojson& c, const std::string& where,
                         const RunOptions& opt, std::size_t index, bool dry) {
  CheckRecord rec;
  const std::string type = asString(field(c, "type", where), where + ".type");
  rec.type = type;
  rec.name = optString(c, "name", type + "#" + std::to_string(index + 1), where);
  rec.expect = optString(c, "expect", "pass", where);
  checkExpect(rec.expect, where + ".expect");
  const StrongProximityKind kind = kindFrom(c, m.defaultKind, where);
  const std::uint64_t checkSeed = opt.seed ^ (0x9e3779b97f4a7c15ull * (index + 1));

  auto gridOnly = [&]() {
    if (!m.isGrid()) fail(where, "'" + type + "' needs a grid backend");
  };
  auto finiteOnly = [&]() {
    if (m.isGrid()) fail(where, "'" + type + "' needs a finite backend");
  };

  if (type == "near") {
    const SetRef a = setRef(m, field(c, "a", where), where + ".a");
    const SetRef b = setRef(m, field(c, "b", where), where + ".b");
    if (dry) return rec;
    const bool near = m.isGrid() ? stronglyNear(kind, *m.grid, a.raster, b.raster)
                                 : stronglyNear(kind, *m.fin, a.pts, b.pts);
    rec.verdict = verdictOf(near);
    rec.detail = a.label + (near ? " is strongly near " : " is not strongly near ") + b.label;
    rec.extra["near"] = near;
  } else if (type == "axioms") {
    const ojson& fam = field(c, "family", where);
    const bool all = fam.is_string() && fam.get<std::string>() == "all";
    if (all && m.isGrid()) fail(where + ".family", "'all' needs a finite backend");
    Family f;
    if (!all) f = familyFrom(m, fam, where + ".family");
    if (dry) return rec;
    AxiomReport rep;
    if (m.isGrid()) {
      rep = checkAxioms(kind, *m.grid, f.rasters, checkSeed);
    } else if (all) {
      std::vector<PointSet> sets;
      for (PointSet s = 0; s <= m.fin->carrier(); ++s) sets.push_back(s);
      rep = checkAxioms(kind, *m.fin, sets, checkSeed);
    } else {
      rep = checkAxioms(kind, *m.fin, f.pts, checkSeed);
    }
    rec.verdict = verdictOf(rep.allPass);
    ojson arr = ojson::array();
    for (const AxiomResult& a : rep.axioms) {
      ojson e;
      e["axiom"] = a.axiom;
      e["pass"] = a.pass;
      e["checked"] = a.checked;
      if (!a.witness.empty()) e["witness"] = a.witness;
      arr.push_back(e);
      if (!a.pass && rec.detail.empty()) rec.detail = a.axiom + ": " + a.witness;
    }
    rec.extra["axioms"] = arr;
  } else if (type == "connected") {
    const SetRef s = setRef(m, field(c, "set", where), where + ".set");
    if (dry) return rec;
    const bool conn =
        m.isGrid() ? isConnected(*m.grid, s.raster) : isConnected(*m.fin, s.pts);
    rec.verdict = verdictOf(conn);
    rec.detail = s.label + (conn ? " is connected" : " is not connected");
  } else if (type == "verify_decomposition") {
    const SetRef target = setRef(m, field(c, "target", where), where + ".target");
    const Family pieces = familyFrom(m, field(c, "pieces", where), where + ".pieces");
    if (dry) return rec;
    const VerifyResult v = m.isGrid()
                               ? verifyDecomposition(kind, *m.grid, target.raster, pieces.rasters)
                               : verifyDecomposition(kind, *m.fin, target.pts, pieces.pts);
    rec.verdict = verdictOf(v.ok);
    rec.detail = v.failure;
  } else if (type == "find_decomposition") {
    const SetRef target = setRef(m, field(c, "target", where), where + ".target");
    const Family cand = familyFrom(m, field(c, "candidates", where), where + ".candidates");
    int maxPieces = optInt(c, "max_pieces", kMaxSearchCandidates, where);
    if (opt.maxPieces > 0) maxPieces = opt.maxPieces;
    if (dry) return rec;
    const auto found =
        m.isGrid()
            ? findDecomposition(kind, *m.grid, target.raster, cand.rasters, maxPieces)
            : findDecomposition(kind, *m.fin, target.pts, cand.pts, maxPieces);
    rec.verdict = found ? "pass" : "none-found";
    if (found) {
      rec.detail = "pieces: " + joinNames(cand.names, *found);
      rec.extra["pieces"] = ojson::array();
      for (int i : *found) rec.extra["pieces"].push_back(cand.names[static_cast<std::size_t>(i)]);
    }
  } else if (type == "find_strong_chain") {
    const Family cover = familyFrom(m, field(c, "cover", where), where + ".cover");
    const SetRef a = setRef(m, field(c, "from", where), where + ".from");
    const SetRef b = setRef(m, field(c, "to", where), where + ".to");
    if (dry) return rec;
    const auto found = m.isGrid()
                           ? findStrongChain(kind, *m.grid, cover.rasters, a.raster, b.raster)
                           : findStrongChain(kind, *m.fin, cover.pts, a.pts, b.pts);
    rec.verdict = found ? "pass" : "none-found";
    if (found) {
      rec.detail = "chain: " + joinNames(cover.names, *found);
      rec.extra["chain"] = ojson::array();
      for (int i : *found) rec.extra["chain"].push_back(cover.names[static_cast<std::size_t>(i)]);
    }
  } else if (type == "closure_theorem") {
    const Family pieces = familyFrom(m, field(c, "pieces", where), where + ".pieces");
    if (dry) return rec;
    const bool ok = m.isGrid() ? closureTheoremCheck(kind, *m.grid, pieces.rasters)
                               : closureTheoremCheck(kind, *m.fin, pieces.pts);
    rec.verdict = verdictOf(ok);
  } else if (type == "between_theorem") {
    const Family pieces = familyFrom(m, field(c, "pieces", where), where + ".pieces");
    const SetRef g = setRef(m, field(c, "set", where), where + ".set");
    if (dry) return rec;
    const bool ok = m.isGrid() ? betweenTheoremCheck(kind, *m.grid, pieces.rasters, g.raster)
                               : betweenTheoremCheck(kind, *m.fin, pieces.pts, g.pts);
    rec.verdict = verdictOf(ok);
  } else if (type == "countable_criterion") {
    const Family pieces = familyFrom(m, field(c, "pieces", where), where + ".pieces");
    const ojson& ws = field(c, "witnesses", where);
    if (!ws.is_array()) fail(where + ".witnesses", "expected a list");
    std::vector<CountableWitness<GridRegion>> gws;
    std::vector<CountableWitness<PointSet>> fws;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const std::string w = where + ".witnesses[" + std::to_string(i) + "]";
      const SetRef pt = setRef(m, field(ws[i], "point", w), w + ".point");
      const SetRef op = setRef(m, field(ws[i], "open", w), w + ".open");
      if (m.isGrid())
        gws.push_back({pt.raster, op.raster});
      else
        fws.push_back({pt.pts, op.pts});
    }
    if (dry) return rec;
    const bool ok = m.isGrid() ? countableCriterionCheck(kind, *m.grid, pieces.rasters, gws)
                               : countableCriterionCheck(kind, *m.fin, pieces.pts, fws);
    rec.verdict = verdictOf(ok);
  } else if (type == "spc" || type == "open_map" || type == "image_preservation") {
    const PointMap& f = mapRef(m, field(c, "map", where), where + ".map");
    const StrongProximityKind kx = kindFrom(c, m.defaultKind, where, "from_variant");
    const StrongProximityKind ky = kindFrom(c, m.defaultKind, where, "to_variant");
    if (type == "spc") {
      const Family fam = familyFrom(m, field(c, "family", where), where + ".family");
      const std::string assert_ = optString(c, "assert", "both", where);
      if (assert_ != "both" && assert_ != "spc" && assert_ != "spe")
        fail(where + ".assert", "assert must be both, spc or spe");
      if (dry) return rec;
      SpcReport r;
      if (m.isGrid()) {
        const GridSpace& gy = m.targetGrid ? *m.targetGrid : *m.grid;
        r = spcCheck(kx, *m.grid, ky, gy, f, fam.rasters, fam.names, fam.preds);
      } else {
        const FiniteSpace& fy = m.targetFin ? *m.targetFin : *m.fin;
        const auto* table = std::get_if<TableMap>(&f.node);
        if (!table) fail(where + ".map", "finite spc needs a table map");
        r = spcCheck(kx, *m.fin, ky, fy, *table, fam.pts, fam.names);
      }
      const bool pass = (assert_ == "spc" && r.spcOk) || (assert_ == "spe" && r.speOk) ||
                        (assert_ == "both" && r.spcOk && r.speOk);
      rec.verdict = verdictOf(pass);
      if (!r.spcOk) rec.detail = "nearness lost at " + r.spcWitness;
      else if (!r.speOk && assert_ != "spc") rec.detail = "nearness gained at " + r.speWitness;
      rec.extra["assert"] = assert_;
      rec.extra["spc_ok"] = r.spcOk;
      rec.extra["spe_ok"] = r.speOk;
      if (!r.spcWitness.empty()) rec.extra["spc_witness"] = r.spcWitness;
      if (!r.speWitness.empty()) rec.extra["spe_witness"] = r.speWitness;
      rec.extra["ordered_pairs"] = r.orderedPairs;
      rec.extra["near_pairs"] = r.nearPairs;
    } else if (type == "open_map") {
      const Family fam = familyFrom(m, field(c, "samples", where), where + ".samples");
      if (dry) return rec;
      OpenMapReport r;
      if (m.isGrid()) {
        const GridSpace& gy = m.targetGrid ? *m.targetGrid : *m.grid;
        r = openMapCheck(*m.grid, gy, f, fam.rasters, fam.names, fam.preds);
      } else {
        const FiniteSpace& fy = m.targetFin ? *m.targetFin : *m.fin;
        const auto* table = std::get_if<TableMap>(&f.node);
        if (!table) fail(where + ".map", "finite open-map checks need a table map");
        r = openMapCheck(*m.fin, fy, *table, fam.pts, fam.names);
      }
      rec.verdict = verdictOf(r.ok);
      rec.detail = r.witness;
      rec.extra["samples"] = r.samples;
    } else {
      const SetRef target = setRef(m, field(c, "target", where), where + ".target");
      const Family pieces = familyFrom(m, field(c, "pieces", where), where + ".pieces");
      if (dry) return rec;
      bool ok;
      if (m.isGrid()) {
        const GridSpace& gy = m.targetGrid ? *m.targetGrid : *m.grid;
        ok = imagePreservationCheck(kx, *m.grid, ky, gy, f, target.raster, pieces.rasters);
      } else {
        const FiniteSpace& fy = m.targetFin ? *m.targetFin : *m.fin;
        const auto* table = std::get_if<TableMap>(&f.node);
        if (!table) fail(where + ".map", "finite image preservation needs a table map");
        ok = imagePreservationCheck(kx, *m.fin, ky, fy, *table, target.pts, pieces.pts);
      }
      rec.verdict = verdictOf(ok);
    }
  } else if (type == "generated_opens") {
    finiteOnly();
    if (dry) return rec;
    const auto opens = generatedOpens(kind, *m.fin);
    const int expectCount = optInt(c, "expect_count", -1, where);
    const bool pass = expectCount < 0 || static_cast<int>(opens.size()) == expectCount;
    rec.verdict = verdictOf(pass);
    rec.extra["count"] = opens.size();
    rec.extra["sets"] = ojson::array();
    for (PointSet s : opens) rec.extra["sets"].push_back(m.fin->describe(s));
    if (!pass)
      rec.detail = "generated " + std::to_string(opens.size()) + " sets, expected " +
                   std::to_string(expectCount);
  } else if (type == "compatible") {
    finiteOnly();
    if (dry) return rec;
    const CompatibilityResult r = isCompatible(kind, *m.fin);
    rec.verdict = verdictOf(r.compatible);
    rec.extra["intersection_condition"] = r.intersectionHolds;
    rec.extra["generation_matches"] = r.generationMatches;
    rec.extra["generated_count"] = r.generated.size();
    if (!r.intersectionHolds) rec.detail = r.intersectionWitness;
  } else if (type == "intersection_condition") {
    finiteOnly();
    if (dry) return rec;
    const IntersectionConditionResult r = intersectionCondition(kind, *m.fin);
    rec.verdict = verdictOf(r.holds);
    rec.detail = r.witness;
  } else if (type == "hyper") {
    finiteOnly();
    const std::string missName = optString(c, "miss", "closureOverlap", where);
    if (missName != "closureOverlap" && missName != "overlap")
      fail(where + ".miss", "miss must be closureOverlap or overlap");
    const std::string mv = optString(c, "miss_variant", "plus", where);
    if (mv != "plus" && mv != "plusPlus")
      fail(where + ".miss_variant", "miss_variant must be plus or plusPlus");
    if (dry) return rec;
    PlainProximity miss{missName == "overlap" ? PlainProximity::Kind::overlap
                                              : PlainProximity::Kind::closureOverlap};
    const HyperSpace h = buildHyper(kind, miss,
                                    mv == "plus" ? MissVariant::plus : MissVariant::plusPlus,
                                    *m.fin);
    const int em = optInt(c, "expect_members", -1, where);
    const int eo = optInt(c, "expect_opens", -1, where);
    const bool pass = (em < 0 || static_cast<int>(h.members.size()) == em) &&
                      (eo < 0 || static_cast<int>(h.opens.size()) == eo);
    rec.verdict = verdictOf(pass);
    rec.extra["members"] = h.members.size();
    rec.extra["member_names"] = ojson::array();
    for (const std::string& n : h.memberNames) rec.extra["member_names"].push_back(n);
    rec.extra["subbase_size"] = h.subbase.size();
    rec.extra["base_size"] = h.base.size();
    rec.extra["opens"] = h.opens.size();
  } else if (type == "homeomorphism_theorem") {
    finiteOnly();
    const PointMap& f = mapRef(m, field(c, "map", where), where + ".map");
    const auto* table = std::get_if<TableMap>(&f.node);
    if (!table) fail(where + ".map", "the homeomorphism harness needs a table map");
    const StrongProximityKind kx = kindFrom(c, m.defaultKind, where, "from_variant");
    const StrongProximityKind ky = kindFrom(c, m.defaultKind, where, "to_variant");
    if (dry) return rec;
    const FiniteSpace& fy = m.targetFin ? *m.targetFin : *m.fin;
    rec.verdict = verdictOf(homeomorphismTheoremCheck(kx, *m.fin, ky, fy, *table));
  } else if (type == "descriptor_of") {
    gridOnly();
    if (m.tess.cells.empty()) fail(where, "the scene declares no cells");
    const Vec2 p = asVec2(field(c, "at", where), where + ".at");
    const std::string expect = optString(c, "expect_descriptor", "", where);
    if (dry) return rec;
    const std::string got = colorsName(m.tess.descriptorOf(p));
    rec.verdict = verdictOf(expect.empty() || got == expect);
    rec.detail = "descriptor " + got;
    rec.extra["descriptor"] = got;
  } else if (type == "descriptive_spc") {
    gridOnly();
    if (m.tess.cells.empty()) fail(where, "the scene declares no cells");
    const ojson& fam = field(c, "family", where);
    if (!fam.is_array() || fam.empty()) fail(where + ".family", "expected a non-empty list");
    std::vector<TimedRegion> tf;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      const std::string w = where + ".family[" + std::to_string(i) + "]";
      TimedRegion tr;
      tr.name = asString(field(fam[i], "region", w), w + ".region");
      tr.region = regionRef(m, ojson(tr.name), w + ".region").raster;
      tr.instant = optInt(fam[i], "instant", 0, w);
      tr.cell = asString(field(fam[i], "cell", w), w + ".cell");
      tf.push_back(std::move(tr));
    }
    const StrongProximityKind dk = kindFrom(c, {}, where, "descriptor_variant");
    if (dry) return rec;
    const DescriptiveReport r = descriptiveSpcCheck(kind, dk, *m.grid, m.tess, tf);
    rec.verdict = verdictOf(r.ok);
    rec.detail = r.ok ? "" : "descriptive nearness lost at " + r.witness;
    rec.extra["images"] = ojson::array();
    for (const auto& [name, img] : r.images) {
      ojson e;
      e["region"] = name;
      e["descriptors"] = descriptorSpace().describe(img);
      rec.extra["images"].push_back(e);
    }
    rec.extra["pairs"] = ojson::array();
    for (const DescriptivePair& p : r.pairs) {
      ojson e;
      e["a"] = p.a;
      e["b"] = p.b;
      e["same_instant"] = p.sameInstant;
      if (p.sameInstant) {
        e["spatially_near"] = p.spatiallyNear;
        e["descriptively_near"] = p.descriptivelyNear;
        e["ok"] = p.ok;
      }
      if (!p.note.empty()) e["note"] = p.note;
      rec.extra["pairs"].push_back(e);
    }
  } else {
    fail(where + ".type", "unknown check type '" + type + "'");
  }
  return rec;
}

CheckRecord runOneCheck(const Model& m, const ojson& c, const std::string& where,
                        const RunOptions& opt, std::size_t index) {
  const auto start = std::chrono::steady_clock::now();
  CheckRecord rec;
  try {
    rec = executeCheck(m, c, where, opt, index, false);
  } catch (const SceneError&) {
    throw;  // malformed scene, not a model-level outcome
  } catch (const ProxError& e) {
    rec.type = asString(field(c, "type", where), where + ".type");
    rec.name = optString(c, "name", rec.type + "#" + std::to_string(index + 1), where);
    rec.expect = optString(c, "expect", "pass", where);
    rec.verdict = "error";
    rec.detail = e.what();
  }
  rec.ok = rec.verdict == rec.expect;
  if (opt.timings)
    rec.elapsedMs = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return rec;
}

}  // namespace

Scene parseScene(const ojson& j, const std::string& origin) {
  Model m = buildModel(j, RunOptions{});
  for (std::size_t i = 0; i < m.checks->size(); ++i)
    executeCheck(m, (*m.checks)[i], "checks[" + std::to_string(i) + "]", RunOptions{}, i, true);
  Scene s;
  s.name = m.name;
  s.path = origin;
  s.j = j;
  return s;
}

Scene loadSceneFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SceneError("cannot open scene file", path);
  ojson j;
  try {
    j = ojson::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SceneError(std::string("invalid JSON: ") + e.what(), path);
  }
  Scene s = parseScene(j, path);
  return s;
}

RunResult runScene(const Scene& s, const RunOptions& opt) {
  const Model m = buildModel(s.j, opt);
  RunResult res;
  res.name = m.name;
  res.backend = m.backend;

  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < m.checks->size(); ++i) {
    const ojson& c = (*m.checks)[i];
    const std::string where = "checks[" + std::to_string(i) + "]";
    const std::string type = asString(field(c, "type", where), where + ".type");
    if (opt.types.empty() ||
        std::find(opt.types.begin(), opt.types.end(), type) != opt.types.end())
      selected.push_back(i);
  }

  res.checks.resize(selected.size());
  if (opt.parallel && selected.size() > 1) {
    std::vector<std::future<CheckRecord>> futs;
    for (std::size_t k = 0; k < selected.size(); ++k)
      futs.push_back(std::async(std::launch::async, [&, k] {
        const std::size_t i = selected[k];
        return runOneCheck(m, (*m.checks)[i], "checks[" + std::to_string(i) + "]", opt, i);
      }));
    for (std::size_t k = 0; k < selected.size(); ++k) res.checks[k] = futs[k].get();
  } else {
    for (std::size_t k = 0; k < selected.size(); ++k) {
      const std::size_t i = selected[k];
      res.checks[k] = runOneCheck(m, (*m.checks)[i], "checks[" + std::to_string(i) + "]", opt, i);
    }
  }

  for (const CheckRecord& c : res.checks) res.allOk = res.allOk && c.ok;
  res.report = makeReport(m.name, m.title, m.backend, opt.seed, res.checks);

  if (m.isGrid()) {
    std::vector<std::pair<std::string, GridRegion>> layers;
    for (const std::string& n : m.renderList) layers.emplace_back(n, m.regions.at(n).raster);
    res.svg = renderSvg(*m.grid, layers);
  } else {
    std::vector<std::pair<std::string, PointSet>> sets;
    for (const std::string& n : m.renderList) sets.emplace_back(n, m.regions.at(n).pts);
    res.finiteDump = renderFiniteText(*m.fin, sets);
  }
  return res;
}

SceneObjects sceneObjects(const Scene& s, const RunOptions& opt) {
  Model m = buildModel(s.j, opt);
  SceneObjects o;
  o.grid = std::move(m.grid);
  o.targetGrid = std::move(m.targetGrid);
  o.finite = std::move(m.fin);
  o.targetFinite = std::move(m.targetFin);
  o.regionOrder = std::move(m.regionOrder);
  for (auto& [name, rec] : m.regions) {
    if (o.grid) o.rasters.emplace(name, std::move(rec.raster));
    if (o.finite) o.pointSets.emplace(name, rec.pts);
    if (rec.pred) o.preds.emplace(name, std::move(rec.pred));
  }
  o.maps = std::move(m.maps);
  return o;
}

}  // namespace prox
