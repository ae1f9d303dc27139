#include "prox/descriptive.hpp"

#include <algorithm>

namespace prox {

namespace {
constexpr char kLetters[3] = {'g', 'r', 'b'};
}

std::uint8_t parseColors(const std::string& s) {
  std::uint8_t d = 0;
  for (char c : s) {
    bool hit = false;
    for (int i = 0; i < 3; ++i)
      if (c == kLetters[i]) {
        d |= static_cast<std::uint8_t>(1 << i);
        hit = true;
      }
    if (!hit) throw ValidationError(std::string("unknown colour letter '") + c + "'");
  }
  return d;
}

std::string colorsName(std::uint8_t d) {
  if (d == 0) return "none";
  std::string s;
  for (int i = 0; i < 3; ++i)
    if ((d >> i) & 1) s += kLetters[i];
  return s;
}

const FiniteSpace& descriptorSpace() {
  static const FiniteSpace sp = [] {
    std::vector<std::string> names;
    for (int d = 0; d < 8; ++d) names.push_back(colorsName(static_cast<std::uint8_t>(d)));
    // Probe base: two-colour and three-colour descriptors are isolated
    // points; each pure colour comes bundled with gr and the full mix.
    // Generates 45 opens.
    const std::vector<PointSet> base = {
        1u << 3,                          // {gr}
        1u << 6,                          // {rb}
        1u << 5,                          // {gb}
        1u << 7,                          // {grb}
        (1u << 7) | (1u << 3) | (1u << 2),  // {grb, gr, r}
        (1u << 7) | (1u << 3) | (1u << 1),  // {grb, gr, g}
        (1u << 7) | (1u << 3) | (1u << 4),  // {grb, gr, b}
    };
    return FiniteSpace::generate(names, base);
  }();
  return sp;
}

std::uint8_t Tessellation::descriptorOf(Vec2 p) const {
  std::uint8_t d = 0;
  for (const ColoredCell& c : cells)
    if (contains(c.shape, p)) d |= c.colors;
  return d;
}

PointSet descriptorImage(const Tessellation& t, const GridSpace& g, const GridRegion& r) {
  if (r.width != g.width() || r.height != g.height())
    throw ValidationError("region size does not match its grid");
  PointSet out = 0;
  for (auto idx = r.bits.find_first(); idx != boost::dynamic_bitset<>::npos;
       idx = r.bits.find_next(idx)) {
    const int ix = static_cast<int>(idx) % r.width;
    const int iy = static_cast<int>(idx) / r.width;
    out |= (1u << t.descriptorOf(g.pixelCenter(ix, iy)));
  }
  return out;
}

DescriptiveReport descriptiveSpcCheck(const StrongProximityKind& spatial,
                                      const StrongProximityKind& descriptive, const GridSpace& g,
                                      const Tessellation& t,
                                      const std::vector<TimedRegion>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    const TimedRegion& r = family[i];
    if (r.region.bits.none()) throw ValidationError("region " + r.name + " is empty");
    const auto cell = std::find_if(t.cells.begin(), t.cells.end(),
                                   [&](const ColoredCell& c) { return c.name == r.cell; });
    if (cell == t.cells.end())
      throw ValidationError("region " + r.name + " names unknown cell " + r.cell);
    if (!subsetOf(g, r.region, rasterize(g, cell->shape)))
      throw ValidationError("region " + r.name + " is not inside cell " + r.cell);
    for (std::size_t j = 0; j < i; ++j)
      if (family[j].cell == r.cell && family[j].instant == r.instant)
        throw ValidationError("regions " + family[j].name + " and " + r.name +
                              " share cell " + r.cell + " at instant " +
                              std::to_string(r.instant));
  }

  DescriptiveReport rep;
  std::vector<PointSet> imgs;
  for (const TimedRegion& r : family) {
    imgs.push_back(descriptorImage(t, g, r.region));
    rep.images.emplace_back(r.name, imgs.back());
  }
  const FiniteSpace& d = descriptorSpace();
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      DescriptivePair p;
      p.a = family[i].name;
      p.b = family[j].name;
      if (family[i].instant != family[j].instant) {
        p.sameInstant = false;
        p.note = "different instants; descriptors are not compared across time";
        rep.pairs.push_back(p);
        continue;
      }
      p.spatiallyNear = stronglyNear(spatial, g, family[i].region, family[j].region);
      p.descriptivelyNear = stronglyNear(descriptive, d, imgs[i], imgs[j]);
      p.ok = !p.spatiallyNear || p.descriptivelyNear;
      if (!p.ok && rep.ok) {
        rep.ok = false;
        rep.witness = p.a + "/" + p.b;
      }
      rep.pairs.push_back(p);
    }
  return rep;
}

}  // namespace prox
