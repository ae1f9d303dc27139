#include "prox/svg.hpp"

namespace prox {

namespace {

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};
constexpr int kPaletteSize = 8;

}  // namespace

std::string renderSvg(const GridSpace& g,
                      const std::vector<std::pair<std::string, GridRegion>>& layers) {
  const int w = g.width(), h = g.height();
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) + "\" height=\"" +
       std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) +
       "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(w) + "\" height=\"" + std::to_string(h) +
       "\" fill=\"#ffffff\"/>\n";
  int li = 0;
  for (const auto& [name, region] : layers) {
    const char* color = kPalette[li++ % kPaletteSize];
    s += "<g fill=\"" + std::string(color) + "\" fill-opacity=\"0.55\"><title>" + name +
         "</title>\n";
    for (int iy = 0; iy < h; ++iy) {
      const int row = h - 1 - iy;  // world-up is image-up
      int ix = 0;
      while (ix < w) {
        if (!region.test(ix, iy)) {
          ++ix;
          continue;
        }
        int end = ix;
        while (end < w && region.test(end, iy)) ++end;
        s += "<rect x=\"" + std::to_string(ix) + "\" y=\"" + std::to_string(row) + "\" width=\"" +
             std::to_string(end - ix) + "\" height=\"1\"/>\n";
        ix = end;
      }
    }
    s += "</g>\n";
  }
  s += "</svg>\n";
  return s;
}

std::string renderFiniteText(const FiniteSpace& sp,
                             const std::vector<std::pair<std::string, PointSet>>& sets) {
  std::string s;
  s += "points:";
  for (const std::string& n : sp.names()) s += " " + n;
  s += "\n";
  for (int x = 0; x < sp.size(); ++x)
    s += "minimal neighbourhood of " + sp.names()[static_cast<std::size_t>(x)] + ": " +
         sp.describe(sp.minNbhd(x)) + "\n";
  s += "opens (" + std::to_string(sp.opens().size()) + "):";
  for (PointSet o : sp.opens()) s += " " + sp.describe(o);
  s += "\n";
  for (const auto& [name, set] : sets)
    s += name + " = " + sp.describe(set) + ", interior " + sp.describe(sp.interior(set)) +
         ", closure " + sp.describe(sp.closure(set)) + "\n";
  return s;
}

}  // namespace prox
