#pragma once

#include <string>
#include <utility>
#include <vector>

#include "prox/finite_space.hpp"
#include "prox/grid.hpp"

namespace prox {

// Deterministic SVG: one unit per pixel, y flipped so world-up is image-up,
// regions drawn as merged row runs in declaration order with a fixed palette
// and 55% opacity. Integer coordinates only.
std::string renderSvg(const GridSpace& g,
                      const std::vector<std::pair<std::string, GridRegion>>& layers);

// Finite spaces have nothing to rasterise; render as a textual dump of the
// points, minimal neighbourhoods, opens and the supplied sets.
std::string renderFiniteText(const FiniteSpace& sp,
                             const std::vector<std::pair<std::string, PointSet>>& sets);

}  // namespace prox
