#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prox/grid.hpp"
#include "prox/maps.hpp"
#include "prox/report.hpp"

namespace prox {

// A validated scene description (schema version 1). Parsing checks the whole
// document - spaces, shapes, maps, regions, cells and every check's
// references - and reports problems with a field path.
struct Scene {
  std::string name;
  std::string path;  // source file when loaded from disk
  ojson j;
};

Scene parseScene(const ojson& j, const std::string& origin = "");
Scene loadSceneFile(const std::string& path);

struct RunOptions {
  std::uint64_t seed = 0;
  int adjacency = 0;               // 0 keeps the scene's setting
  int maxPieces = 0;               // 0 keeps per-check settings
  bool parallel = false;
  bool timings = false;            // off: elapsed_ms is 0 for reproducible output
  std::vector<std::string> types;  // run only these check types when nonempty
};

struct RunResult {
  std::string name;
  std::string backend;
  std::vector<CheckRecord> checks;
  ojson report;
  std::string svg;         // grid scenes
  std::string finiteDump;  // finite scenes
  bool allOk = true;
};

RunResult runScene(const Scene& s, const RunOptions& opt = {});

// The scene's resolved objects, for driving the library directly.
struct SceneObjects {
  std::optional<GridSpace> grid, targetGrid;
  std::optional<FiniteSpace> finite, targetFinite;
  std::vector<std::string> regionOrder;
  std::map<std::string, GridRegion> rasters;
  std::map<std::string, PointSet> pointSets;
  std::map<std::string, WorldPred> preds;  // regions with an exact world test
  std::map<std::string, PointMap> maps;
};

SceneObjects sceneObjects(const Scene& s, const RunOptions& opt = {});

}  // namespace prox
