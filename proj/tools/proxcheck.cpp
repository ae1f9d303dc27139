// proxcheck: run proximity checks described by a scene file and report the
// outcomes as console lines, a JSON report and an SVG rendering.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "prox/scene.hpp"

namespace {

struct Cli {
  std::string scenePath;
  std::string reportPath;
  std::string svgPath;
  std::string outPath;
  std::uint64_t seed = 0;
  int adjacency = 0;
  int maxPieces = 0;
  bool parallel = false;
  bool timings = false;
  bool quiet = false;
};

bool useColor() {
  return isatty(STDOUT_FILENO) != 0 && std::getenv("NO_COLOR") == nullptr;
}

bool writeFile(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout << data;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << data;
  return static_cast<bool>(out);
}

int runChecks(const Cli& c, const std::vector<std::string>& types, bool allowSvg) {
  try {
    const prox::Scene scene = prox::loadSceneFile(c.scenePath);
    prox::RunOptions opt;
    opt.seed = c.seed;
    opt.adjacency = c.adjacency;
    opt.maxPieces = c.maxPieces;
    opt.parallel = c.parallel;
    opt.timings = c.timings;
    opt.types = types;
    const prox::RunResult res = prox::runScene(scene, opt);

    const bool color = useColor();
    if (!c.quiet) {
      for (const prox::CheckRecord& chk : res.checks)
        std::cout << prox::consoleLine(chk, color) << "\n";
      std::size_t ok = 0;
      for (const prox::CheckRecord& chk : res.checks) ok += chk.ok ? 1 : 0;
      std::cout << res.name << ": " << ok << "/" << res.checks.size() << " checks ok\n";
    }
    if (!c.reportPath.empty() &&
        !writeFile(c.reportPath, prox::serializeReport(res.report))) {
      std::cerr << "error: cannot write report to " << c.reportPath << "\n";
      return 2;
    }
    if (!c.svgPath.empty()) {
      if (!allowSvg || res.backend != "grid") {
        std::cerr << "error: --svg needs a grid scene under 'run'\n";
        return 2;
      }
      if (!writeFile(c.svgPath, res.svg)) {
        std::cerr << "error: cannot write SVG to " << c.svgPath << "\n";
        return 2;
      }
    }
    return res.allOk ? 0 : 1;
  } catch (const prox::ProxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int renderScene(const Cli& c) {
  try {
    const prox::Scene scene = prox::loadSceneFile(c.scenePath);
    prox::RunOptions opt;
    opt.adjacency = c.adjacency;
    opt.types = {""};  // matches no check type: render without running checks
    const prox::RunResult res = prox::runScene(scene, opt);
    const std::string& data = res.backend == "grid" ? res.svg : res.finiteDump;
    const std::string dest = c.outPath.empty() ? "-" : c.outPath;
    if (!writeFile(dest, data)) {
      std::cerr << "error: cannot write to " << dest << "\n";
      return 2;
    }
    return 0;
  } catch (const prox::ProxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong-proximity scene checker for finite and pixel-grid models"};
  app.require_subcommand(1);

  Cli c;

  // Check types selected by each subcommand; empty means all.
  const std::map<std::string, std::vector<std::string>> filters = {
      {"run", {}},
      {"axioms", {"axioms"}},
      {"near", {"near", "generated_opens", "compatible", "intersection_condition"}},
      {"connect",
       {"connected", "verify_decomposition", "find_decomposition", "closure_theorem",
        "between_theorem", "countable_criterion"}},
      {"chain", {"find_strong_chain"}},
      {"spc", {"spc", "open_map", "image_preservation"}},
      {"hyper", {"hyper", "homeomorphism_theorem"}},
      {"descriptive", {"descriptor_of", "descriptive_spc"}},
  };
  const std::map<std::string, std::string> blurbs = {
      {"run", "run every check in the scene"},
      {"axioms", "run only the axiom checks"},
      {"near", "run nearness, generated-opens and compatibility checks"},
      {"connect", "run connectedness and decomposition checks"},
      {"chain", "run strong-chain searches"},
      {"spc", "run strong proximal continuity and open-map checks"},
      {"hyper", "run hyperspace and homeomorphism checks"},
      {"descriptive", "run descriptor checks"},
  };

  auto addCommon = [&](CLI::App* sub) {
    sub->add_option("scene", c.scenePath, "scene file (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--report", c.reportPath, "write the JSON report here ('-' for stdout)");
    sub->add_option("--seed", c.seed, "seed for sampled checks");
    sub->add_option("--adjacency", c.adjacency, "override the grid adjacency")
        ->check(CLI::IsMember({4, 8}));
    sub->add_option("--max-pieces", c.maxPieces, "cap decomposition search width");
    sub->add_flag("--parallel", c.parallel, "run checks concurrently");
    sub->add_flag("--timings", c.timings, "record per-check elapsed_ms in the report");
    sub->add_flag("--quiet", c.quiet, "suppress console lines");
  };

  for (const auto& [name, types] : filters) {
    CLI::App* sub = app.add_subcommand(name, blurbs.at(name));
    addCommon(sub);
    if (name == "run")
      sub->add_option("--svg", c.svgPath, "write an SVG rendering here (grid scenes)");
    const std::vector<std::string>& t = types;
    const bool isRun = name == "run";
    sub->callback([&c, &t, isRun] { std::exit(runChecks(c, t, isRun)); });
  }

  CLI::App* render = app.add_subcommand("render", "render the scene without running checks");
  render->add_option("scene", c.scenePath, "scene file (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  render->add_option("-o,--output", c.outPath, "output file (SVG for grids, text for finite)");
  render->add_option("--adjacency", c.adjacency, "override the grid adjacency")
      ->check(CLI::IsMember({4, 8}));
  render->callback([&c] { std::exit(renderScene(c)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
}
