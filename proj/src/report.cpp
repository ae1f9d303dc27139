#include "prox/report.hpp"

namespace prox {

ojson checkToJson(const CheckRecord& c) {
  ojson j;
  j["name"] = c.name;
  j["type"] = c.type;
  j["verdict"] = c.verdict;
  j["expect"] = c.expect;
  j["ok"] = c.ok;
  if (!c.detail.empty()) j["detail"] = c.detail;
  j["elapsed_ms"] = c.elapsedMs;
  for (auto it = c.extra.begin(); it != c.extra.end(); ++it) j[it.key()] = it.value();
  return j;
}

ojson makeReport(const std::string& scene, const std::string& title, const std::string& backend,
                 std::uint64_t seed, const std::vector<CheckRecord>& checks) {
  ojson j;
  j["version"] = 1;
  j["scene"] = scene;
  if (!title.empty()) j["title"] = title;
  j["backend"] = backend;
  j["seed"] = seed;
  j["checks"] = ojson::array();
  int okCount = 0;
  for (const CheckRecord& c : checks) {
    j["checks"].push_back(checkToJson(c));
    if (c.ok) ++okCount;
  }
  j["summary"] = ojson{{"total", checks.size()},
                       {"ok", okCount},
                       {"failed", checks.size() - static_cast<std::size_t>(okCount)}};
  j["ok"] = okCount == static_cast<int>(checks.size());
  return j;
}

std::string serializeReport(const ojson& report) { return report.dump(2) + "\n"; }

std::string consoleLine(const CheckRecord& c, bool color) {
  const char* mark = c.ok ? " ok " : "FAIL";
  std::string line = "[";
  if (color) line += c.ok ? "\x1b[32m" : "\x1b[31m";
  line += mark;
  if (color) line += "\x1b[0m";
  line += "] " + c.name + ": " + c.verdict;
  if (c.expect != "pass" || c.verdict != "pass") line += " (expected " + c.expect + ")";
  if (!c.detail.empty()) line += " - " + c.detail;
  return line;
}

}  // namespace prox
