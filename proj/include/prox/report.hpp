#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace prox {

using ojson = nlohmann::ordered_json;

// One executed scene check. `verdict` is what happened (pass, fail,
// none-found, error), `expect` is what the scene said should happen, and the
// record is ok when they agree.
struct CheckRecord {
  std::string name;
  std::string type;
  std::string verdict = "pass";
  std::string expect = "pass";
  std::string detail;
  bool ok = true;
  long long elapsedMs = 0;
  ojson extra = ojson::object();
};

ojson checkToJson(const CheckRecord& c);

ojson makeReport(const std::string& scene, const std::string& title, const std::string& backend,
                 std::uint64_t seed, const std::vector<CheckRecord>& checks);

// Two-space indent, trailing newline; the byte-for-byte serialisation used
// everywhere a report leaves the process.
std::string serializeReport(const ojson& report);

// "[ ok ] near A/B: pass (expected pass)" with optional ANSI colouring.
std::string consoleLine(const CheckRecord& c, bool color);

}  // namespace prox
