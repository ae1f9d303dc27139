#pragma once

#include <stdexcept>
#include <string>

namespace prox {

// All library failures derive from ProxError so callers can separate
// tool bugs (std::logic_error etc.) from model-level refusals.
struct ProxError : std::runtime_error {
  explicit ProxError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input exceeds a documented size bound (point counts, candidate lists, ...).
struct CapacityError : ProxError {
  explicit CapacityError(const std::string& msg) : ProxError(msg) {}
};

// Structurally invalid input: malformed topology, region mismatch, bad shape.
struct ValidationError : ProxError {
  explicit ValidationError(const std::string& msg) : ProxError(msg) {}
};

// A theorem-harness precondition does not hold for the supplied data.
struct PreconditionError : ProxError {
  explicit PreconditionError(const std::string& msg) : ProxError(msg) {}
};

// Point map evaluated at (or too close to) an inversion pole.
struct PoleError : ProxError {
  explicit PoleError(const std::string& msg) : ProxError(msg) {}
};

// Scene file problems; carries a coarse location for diagnostics.
struct SceneError : ProxError {
  std::string where;  // "field regions[2].name" or "byte 123" style context
  SceneError(const std::string& msg, std::string where_)
      : ProxError(msg + (where_.empty() ? "" : " (" + where_ + ")")), where(std::move(where_)) {}
};

}  // namespace prox
