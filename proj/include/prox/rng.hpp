#pragma once

#include <cstdint>
#include <random>

namespace prox {

// Seeded generator with hand-rolled bounded sampling: std::mt19937_64 output
// is pinned by the standard, the std::*_distribution mappings are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n). Modulo bias is irrelevant at test scales.
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace prox
