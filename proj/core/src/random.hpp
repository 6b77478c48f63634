#pragma once

#include <cstdint>
#include <random>

namespace blockrank::detail {

// Unbiased draw in [0, n); n > 0. Spelled out so sequences do not depend on
// the standard library's distribution implementations.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

inline bool coin(std::mt19937_64& rng, std::uint64_t num, std::uint64_t den) {
  return draw_below(rng, den) < num;
}

}  // namespace blockrank::detail
