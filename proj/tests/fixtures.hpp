#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qgc/quasigroup.hpp"

namespace fixtures {

// Order-6 quasigroup known-answer fixture and its inverse, stored 0-based
// (written 1-based, every symbol and index shifts up by one).
inline constexpr std::array<std::array<std::uint8_t, 6>, 6> kTableA = {{
    {0, 2, 1, 5, 3, 4},
    {1, 5, 3, 4, 0, 2},
    {2, 1, 5, 3, 4, 0},
    {3, 4, 0, 2, 1, 5},
    {4, 0, 2, 1, 5, 3},
    {5, 3, 4, 0, 2, 1},
}};

inline constexpr std::array<std::array<std::uint8_t, 6>, 6> kTableAInverse = {{
    {0, 2, 1, 4, 5, 3},
    {4, 0, 5, 2, 3, 1},
    {5, 1, 0, 3, 4, 2},
    {2, 4, 3, 0, 1, 5},
    {1, 3, 2, 5, 0, 4},
    {3, 5, 4, 1, 2, 0},
}};

// Stream transform known answer over kTableA: seed 2, eight symbols.
inline constexpr std::uint8_t kStreamSeed = 2;
inline constexpr std::array<std::uint8_t, 8> kStreamMessage = {0, 4, 3, 1,
                                                               5, 3, 4, 2};
inline constexpr std::array<std::uint8_t, 8> kStreamCipher = {2, 4, 1, 5,
                                                              1, 4, 5, 4};

inline std::vector<std::uint8_t> flatten(
    const std::array<std::array<std::uint8_t, 6>, 6>& table) {
  std::vector<std::uint8_t> cells;
  cells.reserve(36);
  for (const auto& row : table) {
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return cells;
}

inline qgc::QuasigroupTable table_a() {
  return qgc::QuasigroupTable::validate(6, flatten(kTableA));
}

}  // namespace fixtures
