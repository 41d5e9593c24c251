#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <triality/loop.hpp>

namespace testing_support {

// The 16 units +-e_0..e_7 of the octonions; index = 8 * (sign bit) + i.
inline triality::LoopTable octonion_units() {
  static constexpr std::array<std::array<int, 3>, 7> lines = {
      {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}}};
  // unit products e_i e_j = sign * e_k
  std::array<std::array<int, 8>, 8> k{}, s{};
  for (int i = 0; i < 8; ++i) {
    k[0][i] = k[i][0] = i;
    s[0][i] = s[i][0] = 1;
  }
  for (int i = 1; i < 8; ++i) {
    k[i][i] = 0;
    s[i][i] = -1;
  }
  for (const auto& l : lines)
    for (int r = 0; r < 3; ++r) {
      const int a = l[r], b = l[(r + 1) % 3], c = l[(r + 2) % 3];
      k[a][b] = c;
      s[a][b] = 1;
      k[b][a] = c;
      s[b][a] = -1;
    }
  std::vector<std::uint32_t> m(256);
  for (int x = 0; x < 16; ++x)
    for (int y = 0; y < 16; ++y) {
      const int i = x % 8, j = y % 8;
      const bool neg = (x >= 8) != (y >= 8) != (s[i][j] < 0);
      m[static_cast<std::size_t>(16 * x + y)] = static_cast<std::uint32_t>(8 * neg + k[i][j]);
    }
  return triality::LoopTable(16, std::move(m), {}, {1, 2, 3});
}

}  // namespace testing_support
