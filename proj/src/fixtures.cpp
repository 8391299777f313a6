#include "addcomb/fixtures.hpp"

#include <array>

namespace addcomb::fixtures {

AmbientPtr s3() {
  // Row x, column y holds x o y (apply y first).
  return Ambient::cayley({{0, 1, 2, 3, 4, 5},
                          {1, 0, 5, 4, 3, 2},
                          {2, 4, 0, 5, 1, 3},
                          {3, 5, 4, 0, 2, 1},
                          {4, 2, 3, 1, 5, 0},
                          {5, 3, 1, 2, 0, 4}},
                         {"e", "(12)", "(13)", "(23)", "(123)", "(132)"});
}

AmbientPtr d4() {
  // Index f*4 + k stands for s^f r^k; s^f r^a . s^g r^b = s^(f+g) r^((-1)^g a + b).
  std::vector<std::vector<std::int64_t>> table(8, std::vector<std::int64_t>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int f = x / 4, a = x % 4, g = y / 4, b = y % 4;
      const int k = ((g ? -a : a) + b + 8) % 4;
      table[x][y] = ((f ^ g) * 4) + k;
    }
  return Ambient::cayley(std::move(table), {"r0", "r1", "r2", "r3", "s", "sr", "sr2", "sr3"});
}

AmbientPtr q8() {
  // Unit u in {1, i, j, k} with a sign; index = sign * 4 + u.
  // kUnit[u][v] and kSign[u][v] give u*v = (-1)^sign * unit.
  static constexpr std::array<std::array<int, 4>, 4> kUnit{{
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  static constexpr std::array<std::array<int, 4>, 4> kSign{{
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
  std::vector<std::vector<std::int64_t>> table(8, std::vector<std::int64_t>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = x % 4, v = y % 4;
      const int sign = (x / 4) ^ (y / 4) ^ kSign[u][v];
      table[x][y] = sign * 4 + kUnit[u][v];
    }
  return Ambient::cayley(std::move(table), {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

}  // namespace addcomb::fixtures
