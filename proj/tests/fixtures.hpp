#pragma once

// |G/st_G(n)| for sample groups, recorded from the breadth-first oracle in
// oracles.hpp (Tree::bfs_order). The slow entries are not recomputed in CI.

#include <cstdint>
#include <vector>

struct QuotientFixture {
  int p;
  std::vector<std::int64_t> e;
  int n;
  std::uint64_t order;
};

inline const std::vector<QuotientFixture>& quotient_fixtures() {
  static const std::vector<QuotientFixture> f{
      {3, {1, 2}, 2, 27},           {3, {1, 2}, 3, 2187},      {3, {1, 1}, 2, 81},
      {3, {1, 1}, 3, 19683},        {3, {1, 0}, 2, 81},        {3, {1, 0}, 3, 59049},
      {3, {0, 1}, 2, 81},           {3, {0, 1}, 3, 59049},     {3, {2, 2}, 3, 19683},
      {5, {1, 0, 0, 0}, 2, 15625},  {5, {1, 1, 1, 1}, 2, 15625}, {5, {1, 2, 0, 0}, 2, 15625},
      {5, {1, 2, 3, 4}, 2, 125},    {5, {1, 0, 2, 4}, 2, 15625}, {5, {1, 4, 4, 1}, 2, 625},
      {7, {1, 0, 0, 0, 0, 0}, 2, 5764801},
  };
  return f;
}
