#pragma once

#include <vector>

#include "chandas/core.hpp"

namespace chandas {

// The laga-kriya staircase for n syllables. rows[0] holds n+1 ones; each
// later row is one cell shorter and accumulates sums from above and from
// the left: rows[r][0] = 1 and rows[r][j] = rows[r-1][j] + rows[r][j-1].
// The final entry of rows[n-r] is the count of rows with exactly r laghus.
struct LagakriyaTable {
  unsigned n = 0;
  std::vector<std::vector<Natural>> rows;

  bool operator==(const LagakriyaTable&) const = default;

  // The n+1 counts for r = 0..n laghus, read off the staircase ends.
  std::vector<Natural> terminals() const;
};

LagakriyaTable lagakriya_table(unsigned n);

// Convenience: just the counts [C(n,0), ..., C(n,n)].
std::vector<Natural> lagakriya(unsigned n);

// The meru pyramid: depth rows, row i holding i+1 cells. End cells are 1;
// each interior cell is the sum of the two cells above it. Row i (counting
// from 0) lists C(i, 0..i).
struct MeruPyramid {
  unsigned depth = 0;
  std::vector<std::vector<Natural>> rows;

  bool operator==(const MeruPyramid&) const = default;
};

// Throws InvalidArgs when depth == 0.
MeruPyramid meru(unsigned depth);

// C(n, r) by the multiplicative recursion C(n, r+1) = C(n, r) * (n-r) /
// (r+1), starting from C(n, 0) = 1. Every division is exact. Throws
// InvalidArgs when r > n.
Natural bhaskara_ncr(unsigned n, unsigned r);

}  // namespace chandas
