#pragma once

#include <vector>

#include "chandas/core.hpp"
#include "chandas/prastara.hpp"

namespace chandas {

// The flag-shaped position matrix: column r lists the rows of the
// n-syllable prastara holding exactly r laghus, computed directly from row
// arithmetic rather than by scanning the prastara.
struct PatakaMatrix {
  unsigned n = 0;
  std::vector<std::vector<RowIndex>> columns;  // n + 1 of them

  bool operator==(const PatakaMatrix&) const = default;
};

// Column 0 is [1]. Column r+1 extends each element of column r, in order,
// by every power of 2 strictly larger than the largest power already inside
// it (in increasing order); tracking that largest power is what keeps every
// sum distinct. Throws InvalidArgs (n == 0) or GuardExceeded (n > guard).
PatakaMatrix pataka(unsigned n, unsigned guard = kDefaultEnumerationGuard);

// Just column r of pataka(n), built without the later columns. Throws
// InvalidArgs when r > n (or n == 0) and GuardExceeded past the guard.
std::vector<RowIndex> pataka_column(unsigned n, unsigned r,
                                    unsigned guard = kDefaultEnumerationGuard);

}  // namespace chandas
