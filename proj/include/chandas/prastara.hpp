#pragma once

#include <optional>
#include <vector>

#include "chandas/core.hpp"

namespace chandas {

// Materializing operations refuse n above this unless the caller raises it;
// 2^20 rows is the built-in desk-scale ceiling.
inline constexpr unsigned kDefaultEnumerationGuard = 20;

namespace detail {
// Throws InvalidArgs for n == 0, GuardExceeded for n > guard.
void require_enumerable(unsigned n, unsigned guard);
}  // namespace detail

// The full 2^n * n matrix of laghu-guru combinations. Row 1 is all guru,
// row 2^n is all laghu.
struct Prastara {
  unsigned n = 0;
  std::vector<GlSequence> rows;

  bool operator==(const Prastara&) const = default;
};

// Builds the matrix by the recursion A^n = [A^(n-1)|G ; A^(n-1)|L] with base
// A^1 = [G ; L]: the nth column of the first half is guru, of the second
// half laghu.
Prastara pingala_prastara(unsigned n,
                          unsigned guard = kDefaultEnumerationGuard);

// The row below seq: a laghu under the leftmost guru, everything to its
// right copied, gurus in the places to its left. Returns nullopt once all
// syllables are laghu — the walk stops there.
std::optional<GlSequence> kedara_successor(const GlSequence& seq);

// Starts with the all-guru row and iterates kedara_successor; same matrix as
// pingala_prastara by an independent route.
Prastara kedara_prastara(unsigned n, unsigned guard = kDefaultEnumerationGuard);

// Single-consumer lazy walk over the 2^n rows in prastara order. No guard:
// the caller controls consumption.
class PrastaraStream {
 public:
  explicit PrastaraStream(unsigned n);  // throws InvalidArgs if n == 0

  // The next row, or nullopt after the all-laghu terminal row.
  std::optional<GlSequence> next();

 private:
  std::optional<GlSequence> current_;
};

}  // namespace chandas
