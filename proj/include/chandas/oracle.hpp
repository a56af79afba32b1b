#pragma once

#include <cstdint>
#include <vector>

#include "chandas/core.hpp"

// Independent modern reference implementations, used for cross-verification
// only. Nothing here shares code with the historical routines it checks.
namespace chandas::oracle {

// Division-remainder conversion: width bits, most significant first.
// Throws Overflow if v does not fit.
std::vector<int> modern_to_binary(const Natural& v, unsigned width);

// Reverses the sequence and maps G -> 0, L -> 1: the modern reading of a
// row. Equals modern_to_binary(to_modern_value(seq), seq.size()).
std::vector<int> mirror_bridge(const GlSequence& seq);

// n! / (r! (n-r)!) with exact factorials.
Natural ncr_factorial(unsigned n, unsigned r);

// 2^n by n doublings.
Natural pow2_doubling(std::uint64_t n);

// Positions of the rows with exactly r laghus, found by scanning the
// prastara stream.
std::vector<RowIndex> brute_positions(unsigned n, unsigned r);

}  // namespace chandas::oracle
