#pragma once

#include <cstdint>
#include <vector>

#include "chandas/core.hpp"

namespace chandas {

// One step of the halving reduction: an even count is halved (written "2"),
// an odd count drops by one (written "0").
enum class SankhyaToken : unsigned char { Halve, DecrementOne };

char token_digit(SankhyaToken token);  // '2' or '0'

// Full record of the square-and-multiply computation of 2^input.
struct SankhyaTrace {
  std::uint64_t input = 0;
  // Reduction markers in the order they were written while driving input
  // down to 0.
  std::vector<SankhyaToken> tokens;
  // Values after each replay step, reading the markers in reverse: "0"
  // doubles, "2" squares. replay.size() == tokens.size(); each entry is one
  // multiplication.
  std::vector<Natural> replay;
  Natural result = 1;

  bool operator==(const SankhyaTrace&) const = default;
};

// Just the reduction markers for n (empty when n == 0).
std::vector<SankhyaToken> sankhya_reduction(std::uint64_t n);

// 2^n by reduce-then-replay. The number of multiplications (== the number
// of tokens) is at most 2 * ceil(log2(n + 1)).
SankhyaTrace sankhya_pingala(std::uint64_t n);

// 2^n as the sum of the laga-kriya counts for n: every row of the prastara
// has some number of laghus.
Natural sankhya_kedara_lagakriya(unsigned n);

// 2^n as the sum of the uddishtam doubling weights 1, 2, 4, ..., 2^(n-1)
// plus one — the rank computation applied to the all-laghu row.
Natural sankhya_kedara_uddishta(unsigned n);

// Total rows across the prastaras for 1..n syllables: 2 + 4 + ... + 2^n,
// i.e. twice the n-syllable count minus 2.
Natural adhvayoga(std::uint64_t n);

}  // namespace chandas
