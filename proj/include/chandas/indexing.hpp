#pragma once

#include <string_view>
#include <vector>

#include "chandas/core.hpp"

namespace chandas {

// Positional numeral in base B, most significant digit first. Digits are
// data, not canonical numerals: leading zeros are allowed.
struct BaseBNumeral {
  unsigned base = 10;
  std::vector<unsigned> digits;

  bool operator==(const BaseBNumeral&) const = default;
};

// Text form using 0-9 and lowercase a-z, so bases up to 36. Throws
// InvalidBase, InvalidArgs (base > 36), EmptyInput, InvalidCharacter or
// DigitOutOfRange.
BaseBNumeral parse_numeral(std::string_view text, unsigned base);

// Recovers row k of the n-syllable prastara without writing the prastara:
// while the value is even, halve it and write L; while odd, add one, halve,
// and write G. Emits exactly n syllables (a value of 1 keeps emitting G).
// Throws IndexOutOfRange unless 1 <= k <= 2^n.
GlSequence nashtam(const RowIndex& k, unsigned n);

// Row index of seq. Scan right to left starting with 1 at the rightmost
// laghu: double at a laghu, double and subtract one at a guru. Syllables
// right of the rightmost laghu are skipped; an all-guru row is row 1.
RowIndex uddishtam_pingala(const GlSequence& seq);

// Row index of seq by doubling weights: write 1, 2, 4, ... above the
// syllables left to right, add the weights above the laghus, add 1.
RowIndex uddishtam_kedara(const GlSequence& seq);

// 1-based position of the numeral in the base-B place-value enumeration
// (where 0 is the 1st number): start with S = 1 at the most significant
// digit and apply S <- B*S - ((B-1) - d) per digit. Equals value + 1; after
// m digits S is the rank of the m-digit prefix.
Natural rank_base_b(const BaseBNumeral& num);

}  // namespace chandas
