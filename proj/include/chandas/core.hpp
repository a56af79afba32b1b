#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "chandas/errors.hpp"
#include "chandas/natural.hpp"

namespace chandas {

// The two primitive syllables. Guru is digit 0, laghu is digit 1.
enum class Syllable : unsigned char { Guru = 0, Laghu = 1 };

enum class Notation { GL, Binary01 };

char to_char(Syllable s, Notation notation = Notation::GL);

// An ordered laghu-guru sequence: one row of a prastara. Positions are
// numbered 1..n left to right and position i carries place value 2^(i-1),
// so place value grows to the RIGHT — the mirror image of modern binary
// writing.
class GlSequence {
 public:
  // Throws EmptyInput: the smallest prastara has one syllable.
  explicit GlSequence(std::vector<Syllable> syllables);

  std::size_t size() const { return syllables_.size(); }
  Syllable operator[](std::size_t i) const { return syllables_[i]; }  // 0-based

  auto begin() const { return syllables_.begin(); }
  auto end() const { return syllables_.end(); }

  // Canonical text: contiguous uppercase G/L, or 0/1 in the same position
  // order (not mirrored).
  std::string str(Notation notation = Notation::GL) const;

  bool operator==(const GlSequence&) const = default;

 private:
  std::vector<Syllable> syllables_;
};

std::ostream& operator<<(std::ostream& os, const GlSequence& seq);

// 1-based position of a row within a prastara; the counting starts with 1.
class RowIndex {
 public:
  explicit RowIndex(Natural value);  // throws IndexOutOfRange if value < 1

  const Natural& value() const { return value_; }
  std::string str() const { return value_.str(); }

  bool operator==(const RowIndex&) const = default;
  friend bool operator<(const RowIndex& a, const RowIndex& b) {
    return a.value_ < b.value_;
  }

 private:
  Natural value_;
};

std::ostream& operator<<(std::ostream& os, const RowIndex& k);

// Sum of 2^(i-1) over the laghu positions i of seq.
Natural to_modern_value(const GlSequence& seq);

// to_modern_value(seq) + 1.
RowIndex to_row_index(const GlSequence& seq);

// Transcribes text left to right as positions 1..n. G/L is case-insensitive.
// Throws EmptyInput or InvalidCharacter (1-based position).
GlSequence parse_sequence(std::string_view text,
                          Notation notation = Notation::GL);

}  // namespace chandas
