#include "chandas/core.hpp"

#include <ostream>
#include <utility>

namespace chandas {

char to_char(Syllable s, Notation notation) {
  if (notation == Notation::GL) return s == Syllable::Guru ? 'G' : 'L';
  return s == Syllable::Guru ? '0' : '1';
}

GlSequence::GlSequence(std::vector<Syllable> syllables)
    : syllables_(std::move(syllables)) {
  if (syllables_.empty()) throw EmptyInput();
}

std::string GlSequence::str(Notation notation) const {
  std::string out;
  out.reserve(size());
  for (Syllable s : syllables_) out.push_back(to_char(s, notation));
  return out;
}

std::ostream& operator<<(std::ostream& os, const GlSequence& seq) {
  return os << seq.str();
}

RowIndex::RowIndex(Natural value) : value_(std::move(value)) {
  if (value_ < 1)
    throw IndexOutOfRange("row index must be at least 1, got " + value_.str());
}

std::ostream& operator<<(std::ostream& os, const RowIndex& k) {
  return os << k.value();
}

Natural to_modern_value(const GlSequence& seq) {
  Natural value = 0;
  Natural place = 1;
  for (Syllable s : seq) {
    if (s == Syllable::Laghu) value += place;
    place <<= 1;
  }
  return value;
}

RowIndex to_row_index(const GlSequence& seq) {
  return RowIndex(to_modern_value(seq) + 1);
}

GlSequence parse_sequence(std::string_view text, Notation notation) {
  if (text.empty()) throw EmptyInput();
  std::vector<Syllable> syllables;
  syllables.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (notation == Notation::GL) {
      if (c == 'G' || c == 'g')
        syllables.push_back(Syllable::Guru);
      else if (c == 'L' || c == 'l')
        syllables.push_back(Syllable::Laghu);
      else
        throw InvalidCharacter(i + 1, c);
    } else {
      if (c == '0')
        syllables.push_back(Syllable::Guru);
      else if (c == '1')
        syllables.push_back(Syllable::Laghu);
      else
        throw InvalidCharacter(i + 1, c);
    }
  }
  return GlSequence(std::move(syllables));
}

}  // namespace chandas
