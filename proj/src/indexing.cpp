#include "chandas/indexing.hpp"

#include <algorithm>

#include "chandas/errors.hpp"

namespace chandas {

namespace {

unsigned digit_of(char c) {
  if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<unsigned>(c - 'a') + 10;
  if (c >= 'A' && c <= 'Z') return static_cast<unsigned>(c - 'A') + 10;
  return 36;  // sentinel: not a digit in any supported base
}

}  // namespace

BaseBNumeral parse_numeral(std::string_view text, unsigned base) {
  if (base < 2) throw InvalidBase(base);
  if (base > 36)
    throw InvalidArgs("textual numerals support bases 2 through 36");
  if (text.empty()) throw EmptyInput();
  BaseBNumeral num;
  num.base = base;
  num.digits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    const unsigned d = digit_of(c);
    if (d >= 36) throw InvalidCharacter(i + 1, c);
    if (d >= base) throw DigitOutOfRange(i, d, base);
    num.digits.push_back(d);
  }
  return num;
}

GlSequence nashtam(const RowIndex& k, unsigned n) {
  if (n == 0) throw InvalidArgs("sequence length must be at least 1");
  if (k.value() > pow2(n))
    throw IndexOutOfRange("row " + k.str() + " exceeds the " +
                          std::to_string(n) + "-syllable prastara");
  Natural v = k.value();
  std::vector<Syllable> syllables;
  syllables.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    if (v % 2 == 0) {
      syllables.push_back(Syllable::Laghu);
      v /= 2;
    } else {
      syllables.push_back(Syllable::Guru);
      v = (v + 1) / 2;
    }
  }
  return GlSequence(std::move(syllables));
}

RowIndex uddishtam_pingala(const GlSequence& seq) {
  // Find the rightmost laghu; everything to its right contributes nothing.
  std::size_t last_laghu = seq.size();
  for (std::size_t i = seq.size(); i-- > 0;) {
    if (seq[i] == Syllable::Laghu) {
      last_laghu = i;
      break;
    }
  }
  if (last_laghu == seq.size()) return RowIndex(Natural(1));  // all guru
  Natural s = 1;
  s *= 2;  // the rightmost laghu itself doubles the running count
  for (std::size_t i = last_laghu; i-- > 0;) {
    s *= 2;
    if (seq[i] == Syllable::Guru) s -= 1;
  }
  return RowIndex(std::move(s));
}

RowIndex uddishtam_kedara(const GlSequence& seq) {
  Natural total = 0;
  Natural weight = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] == Syllable::Laghu) total += weight;
    weight *= 2;
  }
  return RowIndex(total + 1);
}

Natural rank_base_b(const BaseBNumeral& num) {
  if (num.base < 2) throw InvalidBase(num.base);
  if (num.digits.empty()) throw EmptyInput();
  for (std::size_t i = 0; i < num.digits.size(); ++i) {
    if (num.digits[i] >= num.base)
      throw DigitOutOfRange(i, num.digits[i], num.base);
  }
  Natural s = 1;
  for (const unsigned d : num.digits) {
    s = num.base * s - ((num.base - 1) - d);
  }
  return s;
}

}  // namespace chandas
