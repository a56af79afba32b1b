#include "chandas/prastara.hpp"

#include <algorithm>
#include <utility>

namespace chandas {

namespace detail {

void require_enumerable(unsigned n, unsigned guard) {
  if (n == 0) throw InvalidArgs("a prastara needs at least one syllable");
  if (n > guard) throw GuardExceeded(n, guard);
}

}  // namespace detail

namespace {

std::vector<std::vector<Syllable>> pingala_rows(unsigned n) {
  if (n == 1)
    return {std::vector<Syllable>{Syllable::Guru},
            std::vector<Syllable>{Syllable::Laghu}};
  const auto previous = pingala_rows(n - 1);
  std::vector<std::vector<Syllable>> rows;
  rows.reserve(previous.size() * 2);
  for (const Syllable column : {Syllable::Guru, Syllable::Laghu}) {
    for (const auto& row : previous) {
      auto extended = row;
      extended.push_back(column);
      rows.push_back(std::move(extended));
    }
  }
  return rows;
}

}  // namespace

Prastara pingala_prastara(unsigned n, unsigned guard) {
  detail::require_enumerable(n, guard);
  Prastara prastara;
  prastara.n = n;
  auto rows = pingala_rows(n);
  prastara.rows.reserve(rows.size());
  for (auto& row : rows) prastara.rows.emplace_back(std::move(row));
  return prastara;
}

std::optional<GlSequence> kedara_successor(const GlSequence& seq) {
  std::vector<Syllable> next(seq.begin(), seq.end());
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (next[i] == Syllable::Guru) {
      next[i] = Syllable::Laghu;
      std::fill(next.begin(), next.begin() + static_cast<std::ptrdiff_t>(i),
                Syllable::Guru);
      return GlSequence(std::move(next));
    }
  }
  return std::nullopt;
}

Prastara kedara_prastara(unsigned n, unsigned guard) {
  detail::require_enumerable(n, guard);
  Prastara prastara;
  prastara.n = n;
  PrastaraStream stream(n);
  while (auto row = stream.next()) prastara.rows.push_back(std::move(*row));
  return prastara;
}

PrastaraStream::PrastaraStream(unsigned n) {
  if (n == 0) throw InvalidArgs("a prastara needs at least one syllable");
  current_ = GlSequence(std::vector<Syllable>(n, Syllable::Guru));
}

std::optional<GlSequence> PrastaraStream::next() {
  if (!current_) return std::nullopt;
  std::optional<GlSequence> out = std::move(current_);
  current_ = kedara_successor(*out);
  return out;
}

}  // namespace chandas
