#include "chandas/pataka.hpp"

#include <utility>

#include "chandas/errors.hpp"

namespace chandas {

namespace {

// A position plus the exponent just past the largest power of 2 in its
// composition; extensions may only use powers from `next` upward.
struct Item {
  Natural pos;
  unsigned next;
};

std::vector<Item> extend(const std::vector<Item>& column, unsigned n) {
  std::vector<Item> out;
  for (const Item& item : column) {
    for (unsigned e = item.next; e < n; ++e) {
      out.push_back({item.pos + pow2(e), e + 1});
    }
  }
  return out;
}

std::vector<RowIndex> strip(const std::vector<Item>& column) {
  std::vector<RowIndex> out;
  out.reserve(column.size());
  for (const Item& item : column) out.emplace_back(item.pos);
  return out;
}

}  // namespace

PatakaMatrix pataka(unsigned n, unsigned guard) {
  detail::require_enumerable(n, guard);
  PatakaMatrix matrix;
  matrix.n = n;
  matrix.columns.reserve(n + 1);
  std::vector<Item> column{{Natural(1), 0}};
  matrix.columns.push_back(strip(column));
  for (unsigned r = 1; r <= n; ++r) {
    column = extend(column, n);
    matrix.columns.push_back(strip(column));
  }
  return matrix;
}

std::vector<RowIndex> pataka_column(unsigned n, unsigned r, unsigned guard) {
  detail::require_enumerable(n, guard);
  if (r > n)
    throw InvalidArgs("column " + std::to_string(r) + " exceeds laghu count " +
                      std::to_string(n));
  std::vector<Item> column{{Natural(1), 0}};
  for (unsigned j = 0; j < r; ++j) column = extend(column, n);
  return strip(column);
}

}  // namespace chandas
