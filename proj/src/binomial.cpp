#include "chandas/binomial.hpp"

#include <stdexcept>

#include "chandas/errors.hpp"

namespace chandas {

std::vector<Natural> LagakriyaTable::terminals() const {
  std::vector<Natural> counts;
  counts.reserve(n + 1);
  for (unsigned r = 0; r <= n; ++r) {
    counts.push_back(rows[n - r].back());
  }
  return counts;
}

LagakriyaTable lagakriya_table(unsigned n) {
  LagakriyaTable table;
  table.n = n;
  table.rows.reserve(n + 1);
  table.rows.emplace_back(n + 1, Natural(1));
  for (unsigned r = 1; r <= n; ++r) {
    std::vector<Natural> row;
    row.reserve(n + 1 - r);
    row.emplace_back(1);
    for (unsigned j = 1; j < n + 1 - r; ++j) {
      row.push_back(table.rows[r - 1][j] + row[j - 1]);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<Natural> lagakriya(unsigned n) {
  return lagakriya_table(n).terminals();
}

MeruPyramid meru(unsigned depth) {
  if (depth == 0) throw InvalidArgs("meru needs at least one row");
  MeruPyramid pyramid;
  pyramid.depth = depth;
  pyramid.rows.reserve(depth);
  pyramid.rows.push_back({Natural(1)});
  for (unsigned i = 1; i < depth; ++i) {
    const std::vector<Natural>& above = pyramid.rows[i - 1];
    std::vector<Natural> row;
    row.reserve(i + 1);
    row.emplace_back(1);
    for (unsigned j = 1; j < i; ++j) {
      row.push_back(above[j - 1] + above[j]);
    }
    row.emplace_back(1);
    pyramid.rows.push_back(std::move(row));
  }
  return pyramid;
}

Natural bhaskara_ncr(unsigned n, unsigned r) {
  if (r > n)
    throw InvalidArgs("cannot choose " + std::to_string(r) + " from " +
                      std::to_string(n));
  Natural c = 1;
  for (unsigned i = 0; i < r; ++i) {
    c *= (n - i);
    if (c % (i + 1) != 0)
      throw std::logic_error("binomial recursion produced inexact division");
    c /= (i + 1);
  }
  return c;
}

}  // namespace chandas
