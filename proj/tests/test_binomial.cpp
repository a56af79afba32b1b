#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "chandas/binomial.hpp"
#include "chandas/errors.hpp"
#include "chandas/oracle.hpp"

using namespace chandas;

namespace {

std::vector<Natural> naturals(std::vector<long long> v) {
  return std::vector<Natural>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("six-syllable staircase terminals") {
  CHECK(lagakriya(6) == naturals({1, 6, 15, 20, 15, 6, 1}));
  CHECK(lagakriya(1) == naturals({1, 1}));
  CHECK(lagakriya(10) ==
        naturals({1, 10, 45, 120, 210, 252, 210, 120, 45, 10, 1}));
}

TEST_CASE("staircase shape and recurrence") {
  const LagakriyaTable table = lagakriya_table(6);
  CHECK(table.n == 6);
  REQUIRE(table.rows.size() == 7);
  for (unsigned r = 0; r <= 6; ++r) {
    REQUIRE(table.rows[r].size() == 7 - r);
    CHECK(table.rows[r][0] == 1);
  }
  for (const Natural& cell : table.rows[0]) CHECK(cell == 1);
  for (unsigned r = 1; r <= 6; ++r) {
    for (unsigned j = 1; j < 7 - r; ++j) {
      CHECK(table.rows[r][j] == table.rows[r - 1][j] + table.rows[r][j - 1]);
    }
  }
  CHECK(table.terminals() == lagakriya(6));
  CHECK(table.rows[6].back() == 1);    // zero laghus
  CHECK(table.rows[3].back() == 20);   // three laghus
  CHECK(table.rows[0].back() == 1);    // all laghus
}

TEST_CASE("pyramid rows are the binomial rows") {
  const MeruPyramid p = meru(8);
  CHECK(p.depth == 8);
  REQUIRE(p.rows.size() == 8);
  CHECK(p.rows[7] == naturals({1, 7, 21, 35, 35, 21, 7, 1}));
  CHECK(p.rows[5] == naturals({1, 5, 10, 10, 5, 1}));
  CHECK(p.rows[0] == naturals({1}));
  CHECK(meru(1).rows == std::vector<std::vector<Natural>>{{Natural(1)}});
  CHECK_THROWS_AS(meru(0), InvalidArgs);
}

TEST_CASE("pyramid cells are sums of the two above") {
  const MeruPyramid p = meru(12);
  for (unsigned i = 1; i < 12; ++i) {
    REQUIRE(p.rows[i].size() == i + 1);
    CHECK(p.rows[i].front() == 1);
    CHECK(p.rows[i].back() == 1);
    for (unsigned j = 1; j < i; ++j) {
      CHECK(p.rows[i][j] == p.rows[i - 1][j - 1] + p.rows[i - 1][j]);
    }
  }
}

TEST_CASE("multiplicative recursion") {
  CHECK(bhaskara_ncr(6, 2) == 15);
  CHECK(bhaskara_ncr(6, 3) == 20);
  CHECK(bhaskara_ncr(5, 0) == 1);
  CHECK(bhaskara_ncr(5, 5) == 1);
  CHECK(bhaskara_ncr(0, 0) == 1);
  CHECK(bhaskara_ncr(30, 15) == 155117520);
  CHECK_THROWS_AS(bhaskara_ncr(4, 5), InvalidArgs);
}

TEST_CASE("all three constructions agree with the factorial oracle") {
  for (unsigned n = 1; n <= 25; ++n) {
    const std::vector<Natural> staircase = lagakriya(n);
    const MeruPyramid pyramid = meru(n + 1);
    const std::vector<Natural>& pyramid_row = pyramid.rows[n];
    REQUIRE(staircase.size() == n + 1);
    REQUIRE(pyramid_row.size() == n + 1);
    for (unsigned r = 0; r <= n; ++r) {
      const Natural expected = oracle::ncr_factorial(n, r);
      CHECK(staircase[r] == expected);
      CHECK(pyramid_row[r] == expected);
      CHECK(bhaskara_ncr(n, r) == expected);
    }
  }
}

TEST_CASE("symmetry and row sums") {
  for (unsigned n = 1; n <= 25; ++n) {
    const std::vector<Natural> counts = lagakriya(n);
    Natural sum = 0;
    for (unsigned r = 0; r <= n; ++r) {
      CHECK(counts[r] == counts[n - r]);
      CHECK(bhaskara_ncr(n, r) == bhaskara_ncr(n, n - r));
      sum += counts[r];
    }
    CHECK(sum == pow2(n));
  }
}
