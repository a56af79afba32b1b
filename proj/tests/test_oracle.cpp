#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "chandas/errors.hpp"
#include "chandas/oracle.hpp"
#include "chandas/prastara.hpp"

using namespace chandas;

TEST_CASE("modern binary conversion") {
  CHECK(oracle::modern_to_binary(Natural(5), 3) ==
        std::vector<int>{1, 0, 1});
  CHECK(oracle::modern_to_binary(Natural(0), 3) ==
        std::vector<int>{0, 0, 0});
  CHECK(oracle::modern_to_binary(Natural(6), 3) ==
        std::vector<int>{1, 1, 0});
  CHECK(oracle::modern_to_binary(Natural(1), 1) == std::vector<int>{1});
  CHECK_THROWS_AS(oracle::modern_to_binary(Natural(8), 3), Overflow);
  CHECK_THROWS_AS(oracle::modern_to_binary(Natural(0), 0), InvalidArgs);
}

TEST_CASE("mirror bridge reverses and maps G to 0, L to 1") {
  CHECK(oracle::mirror_bridge(parse_sequence("GGL")) ==
        std::vector<int>{1, 0, 0});
  CHECK(oracle::mirror_bridge(parse_sequence("GLL")) ==
        std::vector<int>{1, 1, 0});
  CHECK(oracle::mirror_bridge(parse_sequence("L")) == std::vector<int>{1});
}

TEST_CASE("mirror bridge equals binary counting for every row") {
  for (unsigned n = 1; n <= 12; ++n) {
    PrastaraStream rows(n);
    Natural v = 0;
    while (auto row = rows.next()) {
      CHECK(oracle::mirror_bridge(*row) == oracle::modern_to_binary(v, n));
      v += 1;
    }
    CHECK(v == pow2(n));
  }
}

TEST_CASE("factorial-formula binomials") {
  CHECK(oracle::ncr_factorial(6, 3) == 20);
  CHECK(oracle::ncr_factorial(0, 0) == 1);
  CHECK(oracle::ncr_factorial(5, 0) == 1);
  CHECK(oracle::ncr_factorial(5, 5) == 1);
  CHECK(oracle::ncr_factorial(30, 15) == 155117520);
  CHECK_THROWS_AS(oracle::ncr_factorial(3, 4), InvalidArgs);
}

TEST_CASE("repeated doubling") {
  CHECK(oracle::pow2_doubling(0) == 1);
  CHECK(oracle::pow2_doubling(6) == 64);
  CHECK(oracle::pow2_doubling(20) == 1048576);
}

TEST_CASE("brute-force position scan") {
  const std::vector<RowIndex> one_laghu = oracle::brute_positions(2, 1);
  REQUIRE(one_laghu.size() == 2);
  CHECK(one_laghu[0].value() == 2);
  CHECK(one_laghu[1].value() == 3);
  CHECK(oracle::brute_positions(3, 0) ==
        std::vector<RowIndex>{RowIndex(Natural(1))});
  CHECK(oracle::brute_positions(3, 3) ==
        std::vector<RowIndex>{RowIndex(Natural(8))});
  CHECK_THROWS_AS(oracle::brute_positions(3, 4), InvalidArgs);
}
