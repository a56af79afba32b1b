#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "chandas/errors.hpp"
#include "chandas/indexing.hpp"
#include "chandas/prastara.hpp"

using namespace chandas;

namespace {

Natural horner(const BaseBNumeral& num) {
  Natural v = 0;
  for (const unsigned d : num.digits) v = v * num.base + d;
  return v;
}

}  // namespace

TEST_CASE("row recovery by halving") {
  CHECK(nashtam(RowIndex(Natural(5)), 3).str() == "GGL");
  CHECK(nashtam(RowIndex(Natural(1)), 3).str() == "GGG");
  CHECK(nashtam(RowIndex(Natural(8)), 3).str() == "LLL");
  CHECK(nashtam(RowIndex(Natural(2)), 4).str() == "LGGG");
  CHECK_THROWS_AS(nashtam(RowIndex(Natural(9)), 3), IndexOutOfRange);
  CHECK_THROWS_AS(nashtam(RowIndex(Natural(5)), 0), InvalidArgs);
}

TEST_CASE("ranking by the doubling scan") {
  CHECK(uddishtam_pingala(parse_sequence("GLG")).value() == 3);
  CHECK(uddishtam_pingala(parse_sequence("GGG")).value() == 1);
  CHECK(uddishtam_pingala(parse_sequence("LGL")).value() == 6);
  CHECK(uddishtam_pingala(parse_sequence("L")).value() == 2);
  CHECK(uddishtam_pingala(parse_sequence("G")).value() == 1);
}

TEST_CASE("ranking by weight summation") {
  CHECK(uddishtam_kedara(parse_sequence("GLL")).value() == 7);
  CHECK(uddishtam_kedara(parse_sequence("LLL")).value() == 8);
  CHECK(uddishtam_kedara(parse_sequence("GGG")).value() == 1);
  CHECK(uddishtam_kedara(parse_sequence("GLG")).value() == 3);
}

TEST_CASE("ranks match positions in the expansion") {
  const Prastara p = pingala_prastara(3);
  Natural k = 0;
  for (const GlSequence& row : p.rows) {
    k += 1;
    CHECK(uddishtam_pingala(row).value() == k);
    CHECK(uddishtam_kedara(row).value() == k);
  }
}

TEST_CASE("both ranking rules invert row recovery exhaustively") {
  for (unsigned n = 1; n <= 12; ++n) {
    for (Natural k = 1; k <= pow2(n); k += 1) {
      const RowIndex idx(k);
      const GlSequence seq = nashtam(idx, n);
      CHECK(uddishtam_pingala(seq) == idx);
      CHECK(uddishtam_kedara(seq) == idx);
      CHECK(to_row_index(seq) == idx);
    }
  }
}

TEST_CASE("base-10 worked example: digits 7 8 9 sit at position 790") {
  const BaseBNumeral num = parse_numeral("789", 10);
  CHECK(num.digits == std::vector<unsigned>{7, 8, 9});
  CHECK(rank_base_b(num) == 790);
}

TEST_CASE("rank of small numerals") {
  CHECK(rank_base_b(parse_numeral("0", 10)) == 1);
  CHECK(rank_base_b(parse_numeral("4", 10)) == 5);
  CHECK(rank_base_b(parse_numeral("10", 2)) == 3);
  CHECK(rank_base_b(parse_numeral("zz", 36)) == 1296);
}

TEST_CASE("numeral parsing and digit validation") {
  const BaseBNumeral hex = parse_numeral("3a9F", 16);
  CHECK(hex.digits == std::vector<unsigned>{3, 10, 9, 15});
  CHECK_THROWS_AS(parse_numeral("", 10), EmptyInput);
  CHECK_THROWS_AS(parse_numeral("12", 1), InvalidBase);
  CHECK_THROWS_AS(parse_numeral("12", 0), InvalidBase);
  CHECK_THROWS_AS(parse_numeral("12", 37), InvalidArgs);
  CHECK_THROWS_AS(parse_numeral("1.2", 10), InvalidCharacter);
  try {
    parse_numeral("192", 8);
    FAIL("expected DigitOutOfRange");
  } catch (const DigitOutOfRange& e) {
    CHECK(e.index == 1);
    CHECK(e.digit == 9);
    CHECK(e.base == 8);
  }
  CHECK_THROWS_AS(rank_base_b(BaseBNumeral{8, {1, 9}}), DigitOutOfRange);
  CHECK_THROWS_AS(rank_base_b(BaseBNumeral{10, {}}), EmptyInput);
  CHECK_THROWS_AS(rank_base_b(BaseBNumeral{1, {0}}), InvalidBase);
}

TEST_CASE("rank equals place value plus one on random numerals") {
  std::mt19937_64 rng(20260819);
  const unsigned bases[] = {2, 3, 10, 16};
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned base = bases[rng() % 4];
    const std::size_t length = 1 + rng() % 50;
    BaseBNumeral num;
    num.base = base;
    for (std::size_t i = 0; i < length; ++i) {
      num.digits.push_back(static_cast<unsigned>(rng() % base));
    }
    CHECK(rank_base_b(num) == horner(num) + 1);
  }
}

TEST_CASE("every prefix scan state is the prefix's own rank") {
  std::mt19937_64 rng(11);
  for (const unsigned base : {2u, 10u, 16u}) {
    BaseBNumeral num;
    num.base = base;
    for (int i = 0; i < 30; ++i) {
      num.digits.push_back(static_cast<unsigned>(rng() % base));
    }
    BaseBNumeral prefix;
    prefix.base = base;
    for (const unsigned d : num.digits) {
      prefix.digits.push_back(d);
      CHECK(rank_base_b(prefix) == horner(prefix) + 1);
    }
  }
}

TEST_CASE("binary rank of the mirrored row equals the doubling scan") {
  for (unsigned n = 1; n <= 10; ++n) {
    PrastaraStream rows(n);
    while (auto row = rows.next()) {
      BaseBNumeral num;
      num.base = 2;
      for (std::size_t i = row->size(); i-- > 0;) {
        num.digits.push_back((*row)[i] == Syllable::Laghu ? 1 : 0);
      }
      CHECK(rank_base_b(num) == uddishtam_pingala(*row).value());
    }
  }
}
