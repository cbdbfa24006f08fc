#include <doctest.h>

#include <stdexcept>

#include "reconfrel/rational.hpp"

using namespace reconfrel;

TEST_CASE("parse_decimal handles plain decimals") {
  CHECK(parse_decimal("0.99") == Rat(99, 100));
  CHECK(parse_decimal("0.5") == Rat(1, 2));
  CHECK(parse_decimal("1") == Rat(1));
  CHECK(parse_decimal("0") == Rat(0));
  CHECK(parse_decimal("1.0") == Rat(1));
  CHECK(parse_decimal(".25") == Rat(1, 4));
  CHECK(parse_decimal("2.") == Rat(2));
  CHECK(parse_decimal("0.9999991") == Rat(9999991, 10000000));
  CHECK(parse_decimal("  0.75 ") == Rat(3, 4));
}

TEST_CASE("parse_decimal handles signs and fractions") {
  CHECK(parse_decimal("-0.5") == Rat(-1, 2));
  CHECK(parse_decimal("+0.5") == Rat(1, 2));
  CHECK(parse_decimal("3/8") == Rat(3, 8));
  CHECK(parse_decimal("-7/16") == Rat(-7, 16));
  CHECK(parse_decimal("37823/65536") == Rat(37823, 65536));
}

TEST_CASE("parse_decimal rejects malformed input") {
  CHECK_THROWS_AS(parse_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("."), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("1/0"), std::invalid_argument);
}

TEST_CASE("parse round-trips through decimal_string") {
  for (const char* s : {"0.99", "0.375", "0.4375", "0.31640625", "0.59375"}) {
    CHECK(decimal_string(parse_decimal(s), 12) == s);
  }
}

TEST_CASE("decimal_string renders significant digits, half-up") {
  CHECK(decimal_string(Rat(99960399, 100000000), 7) == "0.999604");
  CHECK(decimal_string(Rat(99960399, 100000000), 4) == "0.9996");
  CHECK(decimal_string(Rat(37823, 65536), 7) == "0.5771332");
  CHECK(decimal_string(Rat(37823, 65536), 5) == "0.57713");
  CHECK(decimal_string(Rat(7, 16), 4) == "0.4375");
  CHECK(decimal_string(Rat(1, 3), 3) == "0.333");
  CHECK(decimal_string(Rat(2, 3), 3) == "0.667");
  CHECK(decimal_string(Rat(0), 7) == "0");
  CHECK(decimal_string(Rat(1), 7) == "1");
  CHECK(decimal_string(Rat(-1, 2), 3) == "-0.5");
  CHECK(decimal_string(Rat(1, 1000), 2) == "0.001");
  CHECK(decimal_string(Rat(12345, 10), 3) == "1230");
}

TEST_CASE("decimal_string strips trailing zeros") {
  CHECK(decimal_string(Rat(1, 2), 7) == "0.5");
  CHECK(decimal_string(Rat(3, 4), 7) == "0.75");
  CHECK(decimal_string(Rat(9996, 10000), 7) == "0.9996");
}

TEST_CASE("decimal_string carries rounding across a power of ten") {
  CHECK(decimal_string(Rat(999, 1000), 2) == "1");
  CHECK(decimal_string(Rat(9999991, 10000000), 6) == "0.999999");
  CHECK(decimal_string(Rat(95, 1000), 1) == "0.1");
}

TEST_CASE("fixed_decimal_string pads to the requested scale") {
  CHECK(fixed_decimal_string(Rat(1, 2), 4) == "0.5000");
  CHECK(fixed_decimal_string(Rat(99960399, 100000000), 4) == "0.9996");
  CHECK(fixed_decimal_string(Rat(1), 2) == "1.00");
  CHECK(fixed_decimal_string(Rat(0), 3) == "0.000");
  CHECK(fixed_decimal_string(Rat(1, 3), 4) == "0.3333");
  CHECK(fixed_decimal_string(Rat(2, 3), 4) == "0.6667");
  CHECK(fixed_decimal_string(Rat(5, 1000), 2) == "0.01");
  CHECK(fixed_decimal_string(Rat(7), 0) == "7");
}

TEST_CASE("rational_string") {
  CHECK(rational_string(Rat(7, 16)) == "7/16");
  CHECK(rational_string(Rat(2)) == "2");
  CHECK(rational_string(Rat(-3, 8)) == "-3/8");
  CHECK(rational_string(Rat(4, 8)) == "1/2");
}

TEST_CASE("pow10") {
  CHECK(pow10(0) == 1);
  CHECK(pow10(3) == 1000);
  CHECK(pow10(20) == Int("100000000000000000000"));
}
