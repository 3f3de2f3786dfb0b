#include <doctest.h>

#include <stdexcept>

#include "kinkxxz/half_int.hpp"

using namespace kinkxxz;
using namespace kinkxxz::literals;

TEST_CASE("parse accepts fractions, decimals and integers") {
  CHECK(HalfInt::parse("3/2").twice() == 3);
  CHECK(HalfInt::parse("-1/2").twice() == -1);
  CHECK(HalfInt::parse("1.5").twice() == 3);
  CHECK(HalfInt::parse("-0.5").twice() == -1);
  CHECK(HalfInt::parse("-.5").twice() == -1);
  CHECK(HalfInt::parse("2").twice() == 4);
  CHECK(HalfInt::parse("2.0").twice() == 4);
  CHECK(HalfInt::parse("4/2").twice() == 4);
  CHECK(HalfInt::parse("+3").twice() == 6);
}

TEST_CASE("parse rejects non half-integers") {
  for (const char* s : {"", "0.3", "1/3", "abc", "1.25", "3/0", "1/2x", "--1"}) {
    CAPTURE(s);
    CHECK_THROWS_AS(HalfInt::parse(s), std::invalid_argument);
  }
}

TEST_CASE("arithmetic and formatting") {
  CHECK((3_half + 1_half) == 2_h);
  CHECK((3_half - 2_h).twice() == -1);
  CHECK((-3_half).to_string() == "-3/2");
  CHECK(HalfInt::from_int(-2).to_string() == "-2");
  CHECK((2 * 3_half) == 3_h);
  CHECK((3_half).value() == 1.5);
  CHECK(3_half < 2_h);
  CHECK(!(3_half).is_integer());
  CHECK(HalfInt::parse(HalfInt::from_twice(-7).to_string()).twice() == -7);
}
