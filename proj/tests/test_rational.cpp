#include <doctest.h>

#include "dtop/rational.hpp"

using namespace dtop;

TEST_CASE("rational parse and format") {
  CHECK(rat_str(rat_parse("3/6")) == "1/2");
  CHECK(rat_str(rat_parse("4/2")) == "2");
  CHECK(rat_str(rat_parse("-4/8")) == "-1/2");
  CHECK(rat_str(rat_parse("0")) == "0");
  CHECK(rat_str(rat_parse("17")) == "17");
  CHECK(rat_parse("2/4") == rat(1, 2));
}

TEST_CASE("rational parse rejects malformed input") {
  CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse(" 1"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("big values stay exact") {
  Rat big = rat_parse("123456789123456789/2");
  CHECK(rat_str(big + big) == "123456789123456789");
}

TEST_CASE("l1 distance") {
  CHECK(l1_distance({rat(0), rat(0)}, {rat(1), rat(1)}) == rat(2));
  CHECK(l1_distance({rat(1, 3)}, {rat(1, 2)}) == rat(1, 6));
  CHECK_THROWS_AS(l1_distance({rat(0)}, {rat(0), rat(0)}), std::invalid_argument);
}
