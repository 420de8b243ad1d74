#include <doctest.h>

#include "crystalr/errors.hpp"
#include "crystalr/literal.hpp"
#include "helpers.hpp"

using namespace crystalr;
using namespace testing_helpers;

TEST_CASE("word literals") {
  CHECK(c1("0 1 2b 0b", 3).coords() == std::vector<int>{1, 0, 0, 0, 1, 0});
  CHECK(c1("0 1 2b 0b", 3).capacity() == 4);
  CHECK_THROWS_AS(c1("2 1", 3), ParseError);
  CHECK_THROWS_AS(c1("4", 3), ParseError);
  CHECK_THROWS_AS(c1("x", 3), ParseError);
  CHECK_THROWS_AS(a2("0 0b", 3), ParseError);
}

TEST_CASE("coordinate literals") {
  auto b = parse_coords("2,0,1,1;0,1,1,1;9", Family::C1, 4);
  CHECK(word(b) == "0 1 1 3 4 3b 2b 1b 0b");
  CHECK(parse_coords("1,-;-;1", Family::A2, 3).coords() == std::vector<int>{1, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(parse_coords("1,1;1", Family::C1, 2), ParseError);
  CHECK_THROWS_AS(parse_coords("1,1;0,0;1", Family::C1, 2), ParseError);
  CHECK_THROWS_AS(parse_coords("1,1;0,0;3", Family::A2, 2), ParseError);
}

TEST_CASE("family names") {
  CHECK(parse_family("c1") == Family::C1);
  CHECK(parse_family("A2") == Family::A2);
  CHECK_THROWS_AS(parse_family("b3"), ParseError);
}
