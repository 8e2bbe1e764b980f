#include <doctest.h>

#include "fockcryst/errors.hpp"
#include "fockcryst/rat.hpp"

using namespace fockcryst;

TEST_CASE("rationals reduce and compare exactly") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-3, -6) == Rat(1, 2));
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
  CHECK(Rat(1) / Rat(-1, 2) == Rat(-2));
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(7, 2).floor() == 3);
  CHECK(Rat(-1, 2) < Rat(1, 3));
}

TEST_CASE("rational parsing is strict") {
  CHECK(Rat::parse("3") == Rat(3));
  CHECK(Rat::parse("-1/2") == Rat(-1, 2));
  CHECK(Rat::parse("4/6") == Rat(2, 3));
  CHECK(Rat::parse("-1/2").str() == "-1/2");
  CHECK(Rat::parse("4/2").str() == "2");
  CHECK_THROWS_AS(Rat::parse(""), ParseError);
  CHECK_THROWS_AS(Rat::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rat::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rat::parse("a/2"), ParseError);
  CHECK_THROWS_AS(Rat::parse("1.5"), ParseError);
}

TEST_CASE("modular reduction lands in [0, m)") {
  CHECK(mod_reduce(Rat(-4), Rat(2)) == Rat(0));
  CHECK(mod_reduce(Rat(-3), Rat(2)) == Rat(1));
  CHECK(mod_reduce(Rat(7, 2), Rat(3, 2)) == Rat(1, 2));
  CHECK(is_multiple_of(Rat(-4), Rat(2)));
  CHECK(is_multiple_of(Rat(0), Rat(2)));
  CHECK(!is_multiple_of(Rat(1, 3), Rat(2)));
  CHECK(is_multiple_of(Rat(3), Rat(3, 2)));
}
