#include <catch2/catch_amalgamated.hpp>

#include "mixsum/core.hpp"

using namespace mixsum;

TEST_CASE("ring construction validates input") {
  CHECK_NOTHROW(PolyRing({"x", "y"}, 0));
  CHECK_NOTHROW(PolyRing({"x"}, 2));
  CHECK_THROWS_AS(PolyRing({"x", "x"}, 0), DomainError);
  CHECK_THROWS_AS(PolyRing({""}, 0), DomainError);
  CHECK_THROWS_AS(PolyRing({"x"}, 4), DomainError);
  CHECK_THROWS_AS(PolyRing({"x"}, 1), DomainError);
}

TEST_CASE("monomial arithmetic") {
  PolyRing R({"x", "y", "z"});
  Monomial x = Monomial::variable(3, 0), y = Monomial::variable(3, 1);
  Monomial m = x.pow(2) * y;
  CHECK(m.degree() == 3);
  CHECK(x.divides(m));
  CHECK(!y.pow(2).divides(m));
  CHECK((m / x) == x * y);
  CHECK(m.lcm(y.pow(3)) == x.pow(2) * y.pow(3));
  CHECK(m.gcd(y.pow(3)) == y);
  CHECK(m.radical() == x * y);
  CHECK(m.support() == std::vector<std::size_t>{0, 1});
  CHECK(Monomial::one(3).is_one());
}

TEST_CASE("canonical order: degree then descending lex") {
  // x^2 < x*y < y^2 within degree 2; degree dominates.
  Monomial x2({2, 0}), xy({1, 1}), y2({0, 2}), x({1, 0});
  CHECK(canonical_less(x, x2));
  CHECK(canonical_less(x2, xy));
  CHECK(canonical_less(xy, y2));
  CHECK(!canonical_less(y2, xy));
}

TEST_CASE("monomial text round trip") {
  PolyRing R({"x", "y"});
  CHECK(to_string(parse_monomial("x^2*y", R), R) == "x^2*y");
  CHECK(to_string(parse_monomial("y", R), R) == "y");
  CHECK(to_string(parse_monomial("1", R), R) == "1");
  CHECK(to_string(parse_monomial(" x ^ 2 * y ", R), R) == "x^2*y");
  CHECK(parse_monomial("x*x", R) == parse_monomial("x^2", R));
}

TEST_CASE("parse errors carry positions") {
  PolyRing R({"x", "y"});
  try {
    parse_monomial("x^", R);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
  CHECK_THROWS_AS(parse_monomial("x y", R), ParseError);
  CHECK_THROWS_AS(parse_monomial("z", R), ParseError);
  CHECK_THROWS_AS(parse_monomial("", R), ParseError);
  CHECK_THROWS_AS(parse_ring("", 0), ParseError);
}

TEST_CASE("ring parsing") {
  PolyRing R = parse_ring("x, y,z");
  CHECK(R.arity() == 3);
  CHECK(R.var_name(2) == "z");
  CHECK(parse_ring("u v").arity() == 2);
}
