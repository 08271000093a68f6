#include <catch2/catch_amalgamated.hpp>

#include "mixsum/ideal.hpp"
#include "mixsum/random_gen.hpp"
#include "oracles.hpp"

using namespace mixsum;

namespace {
PolyRing Rxy({"x", "y"});
PolyRing Rxyz({"x", "y", "z"});

MonomialIdeal ideal(const std::string& text, const PolyRing& R = Rxy) {
  return parse_ideal(text, R);
}
}  // namespace

TEST_CASE("minimalize") {
  CHECK(to_string(ideal("x^2, x^3")) == "x^2");
  CHECK(to_string(ideal("x, y")) == "x, y");
  CHECK(to_string(ideal("x*y, x^2*y, y^3")) == "x*y, y^3");
  // idempotent
  auto I = ideal("x*y, x^2*y, y^3");
  CHECK(minimalize(I.gens(), I.ring()) == I);
  CHECK_THROWS_AS(minimalize({Monomial({1, 0, 0})}, Rxy), RingMismatch);
}

TEST_CASE("zero and unit ideals") {
  auto Z = zero_ideal(Rxy);
  CHECK(Z.is_zero());
  CHECK(Z.gens().empty());
  auto U = unit_ideal(Rxy);
  CHECK(U.is_unit());
  CHECK(!U.is_proper());
  CHECK(U.num_gens() == 1);
  CHECK(to_string(parse_ideal("0", Rxy)) == "0");
}

TEST_CASE("combine basics") {
  CHECK(intersect(ideal("x"), ideal("y")) == ideal("x*y"));
  CHECK(colon(ideal("x^2"), ideal("x")) == ideal("x"));
  CHECK(sum(ideal("x^2"), ideal("y")) == ideal("y, x^2"));
  CHECK(product(ideal("x, y"), ideal("x, y")) == ideal("x^2, x*y, y^2"));
  CHECK_THROWS_AS(colon(ideal("x"), zero_ideal(Rxy)), DomainError);
  CHECK_THROWS_AS(sum(ideal("x"), parse_ideal("x", Rxyz)), RingMismatch);
}

TEST_CASE("colon against the degreewise oracle") {
  auto I = parse_ideal("x*y, z", Rxyz);
  auto J = parse_ideal("x", Rxyz);
  auto C = colon(I, J);
  CHECK(C == parse_ideal("y, z", Rxyz));
  for (const auto& m : oracles::monomials_up_to(Rxyz, 3))
    CHECK(C.contains_monomial(m) == oracles::colon_member(I, J, m));
}

TEST_CASE("power") {
  CHECK(power(ideal("x, y"), 2) == ideal("x^2, x*y, y^2"));
  auto I = ideal("x^2, y");
  CHECK(power(I, 1) == I);
  CHECK(power(I, 0) == unit_ideal(Rxy));
  CHECK(power(ideal("x*y"), 3) == ideal("x^3*y^3"));
  // associativity of powers
  CHECK(power(I, 3) == product(power(I, 1), power(I, 2)));
  CHECK_FALSE(power(I, 4).is_zero());
}

TEST_CASE("saturate") {
  CHECK(saturate(ideal("x^2, x*y"), ideal("x, y")) == ideal("x"));
  CHECK(saturate(ideal("x"), ideal("y")) == ideal("x"));
  CHECK(saturate(ideal("x^2, x*y, y^3"), maximal_ideal(Rxy)) == unit_ideal(Rxy));
}

TEST_CASE("radical") {
  CHECK(radical(ideal("x^2*y")) == ideal("x*y"));
  auto sqfree = parse_ideal("x*y, z", Rxyz);
  CHECK(radical(sqfree) == sqfree);
  CHECK(radical(ideal("x^2, y^3")) == ideal("x, y"));
}

TEST_CASE("lcm lattice") {
  auto L = lcm_lattice(ideal("x^2, x*y"));
  REQUIRE(L.size() == 3);
  CHECK(L[0] == parse_monomial("x^2", Rxy));
  CHECK(L[1] == parse_monomial("x*y", Rxy));
  CHECK(L[2] == parse_monomial("x^2*y", Rxy));
  CHECK(lcm_lattice(ideal("x")).size() == 1);
  CHECK(lcm_lattice(parse_ideal("x, y, z", Rxyz)).size() == 7);
  Caps tight;
  tight.lattice_gens = 2;
  CHECK_THROWS_AS(lcm_lattice(parse_ideal("x, y, z", Rxyz), tight), ResourceLimit);
}

TEST_CASE("contains") {
  CHECK(contains(ideal("x"), ideal("x^2*y")));
  CHECK_FALSE(contains(ideal("x^2"), ideal("x")));
  auto I = ideal("x^2, x*y");
  CHECK(contains(I, power(I, 2)));
  // partial order
  auto J = ideal("x^2");
  CHECK((contains(I, J) && contains(J, I)) == (I == J));
}

TEST_CASE("mixed embedding") {
  PolyRing R({"x"}), S({"y"});
  auto emb = mixed_embed(R, S, parse_ideal("x^2", R), parse_ideal("y^2", S));
  CHECK(emb.T.arity() == 2);
  CHECK(to_string(emb.P) == "x^2, y^2");
  CHECK(emb.P.num_gens() == 2);
  CHECK(intersect(emb.I_T, emb.J_T) == product(emb.I_T, emb.J_T));

  // name collision gets suffixed
  PolyRing S2({"x", "y"});
  auto emb2 = mixed_embed(R, S2, parse_ideal("x^2", R), parse_ideal("x*y", S2));
  CHECK(emb2.T.arity() == 3);
  CHECK(emb2.T.var_name(1) == "x_1");

  PolyRing S3({"y"}, 2);
  CHECK_THROWS_AS(mixed_embed(R, S3, parse_ideal("x", R), parse_ideal("y", S3)),
                  RingMismatch);
}

TEST_CASE("gen count adds under mixed embedding") {
  IdealGen gen(141);
  PolyRing R({"x", "y"}), S({"u", "v"});
  for (int trial = 0; trial < 25; ++trial) {
    auto I = gen.ideal(R, 4, 3);
    auto J = gen.ideal(S, 4, 3);
    auto emb = mixed_embed(R, S, I, J);
    CHECK(emb.P.num_gens() == I.num_gens() + J.num_gens());
  }
}

// The intersection identities underpinning everything else:
// I^{p+r} J^q n I^r J^{s+q} = I^{p+r} P^q n I^r J^{s+q} = I^{p+r} J^{s+q}.
TEST_CASE("power intersection identities") {
  IdealGen gen(7);
  PolyRing R({"x", "y"}), S({"u", "v"});
  for (int trial = 0; trial < 5; ++trial) {
    auto emb = mixed_embed(R, S, gen.ideal(R, 3, 2), gen.ideal(S, 3, 2));
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= 2; ++q)
        for (int r = 0; r <= 2; ++r)
          for (int s = 0; s <= 2; ++s) {
            auto lhs_j = intersect(product(power(emb.I_T, p + r), power(emb.J_T, q)),
                                   product(power(emb.I_T, r), power(emb.J_T, s + q)));
            auto lhs_p = intersect(product(power(emb.I_T, p + r), power(emb.P, q)),
                                   product(power(emb.I_T, r), power(emb.J_T, s + q)));
            auto rhs = product(power(emb.I_T, p + r), power(emb.J_T, s + q));
            REQUIRE(lhs_j == rhs);
            REQUIRE(lhs_p == rhs);
          }
  }
}

TEST_CASE("combine algebra laws") {
  IdealGen gen(99);
  for (int trial = 0; trial < 20; ++trial) {
    auto A = gen.ideal(Rxyz, 4, 3);
    auto B = gen.ideal(Rxyz, 4, 3);
    auto C = gen.ideal(Rxyz, 4, 3);
    CHECK(sum(A, B) == sum(B, A));
    CHECK(product(A, B) == product(B, A));
    CHECK(intersect(A, B) == intersect(B, A));
    CHECK(product(A, product(B, C)) == product(product(A, B), C));
    CHECK(intersect(A, intersect(B, C)) == intersect(intersect(A, B), C));
    // intersection really is the set-theoretic one
    for (const auto& m : oracles::monomials_up_to(Rxyz, 4))
      CHECK(intersect(A, B).contains_monomial(m) ==
            (A.contains_monomial(m) && B.contains_monomial(m)));
  }
}

TEST_CASE("ideal parse errors") {
  CHECK_THROWS_AS(parse_ideal("x,,y", Rxy), ParseError);
  CHECK_THROWS_AS(parse_ideal("", Rxy), ParseError);
  CHECK_THROWS_AS(parse_ideal("x^, y", Rxy), ParseError);
}

TEST_CASE("digest is canonical") {
  auto I = ideal("x^2, x*y, y^3");
  auto J = parse_ideal("y^3, x*y, x^2, x^2*y", Rxy);  // same ideal, noisier text
  CHECK(canonical_digest(I) == canonical_digest(J));
  CHECK(canonical_digest(I) != canonical_digest(ideal("x^2, y^3")));
}
