#include <catch2/catch_amalgamated.hpp>

#include "mixsum/betti.hpp"
#include "mixsum/lind.hpp"
#include "mixsum/mixedres.hpp"
#include "mixsum/random_gen.hpp"

using namespace mixsum;

namespace {
PolyRing Rxy({"x", "y"});
PolyRing Rxyz({"x", "y", "z"});

MonomialIdeal ideal(const std::string& text, const PolyRing& R = Rxy) {
  return parse_ideal(text, R);
}
}  // namespace

TEST_CASE("taylor complex of (x^2, xy)") {
  auto C = taylor_complex(ideal("x^2, x*y"), 0);
  check_complex(C);
  REQUIRE(C.modules.size() == 2);
  CHECK(C.rank(0) == 2);
  CHECK(C.rank(1) == 1);
  CHECK(C.modules[1][0] == parse_monomial("x^2*y", Rxy));
  // d(e_{12}) = y e_1 - x e_2 up to the generator order
  const auto& col = C.diffs[1].cols[0];
  REQUIRE(col.size() == 2);
  CHECK(col[0].second.front().mono == parse_monomial("y", Rxy));
  CHECK(col[1].second.front().mono == parse_monomial("x", Rxy));
  CHECK(col[0].second.front().coeff == Rational(1));
  CHECK(col[1].second.front().coeff == Rational(-1));
}

TEST_CASE("taylor complex shapes") {
  auto principal = taylor_complex(ideal("x^2*y"), 0);
  CHECK(principal.modules.size() == 1);
  CHECK(principal.rank(0) == 1);

  auto koszul = taylor_complex(parse_ideal("x, y, z", Rxyz), 0);
  check_complex(koszul);
  CHECK(koszul.rank(0) == 3);
  CHECK(koszul.rank(1) == 3);
  CHECK(koszul.rank(2) == 1);

  Caps tight;
  tight.taylor_gens = 2;
  CHECK_THROWS_AS(taylor_complex(parse_ideal("x, y, z", Rxyz), 0, tight),
                  ResourceLimit);
}

TEST_CASE("minimalization reaches the Betti ranks") {
  // Taylor of m^2 has ranks (3,3,1); minimal is (3,2)
  auto C = minimalize_complex(taylor_complex(ideal("x^2, x*y, y^2"), 0));
  check_complex(C);
  REQUIRE(C.modules.size() == 2);
  CHECK(C.rank(0) == 3);
  CHECK(C.rank(1) == 2);

  // already-minimal complexes are untouched
  auto K = taylor_complex(ideal("x, y"), 0);
  auto K2 = minimalize_complex(K);
  CHECK(K2.modules == K.modules);

  // idempotent
  auto C2 = minimalize_complex(C);
  CHECK(C2.modules == C.modules);
}

TEST_CASE("minimalized Taylor ranks equal Hochster Betti numbers") {
  IdealGen gen(808);
  for (int trial = 0; trial < 10; ++trial) {
    auto I = gen.ideal(Rxyz, 5, 3);
    if (I.is_unit()) continue;
    for (long long p : {0LL, 2LL}) {
      auto res = minimalize_complex(taylor_complex(I, p));
      check_complex(res);
      auto bt = coarsen(betti_table(I, p));
      CHECK(complex_betti(res).entries == bt.entries);
    }
  }
}

TEST_CASE("linear part") {
  // resolution of (x^2, y^2): the syzygy column is quadratic, so the linear
  // part is the zero differential
  auto C = minimalize_complex(taylor_complex(ideal("x^2, y^2"), 0));
  auto L = linear_part(C);
  CHECK(L.diffs[1].cols[0].empty());

  // a linear resolution is unchanged
  auto K = minimalize_complex(taylor_complex(ideal("x, y"), 0));
  auto LK = linear_part(K);
  CHECK(LK.diffs[1].cols == K.diffs[1].cols);

  CHECK_THROWS_AS(linear_part(taylor_complex(ideal("x^2, x*y, y^2"), 0)),
                  DomainError);
}

TEST_CASE("tensor product of complexes") {
  PolyRing R({"x"}), S({"y"});
  auto emb = mixed_embed(R, S, parse_ideal("x^2", R), parse_ideal("y^3", S));
  auto A = minimal_resolution(emb.I_T, 0);
  auto B = minimal_resolution(emb.J_T, 0);
  auto C = tensor_product(A, B);
  check_complex(C);
  CHECK(C.rank(0) == 1);
  CHECK(C.modules[0][0] == parse_monomial("x^2*y^3", emb.T));

  // Koszul complex as tensor: (x) x (y) has ranks 1,2,1 off the full sum
  auto AX = minimal_resolution(parse_ideal("x", emb.T), 0);
  auto BY = minimal_resolution(parse_ideal("y", emb.T), 0);
  auto XY = tensor_product(AX, BY);
  check_complex(XY);
  CHECK(XY.rank(0) == 1);
  CHECK(XY.augmentation[0].mono == parse_monomial("x*y", emb.T));
}

TEST_CASE("graded kernel examples") {
  CoeffField F(0);
  // d = (x y): kernel generated by (y, -x)
  SparseMatrix d;
  d.rows = 1;
  d.cols.resize(2);
  d.set_entry(0, 0, poly_term(Rational(1), parse_monomial("x", Rxy), F));
  d.set_entry(0, 1, poly_term(Rational(1), parse_monomial("y", Rxy), F));
  auto ker = graded_kernel(d, 2, F);
  REQUIRE(ker.size() == 1);
  REQUIRE(ker[0].comps.size() == 2);

  // identity: kernel 0
  SparseMatrix id2;
  id2.rows = 2;
  id2.cols.resize(2);
  id2.set_entry(0, 0, poly_term(Rational(1), Monomial::one(2), F));
  id2.set_entry(1, 1, poly_term(Rational(1), Monomial::one(2), F));
  CHECK(graded_kernel(id2, 2, F).empty());

  // zero matrix: kernel is everything
  SparseMatrix z;
  z.rows = 1;
  z.cols.resize(3);
  CHECK(graded_kernel(z, 2, F).size() == 3);
}

TEST_CASE("homology detection on complexes") {
  // Koszul complex on x, y is exact at degree 1
  auto K = minimalize_complex(taylor_complex(ideal("x, y"), 0));
  CHECK_FALSE(homology_nonzero(K, 1));
  CHECK(homology_nonzero(K, 5) == false);

  // linear part of resolution of R/(x^2): H_1 != 0
  PolyRing Rx({"x"});
  auto q = quotient_resolution(unit_ideal(Rx), parse_ideal("x^2", Rx), 0);
  check_complex(q);
  auto L = linear_part(q);
  CHECK(homology_nonzero(L, 1));
}

TEST_CASE("chain lift of simple inclusions") {
  // (x^2) <= (x): single entry x
  auto F = minimal_resolution(ideal("x^2"), 0);
  auto G = minimal_resolution(ideal("x"), 0);
  auto phi = chain_lift(F, G);
  REQUIRE(phi.maps[0].col_count() == 1);
  CHECK(phi.maps[0].entry(0, 0)->front().mono == parse_monomial("x", Rxy));

  // identity inclusion lifts with a unit entry
  auto I = ideal("x^2, x*y");
  auto FI = minimal_resolution(I, 0);
  auto psi = chain_lift(FI, FI);
  check_chain_map(FI, FI, psi);
  CHECK(classify_lifting(psi).verdict == TorVerdict::NotTorVanishing);
}

TEST_CASE("mixed power resolution matches Hochster tables") {
  IdealGen gen(4242);
  PolyRing R({"x", "y"}), S({"u", "v"});
  for (int trial = 0; trial < 4; ++trial) {
    auto I = gen.ideal(R, 3, 2);
    auto J = gen.ideal(S, 3, 2);
    auto emb = mixed_embed(R, S, I, J);
    for (long long s = 1; s <= 2; ++s) {
      auto res = mixed_power_resolution({emb.I_T, emb.J_T}, s, 0);
      CHECK(res.minimal);
      check_complex(res);
      auto direct = coarsen(betti_table(power(emb.P, s), 0));
      CHECK(complex_betti(res).entries == direct.entries);
    }
  }
}
