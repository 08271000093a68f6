#include <catch2/catch_amalgamated.hpp>

#include "mixsum/betti.hpp"
#include "mixsum/random_gen.hpp"

using namespace mixsum;

namespace {
PolyRing Rxy({"x", "y"});
PolyRing Rxyz({"x", "y", "z"});

MonomialIdeal ideal(const std::string& text, const PolyRing& R = Rxy) {
  return parse_ideal(text, R);
}
}  // namespace

TEST_CASE("upper Koszul complexes") {
  auto I = ideal("x, y");
  auto a = parse_monomial("x*y", Rxy);
  auto K = upper_koszul(I, a);
  // faces {}, {x}, {y} but not {x,y}: two isolated points
  CHECK(K.complex.faces() == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(K.complex.facets() == std::vector<std::uint32_t>{1, 2});

  // x/x = 1 is not in (x), so only the empty face survives
  auto K2 = upper_koszul(ideal("x"), parse_monomial("x", Rxy));
  CHECK(K2.complex.faces() == std::vector<std::uint32_t>{0});

  auto K3 = upper_koszul(ideal("x^2"), parse_monomial("x^2", Rxy));
  CHECK(K3.complex.faces() == std::vector<std::uint32_t>{0});
}

TEST_CASE("homology dims") {
  for (long long p : {0LL, 2LL, 3LL}) {
    // two isolated vertices: H~_0 = 1
    SimplicialComplex two_pts(2, {0u, 1u, 2u});
    auto d = homology_dims(two_pts, p);
    CHECK(d[0] == 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == 0);

    // full simplex on 3 vertices: contractible
    std::vector<std::uint32_t> all;
    for (std::uint32_t m = 0; m < 8; ++m) all.push_back(m);
    auto dims = homology_dims(SimplicialComplex(3, all), p);
    for (auto v : dims) CHECK(v == 0);

    // irrelevant complex {-1 face only}: H~_{-1} = 1
    auto de = homology_dims(SimplicialComplex(0, {0u}), p);
    CHECK(de[0] == 1);

    // void complex: everything zero
    auto dv = homology_dims(SimplicialComplex(2, {}), p);
    for (auto v : dv) CHECK(v == 0);

    // hollow triangle: circle, H~_1 = 1
    SimplicialComplex circle(3, {0u, 1u, 2u, 4u, 3u, 5u, 6u});
    auto dc = homology_dims(circle, p);
    CHECK(dc[1] == 0);
    CHECK(dc[2] == 1);
  }
}

TEST_CASE("betti table examples") {
  // triangle edge ideal: 0 -> R^2 -> R^3 -> I
  auto t = coarsen(betti_table(parse_ideal("x*y, y*z, z*x", Rxyz), 0));
  CHECK(t.total(0) == 3);
  CHECK(t.total(1) == 2);
  CHECK(t.pd() == 1);
  CHECK(t.reg() == 2);

  auto free1 = coarsen(betti_table(ideal("x"), 0));
  CHECK(free1.total(0) == 1);
  CHECK(free1.pd() == 0);

  auto koszul3 = coarsen(betti_table(parse_ideal("x, y, z", Rxyz), 0));
  CHECK(koszul3.total(0) == 3);
  CHECK(koszul3.total(1) == 3);
  CHECK(koszul3.total(2) == 1);

  CHECK_THROWS_AS(betti_table(zero_ideal(Rxy), 0), DomainError);
  CHECK_THROWS_AS(betti_table(unit_ideal(Rxy), 0), DomainError);
}

TEST_CASE("betti table basic properties on seeded ideals") {
  IdealGen gen(404);
  for (int trial = 0; trial < 12; ++trial) {
    auto I = gen.ideal(Rxyz, 5, 3);
    if (I.is_unit()) continue;
    for (long long p : {0LL, 2LL}) {
      auto mt = betti_table(I, p);
      auto t = coarsen(mt);
      CHECK(t.total(0) == I.num_gens());
      CHECK(t.pd() <= 2);  // Hilbert syzygy bound: pd of an ideal < #vars
      // beta_{0,a} = 1 exactly on minimal generators
      for (const auto& g : I.gens())
        CHECK(mt.entries.count({0, g.exps()}) == 1);
      // multidegrees live in the lcm lattice
      auto lattice = lcm_lattice(I);
      for (const auto& [key, mult] : mt.entries) {
        Monomial a(key.second);
        CHECK(std::find(lattice.begin(), lattice.end(), a) != lattice.end());
      }
    }
  }
}

TEST_CASE("invariants examples") {
  auto rec = invariants(ideal("x^2, x*y, y^2"), 0);
  CHECK(rec.pd_quotient == 2);
  CHECK(rec.depth_quotient == 0);
  CHECK(rec.reg_quotient == 1);

  auto rec2 = invariants(ideal("x"), 0);
  CHECK(rec2.depth_quotient == 1);

  PolyRing Rx({"x"});
  auto rec3 = invariants(parse_ideal("x^2", Rx), 0);
  CHECK(rec3.reg_ideal == 2);
  CHECK(rec3.pd_ideal == 0);
}

TEST_CASE("koszul_betti examples") {
  // R/(x) over k[x,y]: beta_0 in degree 0, beta_1 in degree 1
  auto t = koszul_betti(unit_ideal(Rxy), ideal("x"), 0, 1);
  CHECK(t.entries.at({0, 0}) == 1);
  CHECK(t.entries.at({1, 1}) == 1);
  CHECK(t.total(2) == 0);

  // M = (x,y)/(x^2,xy,y^2) = k(-1)^2; bound must reach deg lcm = 4
  auto t2 = koszul_betti(ideal("x, y"), ideal("x^2, x*y, y^2"), 0, 4);
  CHECK(t2.entries.at({0, 1}) == 2);

  CHECK_THROWS_AS(koszul_betti(ideal("x"), ideal("x^2"), 0, 1), DomainError);
  CHECK_THROWS_AS(koszul_betti(ideal("x^2"), ideal("x"), 0, 5), DomainError);
}

TEST_CASE("koszul_betti agrees with the Hochster route on ideals") {
  IdealGen gen(515);
  for (int trial = 0; trial < 10; ++trial) {
    auto I = gen.ideal(Rxyz, 4, 3);
    if (I.is_unit()) continue;
    Monomial lcm_all = Monomial::one(3);
    for (const auto& g : I.gens()) lcm_all = lcm_all.lcm(g);
    for (long long p : {0LL, 2LL}) {
      auto a = coarsen(betti_table(I, p));
      auto b = koszul_betti(I, zero_ideal(Rxyz), p, lcm_all.degree());
      CHECK(a.entries == b.entries);
    }
  }
}

TEST_CASE("module invariants of subquotients") {
  // depth/reg of R/(x) in 2 vars: depth 1, reg 0
  auto mi = module_invariants(unit_ideal(Rxy), ideal("x"), 0);
  CHECK(mi.depth == 1);
  CHECK(mi.reg == 0);
  CHECK(mi.pd == 1);
  // zero module
  auto z = module_invariants(ideal("x"), ideal("x"), 0);
  CHECK(z.pd == -1);
}

TEST_CASE("splitting check on the basic mixed sum") {
  PolyRing R({"x"}), S({"y"});
  auto emb = mixed_embed(R, S, parse_ideal("x", R), parse_ideal("y", S));
  auto rep = splitting_check(emb.P, emb.I_T, emb.J_T, 0);
  CHECK(rep.holds);
  REQUIRE(rep.rows.size() >= 2);
  CHECK(rep.rows[1].beta_p == 1);
  CHECK(rep.rows[1].beta_i == 0);
  CHECK(rep.rows[1].beta_inter_prev == 1);

  CHECK_THROWS_AS(splitting_check(emb.P, emb.I_T, zero_ideal(emb.T), 0), DomainError);
  CHECK_THROWS_AS(splitting_check(emb.I_T, emb.I_T, emb.J_T, 0), DomainError);
}

TEST_CASE("tensor additivity over disjoint variables") {
  IdealGen gen(606);
  PolyRing R({"x", "y"}), S({"u", "v"});
  for (int trial = 0; trial < 6; ++trial) {
    auto I = gen.ideal(R, 3, 2);
    auto J = gen.ideal(S, 3, 2);
    auto emb = mixed_embed(R, S, I, J);
    auto prod = product(emb.I_T, emb.J_T);
    auto ti = coarsen(betti_table(I, 0));
    auto tj = coarsen(betti_table(J, 0));
    auto tp = coarsen(betti_table(prod, 0));
    CHECK(tp.pd() == ti.pd() + tj.pd());
    CHECK(tp.reg() == ti.reg() + tj.reg());
    // full table is the convolution
    BettiTable conv;
    for (const auto& [ka, ma] : ti.entries)
      for (const auto& [kb, mb] : tj.entries)
        conv.entries[{ka.first + kb.first, ka.second + kb.second}] += ma * mb;
    CHECK(conv.entries == tp.entries);
  }
}
