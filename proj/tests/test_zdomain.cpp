#include "doctest.h"

#include <random>

#include "cycmod/suites.hpp"
#include "cycmod/zdomain.hpp"

using namespace cycmod;

TEST_CASE("canonical generators") {
  CHECK(canonical_generator({-1, 2}) == ZVec{1, -2});
  CHECK(canonical_generator({2, 0}) == ZVec{2, 0}); // Z(2,0) != Z(1,0)
  CHECK(primitive_form({2, 4}) == ZVec{1, 2});
  CHECK_THROWS_AS(canonical_generator({0, 0}), std::invalid_argument);
}

TEST_CASE("the three-vector example") {
  ZTriple t{2, {{1, 0}, {2, 0}, {0, 1}}, {}};
  ZGraph g = gamma_z(t, PrincIdeal{6});
  REQUIRE(g.vertices.size() == 3);
  std::size_t a = g.find_vertex({1, 0}), b = g.find_vertex({2, 0}), c = g.find_vertex({0, 1});
  CHECK(g.graph.adj[a][b]); // 6*2*(1,0) = 6*1*(2,0)
  CHECK(!g.graph.adj[a][c]);
  CHECK(!g.graph.adj[b][c]);

  ZGraph gz = gamma_z(t, PrincIdeal{0});
  CHECK(!gz.graph.adj[a][b]); // zero ideal: only loops
  CHECK(gz.graph.adj[a][a]);

  ZTriple single{2, {{3, -1}}, {}};
  ZGraph gs = gamma_z(single, PrincIdeal{4});
  CHECK(gs.vertices.size() == 1);
  CHECK(gs.graph.adj[0][0]);
}

TEST_CASE("adjacency is independent of the nonzero modulus") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    ZTriple zt{2, {{i64(rand_below(rng, 7)) - 3, i64(1 + rand_below(rng, 4))},
                   {i64(1 + rand_below(rng, 4)), i64(rand_below(rng, 7)) - 3}},
               {}};
    ZGraph g1 = gamma_z(zt, PrincIdeal{1 + rand_below(rng, 50)});
    ZGraph g2 = gamma_z(zt, PrincIdeal{1 + rand_below(rng, 50)});
    CHECK(g1.graph.adj == g2.graph.adj);
  }
}

TEST_CASE("proportionality criterion against the witness oracle") {
  SuiteResult r = check_z_adjacency_oracle(99, 100);
  CHECK(r.pass);
}

TEST_CASE("product and intersection approximations") {
  ZTriple t{2, {{1, 0}, {2, 0}, {0, 1}, {3, 3}}, {}};
  CHECK(lemma72_check(t, {{2}, {3}}));
  CHECK(lemma72_check(t, {{5}}));
  CHECK_THROWS_AS(lemma72_check(t, {{2}, {0}}), std::invalid_argument);

  SuiteResult sweep = check_lemma72(17, 100);
  CHECK(sweep.pass);
}

TEST_CASE("directed families") {
  ZTriple t{2, {{1, 0}, {2, 0}, {0, 1}}, {}};
  CHECK(lemma71_check_z(t, {{4}, {2}}));
  CHECK(lemma71_check_z(t, {{6}}));
  CHECK_THROWS_AS(lemma71_check_z(t, {{2}, {3}}), NotDirected);

  // socle-subspace chains over the finite algebra
  TowerLevel mi = tower_presentation(3, 2, {1});
  CTriple ct;
  ct.module = mi.module;
  ct.sigma = sigma_tilde(mi);
  std::vector<Ideal> family = {
      Ideal::soc_sub(Subspace::span(3, 2, {{1, 0}})),
      Ideal::radical(mi.module.algebra())};
  CHECK(lemma71_check_fp(ct, family));
  std::vector<Ideal> singleton = {Ideal::radical(mi.module.algebra())};
  CHECK(lemma71_check_fp(ct, singleton));
  std::vector<Ideal> undirected = {
      Ideal::soc_sub(Subspace::span(3, 2, {{1, 0}})),
      Ideal::soc_sub(Subspace::span(3, 2, {{0, 1}}))};
  CHECK_THROWS_AS(lemma71_check_fp(ct, undirected), NotDirected);
}
