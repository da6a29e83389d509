#include "doctest.h"

#include <array>
#include <random>

#include "cycmod/suites.hpp"
#include "cycmod/towers.hpp"

using namespace cycmod;

namespace {

bool is_discrete(const CycGraph& g) {
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (std::size_t j = 0; j < g.vertex_count(); ++j)
      if (i != j && g.graph.adj[i][j]) return false;
  return true;
}

bool is_complete(const CycGraph& g) {
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (std::size_t j = 0; j < g.vertex_count(); ++j)
      if (!g.graph.adj[i][j]) return false;
  return true;
}

// the linear-system route to adjacency: some socle combination T_w a = T_w' b
// is nonzero (cross-check oracle for the intersection-rank test)
bool adjacency_by_system(const AModule& M, const Ideal& I, const Vec& a, const Vec& b) {
  if (I.kind() != Ideal::Kind::SocSub) return false;
  const Subspace& w = I.socle_part();
  const std::size_t r = w.rank(), d = M.dim();
  if (r == 0) return false;
  FpMatrix sys(M.p(), d, 2 * r);
  for (std::size_t k = 0; k < r; ++k) {
    Vec ta = M.act(w.basis().row(k), a);
    Vec tb = M.act(w.basis().row(k), b);
    for (std::size_t c = 0; c < d; ++c) {
      sys.set(c, k, ta[c]);
      sys.set(c, r + k, (M.p() - tb[c]) % M.p());
    }
  }
  Subspace null = kernel(sys);
  for (std::size_t k = 0; k < null.rank(); ++k) {
    Vec coeff = null.basis().row(k);
    Vec img(d, 0);
    for (std::size_t j = 0; j < r; ++j)
      if (coeff[j] != 0)
        img = add_vec(img, scale_vec(M.act(w.basis().row(j), a), coeff[j], M.p()), M.p());
    if (!is_zero_vec(img)) return true;
  }
  return false;
}

} // namespace

TEST_CASE("field examples are discrete") {
  Algebra F2(2, 0);
  AModule plane(F2, 2, {});
  CTriple t{plane, {{1, 0}, {0, 1}, {1, 1}}, {}};
  CycGraph g = gamma(t, Ideal::whole());
  CHECK(g.vertex_count() == 3);
  CHECK(is_discrete(g));

  CycGraph gz = gamma(t, Ideal::zero());
  CHECK(gz.vertex_count() == 3);
  CHECK(is_discrete(gz));
}

TEST_CASE("the two-generator level has a complete subset-sum graph") {
  TowerLevel mi = tower_presentation(3, 2, {1});
  const Ideal J = Ideal::radical(mi.module.algebra());
  CTriple t{mi.module, sigma_tilde(mi), {}};
  CycGraph g = gamma(t, J);
  CHECK(g.vertex_count() == 3);
  CHECK(is_complete(g));
}

TEST_CASE("full graphs of the regular module and its square") {
  Algebra A(2, 2);
  const Ideal J = Ideal::radical(A);
  CycGraph g1 = gamma_full(free_module(A, 1), J);
  CHECK(g1.vertex_count() == 1);

  CycGraph g2 = gamma_full(free_module(A, 2), J);
  CHECK(components(g2).size() == 3);

  CycGraph g0 = gamma_full(free_module(A, 0), J);
  CHECK(g0.vertex_count() == 0);
  CHECK(components(g0).empty());
}

TEST_CASE("component partitions") {
  LoopGraph k3 = LoopGraph::complete(3);
  CHECK(components(k3).size() == 1);
  LoopGraph d3 = LoopGraph::discrete(3);
  CHECK(components(d3).size() == 3);
}

TEST_CASE("cdim values") {
  Algebra A(2, 2);
  const Ideal J = Ideal::radical(A);
  CHECK(cdim(free_module(A, 1), J) == 1);
  CHECK(cdim(free_module(A, 2), J) == 3);

  TowerLevel mi = tower_presentation(3, 2, {1});
  CHECK(cdim(mi.module, Ideal::radical(mi.module.algebra())) == 1);

  Algebra k(3, 0);
  AModule line(k, 1, {});
  CHECK_THROWS_AS(cdim(line, Ideal::zero()), NotDecompositionIdeal);

  Algebra big(2, 0);
  AModule wide(big, 25, {});
  CHECK_THROWS_AS(gamma_full(wide, Ideal::whole()), BudgetExceeded);
}

TEST_CASE("fundamental subsets") {
  Algebra A(3, 2);
  AModule f1 = free_module(A, 1);
  const Ideal J = Ideal::radical(A);
  std::vector<Vec> gen = {{1, 0, 0}};
  CHECK(is_fundamental(f1, J, gen));
  CHECK(fcdim(f1, J, gen) == 1);

  std::vector<Vec> socle_only = {{0, 1, 0}};
  CHECK(!is_fundamental(f1, J, socle_only));
  CHECK_THROWS_AS(fcdim(f1, J, socle_only), NotFundamental);
}

TEST_CASE("vertex maps") {
  TowerLevel mi = tower_presentation(3, 2, {1});
  const Ideal J = Ideal::radical(mi.module.algebra());
  CTriple t{mi.module, sigma_tilde(mi), {}};
  FpMatrix id = FpMatrix::identity(3, mi.module.dim());
  std::vector<std::size_t> m = gamma_map(id, t, t, J);
  for (std::size_t v = 0; v < m.size(); ++v) CHECK(m[v] == v);

  // summand inclusion is an embedding that preserves adjacency
  Algebra A(3, 2);
  AModule m1 = free_module(A, 1);
  AModule M = direct_sum(m1, free_module(A, 1));
  FpMatrix inc(3, M.dim(), m1.dim());
  for (std::size_t k = 0; k < m1.dim(); ++k) inc.set(k, k, 1);
  CTriple src{m1, {{1, 0, 0}}, {}};
  CTriple dst{M, {{1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}}, {}};
  std::vector<std::size_t> vm = gamma_map(inc, src, dst, J);
  CHECK(vm.size() == 1);

  // functoriality on a composable pair
  AModule MM = direct_sum(M, free_module(A, 1));
  FpMatrix inc2(3, MM.dim(), M.dim());
  for (std::size_t k = 0; k < M.dim(); ++k) inc2.set(k, k, 1);
  CTriple dst2{MM, {{1, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 0, 0}}, {}};
  std::vector<std::size_t> vm2 = gamma_map(inc2, dst, dst2, J);
  std::vector<std::size_t> composed = gamma_map(inc2 * inc, src, dst2, J);
  for (std::size_t v = 0; v < composed.size(); ++v) CHECK(composed[v] == vm2[vm[v]]);

  // a non-intertwiner is rejected
  FpMatrix bad(3, M.dim(), m1.dim());
  bad.set(1, 0, 1);
  CHECK_THROWS_AS(gamma_map(bad, src, dst, J), NotCMorphism);

  // an intertwiner whose image escapes the target sigma is rejected too
  CTriple dst_small{M, {{0, 0, 0, 1, 0, 0}}, {}};
  CHECK_THROWS_AS(gamma_map(inc, src, dst_small, J), NotCMorphism);
}

TEST_CASE("socle collapse") {
  // vertices with distinct images stay put
  Algebra F2(2, 0);
  AModule plane(F2, 2, {});
  CTriple t{plane, {{1, 0}, {0, 1}, {1, 1}}, {}};
  CycGraph g = gamma(t, Ideal::whole());
  CycGraph c = socle_collapse(g);
  CHECK(c.vertex_count() == g.vertex_count());

  // p = 3 two-generator level: the classes are the projective generator
  // pairs, one more than the three subset sums
  TowerLevel mi = tower_presentation(3, 2, {1});
  const Ideal J3 = Ideal::radical(mi.module.algebra());
  CycGraph full3 = gamma_full(mi.module, J3);
  CycGraph coll3 = socle_collapse(full3);
  CHECK(coll3.vertex_count() == 4);
  CHECK(components(coll3).size() == components(full3).size());
  // the three subset-sum socles all appear among the classes
  CTriple tilde{mi.module, sigma_tilde(mi), {}};
  CycGraph gt = gamma(tilde, J3);
  for (const auto& v : gt.vertices) {
    bool found = false;
    for (const auto& c3 : coll3.vertices)
      if (c3.image == v.image) found = true;
    CHECK(found);
  }

  // p = 2: the collapse is in bijection with the subset sums
  TowerLevel m2 = tower_presentation(2, 3, {2});
  const Ideal J2 = Ideal::radical(m2.module.algebra());
  CycGraph full2 = gamma_full(m2.module, J2);
  CycGraph coll2 = socle_collapse(full2);
  CHECK(coll2.vertex_count() == sigma_tilde(m2).size());
  CHECK(components(coll2).size() == components(full2).size());
}

TEST_CASE("collapse preserves component counts on the small presets") {
  const std::vector<std::array<u32, 3>> presets = {{3, 2, 1}, {2, 3, 2}};
  for (auto [p, n, i] : presets) {
    TowerLevel lvl = tower_presentation(p, n, {i});
    const Ideal J = Ideal::radical(lvl.module.algebra());
    CycGraph full = gamma_full(lvl.module, J);
    CHECK(components(socle_collapse(full)).size() == components(full).size());
  }
}

TEST_CASE("loop graph constructions") {
  std::vector<LoopGraph> parts = {LoopGraph::complete(2), LoopGraph::complete(3)};
  LoopGraph cop = graph_coproduct(parts);
  CHECK(cop.n == 5);
  CHECK(components(cop).size() == 2);

  std::vector<LoopGraph> square = {LoopGraph::discrete(2), LoopGraph::discrete(2)};
  LoopGraph prod = graph_product(square);
  CHECK(prod.n == 4);
  CHECK(components(prod).size() == 4);

  CHECK(graph_isomorphic(LoopGraph::complete(3), LoopGraph::complete(3)));
  LoopGraph path = LoopGraph::discrete(3);
  path.adj[0][1] = path.adj[1][0] = true;
  path.adj[1][2] = path.adj[2][1] = true;
  CHECK(!graph_isomorphic(LoopGraph::complete(3), path));
}

TEST_CASE("graph equalizers and coequalizers") {
  // H: path 0-1 plus isolated 2; f, g from a single vertex pick 0 and 2
  LoopGraph G = LoopGraph::discrete(1);
  LoopGraph H = LoopGraph::discrete(3);
  H.adj[0][1] = H.adj[1][0] = true;
  CoequalizerResult co = graph_coequalizer(G, H, {0}, {2});
  CHECK(co.graph.n == 2);
  CHECK(co.cls[0] == co.cls[2]);
  CHECK(co.graph.adj[co.cls[0]][co.cls[1]]); // the 0-1 edge survives

  // equalizer keeps the agreement locus with induced adjacency
  LoopGraph G2 = LoopGraph::complete(3);
  EqualizerResult eq = graph_equalizer(G2, H, {0, 1, 2}, {0, 1, 0});
  CHECK(eq.kept == std::vector<std::size_t>{0, 1});
  CHECK(eq.graph.n == 2);
  CHECK(eq.graph.adj[0][1]);
}

TEST_CASE("coproduct with the empty triple changes nothing") {
  TowerLevel mi = tower_presentation(3, 2, {1});
  const Ideal J = Ideal::radical(mi.module.algebra());
  CTriple t{mi.module, sigma_tilde(mi), {}};
  CTriple empty{AModule(Algebra(3, 2), 0, {FpMatrix(3, 0, 0), FpMatrix(3, 0, 0)}), {}, {}};
  std::vector<CTriple> ts = {t, empty};
  CTriple cop = triple_coproduct(ts);
  CHECK(graph_isomorphic(gamma(cop, J).graph, gamma(t, J).graph));
}

TEST_CASE("adjacency does not depend on the representative") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    u32 p = trial % 2 ? 3 : 2;
    AModule M = random_module_in_domain(rng, p, 1 + u32(rand_below(rng, 2)), 6);
    const Ideal J = Ideal::radical(M.algebra());
    Subspace im = ideal_image_full(J, M);
    Vec x = random_nonzero_vec(rng, p, M.dim());
    if (im.contains(x)) continue;
    // a unit multiple generates the same cyclic submodule
    AElem unit{1 + u32(rand_below(rng, p - 1)), Vec(M.n(), 0)};
    for (auto& c : unit.v) c = u32(rand_below(rng, p));
    Vec y = M.act_elem(unit, x);
    CHECK(cyclic(M, x).space == cyclic(M, y).space);
    CHECK(ideal_image(J, M, Subspace::span(p, M.dim(), {x})) ==
          ideal_image(J, M, Subspace::span(p, M.dim(), {y})));
  }
}

TEST_CASE("intersection adjacency agrees with the linear-system oracle") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    u32 p = trial % 2 ? 3 : 2;
    AModule M = random_module_in_domain(rng, p, 1 + u32(rand_below(rng, 2)), 6);
    const Ideal J = Ideal::radical(M.algebra());
    Subspace im = ideal_image_full(J, M);
    Vec a = random_nonzero_vec(rng, p, M.dim());
    Vec b = random_nonzero_vec(rng, p, M.dim());
    if (im.contains(a) || im.contains(b)) continue;
    Subspace ia = ideal_image(J, M, Subspace::span(p, M.dim(), {a}));
    Subspace ib = ideal_image(J, M, Subspace::span(p, M.dim(), {b}));
    bool by_rank = intersect(ia, ib).rank() >= 1;
    CHECK(by_rank == adjacency_by_system(M, J, a, b));
  }
}

TEST_CASE("graph union and intersection over a shared universe") {
  TowerLevel mi = tower_presentation(3, 2, {1});
  const Ideal J = Ideal::radical(mi.module.algebra());
  std::vector<Vec> sums = sigma_tilde(mi);
  CTriple small{mi.module, {sums[0], sums[1]}, {}};
  CTriple big{mi.module, sums, {}};
  std::vector<CycGraph> gs = {gamma(small, J), gamma(big, J)};
  CycGraph u = graph_union(gs);
  CycGraph i = graph_intersect(gs);
  CHECK(u.vertex_count() == 3);
  CHECK(i.vertex_count() == 2);
}
