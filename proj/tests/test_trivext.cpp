#include "doctest.h"

#include <random>

#include "cycmod/suites.hpp"
#include "cycmod/towers.hpp"
#include "cycmod/trivext.hpp"

using namespace cycmod;

TEST_CASE("element multiplication") {
  Algebra A(3, 2);
  AElem one{1, {0, 0}};
  AElem x{2, {1, 0}};
  CHECK(elem_mul(A, one, x) == x);

  AElem v{0, {1, 2}}, w{0, {2, 2}};
  AElem z = elem_mul(A, v, w);
  CHECK(z.a == 0);
  CHECK(is_zero_vec(z.v)); // the socle squares to zero

  AElem y{1, {0, 1}};
  AElem prod = elem_mul(A, x, y);
  CHECK(prod == AElem{2, {1, 2}});

  CHECK(is_unit(x));
  CHECK(!is_unit(v));
}

TEST_CASE("free modules") {
  Algebra A(2, 2);
  AModule f1 = free_module(A, 1);
  CHECK(f1.dim() == 3);
  for (const auto& t : f1.action()) {
    auto [r, rank] = rref(t);
    CHECK(rank == 1);
  }
  CHECK(free_module(A, 0).dim() == 0);

  AModule f2 = free_module(A, 2);
  CHECK(f2.dim() == 6);
  CHECK(ideal_image_full(Ideal::radical(A), f2).rank() == 4);
  CHECK(f2.generator_marks() == std::vector<std::size_t>{0, 3});
}

TEST_CASE("presentation modules") {
  Algebra A(2, 2);
  AModule byhand = presentation(A, 1, 2, {FpMatrix::identity(2, 2)});
  AModule free1 = free_module(A, 1);
  CHECK(byhand.dim() == free1.dim());
  for (std::size_t i = 0; i < A.n; ++i) CHECK(byhand.action(i) == free1.action(i));

  AModule semis = presentation(A, 0, 3, {});
  CHECK(semis.dim() == 3);
  for (const auto& t : semis.action()) CHECK(t.is_zero());

  CHECK_THROWS_AS(presentation(A, 1, 2, {FpMatrix(2, 3, 2)}), std::invalid_argument);
}

TEST_CASE("action") {
  Algebra A(3, 2);
  AModule f1 = free_module(A, 1);
  Vec gen = {1, 0, 0};
  Vec zero_v = {0, 0}, e1 = {1, 0}, v12 = {1, 2};
  CHECK(is_zero_vec(f1.act(zero_v, gen)));
  CHECK(f1.act(e1, gen) == Vec{0, 1, 0});
  Vec socle = {0, 1, 2};
  CHECK(is_zero_vec(f1.act(v12, socle)));
}

TEST_CASE("ideal images") {
  Algebra A(3, 2);
  AModule f1 = free_module(A, 1);
  const Ideal J = Ideal::radical(A);
  CHECK(ideal_image_full(Ideal::zero(), f1).rank() == 0);
  Subspace jm = ideal_image_full(J, f1);
  CHECK(jm.rank() == 2);
  CHECK(jm == Subspace::span(3, 3, {{0, 1, 0}, {0, 0, 1}}));

  Ideal line = Ideal::soc_sub(Subspace::span(3, 2, {{1, 0}}));
  Subspace img = ideal_image(line, f1, Subspace::span(3, 3, {{1, 0, 0}}));
  CHECK(img == Subspace::span(3, 3, {{0, 1, 0}}));
}

TEST_CASE("annihilators") {
  Algebra A(3, 2);
  AModule f1 = free_module(A, 1);
  const Ideal J = Ideal::radical(A);
  Subspace soc = annihilator(f1, J);
  CHECK(soc.rank() == 2);
  CHECK(soc == ideal_image_full(J, f1));
  CHECK(annihilator(f1, Ideal::zero()) == Subspace::full(3, 3));

  TowerLevel mi = tower_presentation(3, 2, {1});
  CHECK(annihilator(mi.module, Ideal::radical(mi.module.algebra())).rank() == 3); // n+i
}

TEST_CASE("decomposition domain membership") {
  Algebra A(2, 2);
  const Ideal J = Ideal::radical(A);
  CHECK(in_decomposition_domain(free_module(A, 1), J));
  CHECK(in_decomposition_domain(free_module(A, 3), J));

  TowerLevel mi = tower_presentation(3, 2, {1});
  CHECK(in_decomposition_domain(mi.module, Ideal::radical(mi.module.algebra())));

  // a field (n = 0): the zero ideal works only for the zero module
  Algebra k(3, 0);
  AModule line(k, 1, {});
  CHECK(!in_decomposition_domain(line, Ideal::zero()));
  AModule zero(k, 0, {});
  CHECK(in_decomposition_domain(zero, Ideal::zero()));

  // a dead generator breaks IM = ann
  AModule dead = presentation(A, 1, 2, {FpMatrix(2, 2, 2)});
  CHECK(!in_decomposition_domain(dead, J));
}

TEST_CASE("goldie dimension") {
  Algebra A(3, 2);
  CHECK(goldie_dim(free_module(A, 1)) == 2);
  CHECK(goldie_dim(free_module(A, 0)) == 0);
  TowerLevel mi = tower_presentation(3, 2, {1});
  CHECK(goldie_dim(mi.module) == 3);
}

TEST_CASE("cyclic submodules") {
  Algebra A(3, 2);
  AModule f1 = free_module(A, 1);
  CHECK(cyclic(f1, Vec{0, 1, 2}).space.rank() == 1);
  CHECK(cyclic(f1, Vec{1, 0, 0}).space.rank() == 3);
  CHECK_THROWS_AS(cyclic(f1, Vec{0, 0, 0}), std::invalid_argument);

  TowerLevel mi = tower_presentation(3, 2, {1});
  Vec both = add_vec(mi.sigma[0], mi.sigma[1], 3);
  CHECK(cyclic(mi.module, both).space.rank() == 3); // 1 + n
}

TEST_CASE("direct sums, quotients, purity") {
  Algebra A(3, 2);
  AModule f1 = free_module(A, 1);
  const Ideal J = Ideal::radical(A);

  AModule q = quotient(f1, Submodule{Subspace(3, 3)});
  CHECK(q.dim() == f1.dim());
  for (std::size_t i = 0; i < A.n; ++i) CHECK(q.action(i) == f1.action(i));

  // quotient of A^2 by the relation subspace matches the presentation path
  TowerLevel base = tower_presentation(3, 2, {});
  for (u32 i = 1; i <= 1; ++i) {
    AModule ambient = direct_sum(base.module, free_module(A, 1));
    AModule q2 = quotient(ambient, Submodule{socle_relation_subspace(base, i)});
    CHECK(q2.dim() == 2 * (A.n + 1) - (A.n - i));
    TowerLevel mi = tower_presentation(3, 2, {i});
    CHECK(q2.dim() == mi.module.dim());
    CHECK(goldie_dim(q2) == goldie_dim(mi.module));
  }

  // direct summands are pure
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    u32 n = 1 + u32(rand_below(rng, 2));
    AModule m1 = random_module_in_domain(rng, t % 2 ? 3 : 2, n, 4);
    AModule m2 = random_module_in_domain(rng, m1.p(), n, 3);
    AModule M = direct_sum(m1, m2);
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < m1.dim(); ++k) {
      Vec v(M.dim(), 0);
      v[k] = 1;
      rows.push_back(std::move(v));
    }
    Submodule left{Subspace::span(M.p(), M.dim(), rows)};
    CHECK(is_pure(M, left, Ideal::radical(M.algebra())));
  }

  CHECK_THROWS_AS(quotient(f1, Submodule{Subspace::span(3, 3, {{1, 0, 0}})}),
                  std::invalid_argument); // not action closed
}

TEST_CASE("pairwise annihilation is enforced") {
  Algebra A(2, 2);
  std::vector<FpMatrix> bad(2, FpMatrix(2, 2, 2));
  bad[0].set(0, 1, 1);
  bad[1].set(1, 0, 1); // T0 T1 != 0
  CHECK_THROWS_AS(AModule(A, 2, bad), std::invalid_argument);
}

TEST_CASE("ideal image lands inside the annihilator for socle ideals") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    u32 p = t % 2 ? 3 : 2;
    AModule M = random_presentation_module(rng, p, 1 + u32(rand_below(rng, 3)), 6);
    const Ideal J = Ideal::radical(M.algebra());
    CHECK(annihilator(M, J).contains(ideal_image_full(J, M)));
  }
}

TEST_CASE("domain closure under direct sums and pure submodules") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 15; ++t) {
    u32 p = t % 2 ? 3 : 2;
    u32 n = 1 + u32(rand_below(rng, 2));
    AModule m1 = random_module_in_domain(rng, p, n, 4);
    AModule m2 = random_module_in_domain(rng, p, n, 4);
    AModule M = direct_sum(m1, m2);
    const Ideal J = Ideal::radical(M.algebra());
    CHECK(in_decomposition_domain(M, J));

    std::vector<Vec> rows;
    for (std::size_t k = 0; k < m1.dim(); ++k) {
      Vec v(M.dim(), 0);
      v[k] = 1;
      rows.push_back(std::move(v));
    }
    Submodule left{Subspace::span(M.p(), M.dim(), rows)};
    RestrictResult r = restrict_to(M, left);
    CHECK(in_decomposition_domain(r.module, Ideal::radical(r.module.algebra())));
  }
}

TEST_CASE("quotient closure under the pointwise-intersection condition") {
  // tower relation subspaces satisfy it; quotients stay in the domain
  TowerLevel base = tower_presentation(3, 3, {});
  for (u32 i = 1; i <= 2; ++i) {
    CHECK(claim2_orthogonality(base, i));
    AModule ambient = direct_sum(base.module, free_module(Algebra(3, 3), 1));
    AModule q = quotient(ambient, Submodule{socle_relation_subspace(base, i)});
    CHECK(in_decomposition_domain(q, Ideal::radical(q.algebra())));
  }
}

TEST_CASE("every socle subspace is an ideal") {
  // multiplication by any algebra element keeps {0} (+) W inside itself
  std::mt19937_64 rng(31);
  Algebra A(3, 3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Vec> rows;
    std::size_t k = 1 + rand_below(rng, A.n);
    for (std::size_t j = 0; j < k; ++j) {
      Vec v(A.n);
      for (auto& x : v) x = u32(rand_below(rng, A.p));
      rows.push_back(std::move(v));
    }
    Subspace w = Subspace::span(A.p, A.n, rows);
    for (std::size_t r = 0; r < w.rank(); ++r) {
      AElem elem{0, w.basis().row(r)};
      AElem other{u32(rand_below(rng, A.p)), {u32(rand_below(rng, A.p)),
                                              u32(rand_below(rng, A.p)),
                                              u32(rand_below(rng, A.p))}};
      AElem prod = elem_mul(A, other, elem);
      CHECK(prod.a == 0);
      CHECK(w.contains(prod.v));
    }
  }
}
