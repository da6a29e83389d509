#include "doctest.h"

#include <random>
#include <set>

#include "cycmod/linalg.hpp"

using namespace cycmod;

namespace {

FpMatrix random_matrix(std::mt19937_64& rng, u32 p, std::size_t rows, std::size_t cols) {
  FpMatrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, u32(rng() % p));
  return m;
}

// brute-force row space: all coefficient combinations of the rows
std::set<Vec> row_space(const FpMatrix& m) {
  std::set<Vec> out;
  const u32 p = m.p();
  u64 total = checked_pow(p, m.rows());
  for (u64 idx = 0; idx < total; ++idx) {
    Vec v(m.cols(), 0);
    u64 rest = idx;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      u32 c = u32(rest % p);
      rest /= p;
      if (c != 0)
        for (std::size_t j = 0; j < m.cols(); ++j) v[j] = (v[j] + u64(c) * m(r, j)) % p;
    }
    out.insert(std::move(v));
  }
  return out;
}

std::set<Vec> vector_set(const std::vector<Vec>& vs) { return {vs.begin(), vs.end()}; }

} // namespace

TEST_CASE("rref canonical forms") {
  FpMatrix id3 = FpMatrix::identity(2, 3);
  auto [r1, rank1] = rref(id3);
  CHECK(r1 == id3);
  CHECK(rank1 == 3);

  FpMatrix m(3, 2, 2, {2, 1, 1, 2});
  auto [r2, rank2] = rref(m);
  CHECK(rank2 == 1);
  CHECK(r2 == FpMatrix(3, 2, 2, {1, 2, 0, 0}));
  // the row space oracle confirms {(0,0),(1,2),(2,1)}
  CHECK(row_space(m) == row_space(r2));
  CHECK(row_space(m) == std::set<Vec>{{0, 0}, {1, 2}, {2, 1}});

  FpMatrix z(5, 2, 4);
  auto [r3, rank3] = rref(z);
  CHECK(r3 == z);
  CHECK(rank3 == 0);
}

TEST_CASE("rref is idempotent and row-space preserving on random input") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    u32 p = t % 2 ? 3 : 2;
    FpMatrix m = random_matrix(rng, p, 1 + rng() % 4, 1 + rng() % 4);
    auto [r, rank] = rref(m);
    auto [rr, rank2] = rref(r);
    CHECK(r == rr);
    CHECK(rank == rank2);
    CHECK(row_space(m) == row_space(r));
  }
}

TEST_CASE("kernel") {
  CHECK(kernel(FpMatrix::identity(3, 2)).rank() == 0);

  FpMatrix m(2, 1, 2, {1, 1});
  Subspace k = kernel(m);
  CHECK(k.rank() == 1);
  // all four vectors, checked directly
  for (u32 a = 0; a < 2; ++a)
    for (u32 b = 0; b < 2; ++b) {
      Vec v = {a, b};
      CHECK(k.contains(v) == is_zero_vec(m.apply(v)));
    }

  CHECK(kernel(FpMatrix(2, 2, 3)).rank() == 3);
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    u32 p = t % 2 ? 3 : 5;
    FpMatrix m = random_matrix(rng, p, 1 + rng() % 4, 1 + rng() % 5);
    auto [r, rank] = rref(m);
    CHECK(rank + kernel(m).rank() == m.cols());
  }
}

TEST_CASE("span") {
  Subspace s = Subspace::span(3, 2, {{1, 1}, {2, 2}});
  CHECK(s.rank() == 1);
  CHECK(s.basis().row(0) == Vec{1, 1});

  CHECK(Subspace::span(3, 4, {}).rank() == 0);
  CHECK(Subspace::span(2, 2, {{1, 0}, {0, 1}}) == Subspace::full(2, 2));
  CHECK_THROWS_AS(Subspace::span(2, 2, {{1, 0, 1}}), std::invalid_argument);
}

TEST_CASE("sum and intersection") {
  Subspace u = Subspace::span(2, 2, {{1, 0}});
  Subspace w = Subspace::span(2, 2, {{0, 1}});
  CHECK(sum(u, w) == Subspace::full(2, 2));
  CHECK(intersect(u, w).rank() == 0);

  CHECK(sum(u, u) == u);
  CHECK(intersect(u, u) == u);

  Subspace a = Subspace::span(2, 3, {{1, 1, 0}, {0, 0, 1}});
  Subspace b = Subspace::span(2, 3, {{1, 1, 1}});
  Subspace meet = intersect(a, b);
  CHECK(meet == b);
  // enumeration oracle: set intersection of the enumerated sides
  std::set<Vec> ea = vector_set(enumerate(a, 1 << 20));
  std::set<Vec> eb = vector_set(enumerate(b, 1 << 20));
  std::set<Vec> both;
  for (const auto& v : ea)
    if (eb.count(v)) both.insert(v);
  CHECK(vector_set(enumerate(meet, 1 << 20)) == both);

  CHECK_THROWS_AS(sum(u, Subspace::span(2, 3, {{1, 0, 0}})), std::invalid_argument);
}

TEST_CASE("dimension formula and set intersection agree on random subspaces") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    u32 p = t % 2 ? 3 : 2;
    std::size_t amb = 2 + rng() % 5; // p^ambient <= 3^6
    Subspace u = Subspace::from_basis(random_matrix(rng, p, 1 + rng() % 3, amb));
    Subspace w = Subspace::from_basis(random_matrix(rng, p, 1 + rng() % 3, amb));
    Subspace s = sum(u, w), m = intersect(u, w);
    CHECK(u.rank() + w.rank() == s.rank() + m.rank());
    std::set<Vec> eu = vector_set(enumerate(u, 1 << 20));
    std::set<Vec> ew = vector_set(enumerate(w, 1 << 20));
    std::set<Vec> both;
    for (const auto& v : eu)
      if (ew.count(v)) both.insert(v);
    CHECK(vector_set(enumerate(m, 1 << 20)) == both);
  }
}

TEST_CASE("membership, equality, enumeration") {
  Subspace zero(2, 3);
  CHECK(zero.contains(Vec{0, 0, 0}));

  std::set<Vec> e = vector_set(enumerate(Subspace::span(3, 2, {{1, 2}}), 1 << 20));
  CHECK(e == std::set<Vec>{{0, 0}, {1, 2}, {2, 1}});

  CHECK(subspace_eq(Subspace::span(3, 2, {{1, 1}}), Subspace::span(3, 2, {{2, 2}})));

  Subspace big = Subspace::full(2, 25);
  CHECK_THROWS_AS(enumerate(big, 1 << 20), BudgetExceeded);
  try {
    enumerate(big, 1 << 20);
  } catch (const BudgetExceeded& e) {
    CHECK(e.required == (u64(1) << 25));
    CHECK(e.budget == (u64(1) << 20));
  }
}

TEST_CASE("non-prime moduli are rejected at construction") {
  CHECK_THROWS_AS(FpMatrix(4, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(FpMatrix(1, 1, 1), std::invalid_argument);
  CHECK_NOTHROW(FpMatrix(7, 2, 2));
}

TEST_CASE("try_inverse") {
  std::mt19937_64 rng(17);
  FpMatrix id = FpMatrix::identity(3, 4);
  CHECK(*try_inverse(id) == id);
  FpMatrix sing(3, 2, 2, {1, 2, 2, 4});
  CHECK(!try_inverse(sing));
  for (int t = 0; t < 20; ++t) {
    FpMatrix m = random_matrix(rng, 3, 3, 3);
    auto inv = try_inverse(m);
    if (inv) CHECK(*inv * m == FpMatrix::identity(3, 3));
  }
}
