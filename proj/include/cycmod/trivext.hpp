#pragma once

// The trivial extension algebra A = F_p x| F_p^n (product (a,v)(b,w) =
// (ab, bv+aw)), its ideals, and finite dimensional A-modules given by their
// radical action matrices. A module of k-dimension d stores one d x d matrix
// per basis vector of V; these pairwise annihilate since Soc(A)^2 = 0.

#include <optional>
#include <vector>

#include "cycmod/linalg.hpp"

namespace cycmod {

struct Algebra {
  u32 p = 2; // prime
  u32 n = 0; // dim of V; n = 0 degenerates to the field F_p

  Algebra() = default;
  Algebra(u32 p, u32 n);
  bool operator==(const Algebra&) const = default;
};

struct AElem {
  u32 a = 0; // scalar part
  Vec v;     // socle part, length n

  bool operator==(const AElem&) const = default;
};

AElem elem_mul(const Algebra& A, const AElem& x, const AElem& y);
bool is_unit(const AElem& x);

// Ideals of A: zero, the whole ring, or {0} (+) W for a subspace W of V.
// SocSub(V) is the Jacobson radical J(A) = Soc(A).
class Ideal {
public:
  enum class Kind { Zero, Whole, SocSub };

  static Ideal zero() { return Ideal(Kind::Zero, {}); }
  static Ideal whole() { return Ideal(Kind::Whole, {}); }
  static Ideal soc_sub(Subspace w) { return Ideal(Kind::SocSub, std::move(w)); }
  static Ideal radical(const Algebra& A); // SocSub of the full V

  Kind kind() const { return kind_; }
  const Subspace& socle_part() const { return w_; }
  bool is_zero_ideal() const; // Zero, or SocSub of the zero subspace

  bool operator==(const Ideal&) const = default;

private:
  Ideal(Kind k, Subspace w) : kind_(k), w_(std::move(w)) {}
  Kind kind_;
  Subspace w_;
};

class AModule;

// Action-closed subspace of a module, kept in the parent's coordinates.
struct Submodule {
  Subspace space;
};

class AModule {
public:
  AModule() = default;
  // Validates T_i T_j = 0 for all i, j.
  AModule(Algebra A, std::size_t d, std::vector<FpMatrix> action,
          std::vector<std::size_t> generator_marks = {});

  const Algebra& algebra() const { return A_; }
  u32 p() const { return A_.p; }
  u32 n() const { return A_.n; }
  std::size_t dim() const { return d_; }
  const std::vector<FpMatrix>& action() const { return T_; }
  const FpMatrix& action(std::size_t i) const { return T_[i]; }
  const std::vector<std::size_t>& generator_marks() const { return marks_; }

  // x |-> (sum v_i T_i) x, multiplication by (0, v)
  Vec act(std::span<const u32> v, std::span<const u32> x) const;
  // multiplication by a general element (a, v)
  Vec act_elem(const AElem& e, std::span<const u32> x) const;

  bool is_action_closed(const Subspace& u) const;

  bool operator==(const AModule&) const = default;

private:
  Algebra A_;
  std::size_t d_ = 0;
  std::vector<FpMatrix> T_; // n matrices, d x d
  std::vector<std::size_t> marks_;
};

// Free module A^r in per-generator blocks [unit | socle_1..socle_n].
AModule free_module(const Algebra& A, std::size_t r);

// Module on g generator coordinates plus an N-dimensional socle block;
// L[t] is the N x n matrix sending v in V to the socle image of generator t.
// Generator marks are the first g coordinates.
AModule presentation(const Algebra& A, std::size_t g, std::size_t N,
                     const std::vector<FpMatrix>& L);

// I*U as a subspace: Zero -> 0; Whole -> U + sum T_i U; SocSub(W) -> span of
// T_w u over basis vectors of W and U.
Subspace ideal_image(const Ideal& I, const AModule& M, const Subspace& U);
Subspace ideal_image_full(const Ideal& I, const AModule& M); // U = whole module

// ann_I M = {x : I x = 0}
Subspace annihilator(const AModule& M, const Ideal& I);

// Nonzero vectors of W, one per projective class (first nonzero coord = 1).
std::vector<Vec> projective_reps(const Subspace& w);

// I M = ann_I M = ann*_I M; the pointwise annihilator condition is checked as
// kernel(T_w) <= IM for every projective class of w (ann*_I M is a union of
// subspaces, never materialized).
bool in_decomposition_domain(const AModule& M, const Ideal& I);

// dim Soc(M) = dim ann_{J(A)} M
std::size_t goldie_dim(const AModule& M);

// span(x, T_1 x, ..., T_n x); rejects x = 0
Submodule cyclic(const AModule& M, std::span<const u32> x);

AModule direct_sum(const AModule& a, const AModule& b);

struct QuotientResult {
  AModule module;
  FpMatrix projection; // (d - rank K) x d, maps parent coords to quotient coords
};

// Quotient by an action-closed K; coset representatives live on the non-pivot
// coordinates of K's RREF basis, so the output is deterministic.
QuotientResult quotient_with_map(const AModule& M, const Submodule& K);
AModule quotient(const AModule& M, const Submodule& K);

// IN = IM /\ N
bool is_pure(const AModule& M, const Submodule& N, const Ideal& I);

// (I * M) /\ N = {0} where I * M is the union of the column spaces of the
// T_w over projective classes w (the Lemma 3.2(2) precondition).
bool pointwise_image_meets_trivially(const AModule& M, const Ideal& I, const Subspace& N);

// Restrict the action to an action-closed subspace; module in N-coordinates
// plus the embedding matrix (d x rank) mapping N-coords back to M-coords.
struct RestrictResult {
  AModule module;
  FpMatrix embedding;
};
RestrictResult restrict_to(const AModule& M, const Submodule& N);

} // namespace cycmod
