#pragma once

// Integer backend: graphs of cyclic modules for torsion-free Z^d with
// principal ideals. For m > 0 adjacency of Za and Zb reduces analytically to
// Q-linear dependence (the bounded witness search stays available as the
// independent oracle); vertices are dedup'd by primitive-vector form.

#include <cstdint>
#include <vector>

#include "cycmod/cyclic_graph.hpp"

namespace cycmod {

using i64 = std::int64_t;
using ZVec = std::vector<i64>;

struct ZTriple {
  std::size_t d = 0;
  std::vector<ZVec> sigma;       // nonzero vectors, length d
  std::vector<ZVec> sigma_prime; // subset of sigma

  void validate() const;
};

struct PrincIdeal {
  std::uint64_t m = 0; // 0 encodes the zero ideal
};

// Za = Zb iff b = +-a, so vertex identity is the sign-normalized vector
// (first nonzero entry positive). The gcd-reduced primitive form is kept for
// proportionality reasoning and labels.
ZVec canonical_generator(const ZVec& v);
ZVec primitive_form(const ZVec& v);

bool proportional_over_q(const ZVec& a, const ZVec& b); // all 2x2 minors vanish

// Oracle: search r = t m, r' = t' m with 0 < |t|,|t'| <= bound and r a = r' b.
bool adjacency_witness_search(const ZVec& a, const ZVec& b, std::uint64_t m, i64 bound);

struct ZGraph {
  std::vector<ZVec> vertices; // sign-normalized generators, sorted lexicographically
  std::vector<ZVec> reps;     // generators as given in sigma, aligned with vertices
  LoopGraph graph;

  std::size_t find_vertex(const ZVec& x) const;
  static constexpr std::size_t npos = std::size_t(-1);
};

ZGraph gamma_z(const ZTriple& t, PrincIdeal I);

// Gamma over the product ideal, over the intersection ideal (lcm), and the
// graph intersection coincide (commutative domain, torsion-free module).
bool lemma72_check(const ZTriple& t, const std::vector<PrincIdeal>& ideals);

// Directed families: Gamma over the sum ideal equals the union of the member
// graphs. Throws NotDirected when the family is not inclusion-directed.
bool lemma71_check_z(const ZTriple& t, const std::vector<PrincIdeal>& family);
bool lemma71_check_fp(const CTriple& t, const std::vector<Ideal>& family);

} // namespace cycmod
