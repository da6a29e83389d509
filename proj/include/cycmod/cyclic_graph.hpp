#pragma once

// Graphs of cyclic modules: vertices are the distinct cyclic submodules
// generated by a set Sigma, two vertices are adjacent when their ideal images
// intersect nontrivially, and every vertex carries a loop. Connected
// components yield the combinatorial dimension bounds.

#include <cstdint>
#include <span>
#include <vector>

#include "cycmod/trivext.hpp"

namespace cycmod {

inline constexpr u64 kDefaultEnumBudget = u64(1) << 20;

// Plain loop graph: symmetric adjacency with an all-true diagonal plus a
// marked vertex set (always a union of whole components in our constructions).
struct LoopGraph {
  std::size_t n = 0;
  std::vector<std::vector<bool>> adj;
  std::vector<std::size_t> marked; // sorted, unique

  static LoopGraph discrete(std::size_t n);
  static LoopGraph complete(std::size_t n);
  bool adjacent(std::size_t i, std::size_t j) const { return adj[i][j]; }
};

// Partition into connected components; blocks ordered by smallest member,
// members ascending.
std::vector<std::vector<std::size_t>> components(const LoopGraph& g);

struct CycVertex {
  Subspace sub;   // canonical cyclic submodule
  Vec rep;        // chosen generator
  Subspace image; // I * rep, drives adjacency
};

struct CycGraph {
  AModule module;
  Ideal ideal = Ideal::zero();
  std::vector<CycVertex> vertices; // sorted by canonical subspace key
  LoopGraph graph;

  std::size_t vertex_count() const { return vertices.size(); }
  // index of the vertex holding the cyclic submodule of x, or npos
  std::size_t find_vertex(std::span<const u32> x) const;
  static constexpr std::size_t npos = std::size_t(-1);
};

struct CTriple {
  AModule module;
  std::vector<Vec> sigma;       // nonzero vectors
  std::vector<Vec> sigma_prime; // subset of sigma

  void validate() const; // 0 not in sigma, sigma' contained in sigma
};

CycGraph gamma(const CTriple& t, const Ideal& I);

// Sigma = M \ IM via full enumeration; throws BudgetExceeded (with the
// required size) when p^d exceeds the budget.
CycGraph gamma_full(const AModule& M, const Ideal& I, u64 budget = kDefaultEnumBudget);

std::vector<std::vector<std::size_t>> components(const CycGraph& g);

// Number of connected components of gamma_full; requires I to be a
// decomposition ideal of M (throws NotDecompositionIdeal otherwise).
std::size_t cdim(const AModule& M, const Ideal& I, u64 budget = kDefaultEnumBudget);

// Sigma generates M and, for each x in Sigma, the submodule sum over all
// vertices outside the component of Rx stays proper.
bool is_fundamental(const AModule& M, const Ideal& I, const std::vector<Vec>& sigma,
                    u64 budget = kDefaultEnumBudget);

// Number of distinct components met by a fundamental Sigma; throws
// NotFundamental when the precondition fails.
std::size_t fcdim(const AModule& M, const Ideal& I, const std::vector<Vec>& sigma,
                  u64 budget = kDefaultEnumBudget);

// Overloads reusing a precomputed gamma_full graph (repeated candidate tests).
bool is_fundamental(const CycGraph& full_graph, const std::vector<Vec>& sigma);
std::size_t fcdim(const CycGraph& full_graph, const std::vector<Vec>& sigma);

// Condition-4 style membership: the probe avoids the sum of all vertex
// subspaces outside the anchor's component in the given full graph.
bool avoids_complement_sum(const CycGraph& full_graph, const Vec& anchor, const Vec& probe);
bool avoids_complement_sum(const CycGraph& full_graph, const Vec& x);

// Vertex map of the functor on a morphism f (given as a matrix dst.d x src.d).
// Checks the intertwining and Sigma conditions and that adjacency is
// preserved; throws NotCMorphism otherwise.
std::vector<std::size_t> gamma_map(const FpMatrix& f, const CTriple& src, const CTriple& dst,
                                   const Ideal& I);

// Quotient identifying vertices with equal ideal images (the "same socle"
// identification); adjacency inherited from any preimage pair.
CycGraph socle_collapse(const CycGraph& g);

// Categorical constructions on loop graphs.
LoopGraph graph_coproduct(std::span<const LoopGraph> gs);
LoopGraph graph_product(std::span<const LoopGraph> gs);
// f, g: vertex maps G -> H. Equalizer: subgraph of G where they agree
// (returns kept indices too); coequalizer: quotient of H by the minimal
// identification of f(v) with g(v).
struct EqualizerResult {
  LoopGraph graph;
  std::vector<std::size_t> kept;
};
EqualizerResult graph_equalizer(const LoopGraph& G, const LoopGraph& H,
                                const std::vector<std::size_t>& f,
                                const std::vector<std::size_t>& g);
struct CoequalizerResult {
  LoopGraph graph;
  std::vector<std::size_t> cls; // H vertex -> class index
};
CoequalizerResult graph_coequalizer(const LoopGraph& G, const LoopGraph& H,
                                    const std::vector<std::size_t>& f,
                                    const std::vector<std::size_t>& g);

// Union / intersection of graphs over the same module context, vertices
// matched by canonical subspace key.
CycGraph graph_union(std::span<const CycGraph> gs);
CycGraph graph_intersect(std::span<const CycGraph> gs);

// Brute force over vertex permutations, guarded to <= 8 vertices, with a
// degree-sequence prefilter; marked sets must correspond.
bool graph_isomorphic(const LoopGraph& a, const LoopGraph& b);

// Coproduct of triples: direct sum with embedded Sigma unions.
CTriple triple_coproduct(std::span<const CTriple> ts);

// Finite chain t_0 -> t_1 -> ... with injective intertwiners; the limit is
// the last module carrying all accumulated embedded Sigma sets.
CTriple triple_chain_limit(const std::vector<CTriple>& chain,
                           const std::vector<FpMatrix>& inclusions);

} // namespace cycmod
