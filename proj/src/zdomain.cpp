#include "cycmod/zdomain.hpp"

#include <algorithm>
#include <numeric>

namespace cycmod {

void ZTriple::validate() const {
  for (const auto& v : sigma) {
    if (v.size() != d) throw std::invalid_argument("sigma vector length mismatch");
    if (std::all_of(v.begin(), v.end(), [](i64 x) { return x == 0; }))
      throw std::invalid_argument("0 is not allowed in sigma");
  }
  for (const auto& v : sigma_prime)
    if (std::find(sigma.begin(), sigma.end(), v) == sigma.end())
      throw std::invalid_argument("sigma' must be a subset of sigma");
}

namespace {

void normalize_sign(ZVec& v) {
  for (i64 x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
}

} // namespace

ZVec canonical_generator(const ZVec& v) {
  if (std::all_of(v.begin(), v.end(), [](i64 x) { return x == 0; }))
    throw std::invalid_argument("zero vector does not generate a vertex");
  ZVec out = v;
  normalize_sign(out);
  return out;
}

ZVec primitive_form(const ZVec& v) {
  std::uint64_t g = 0;
  for (i64 x : v) g = std::gcd(g, std::uint64_t(x < 0 ? -x : x));
  if (g == 0) throw std::invalid_argument("zero vector has no primitive form");
  ZVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / i64(g);
  normalize_sign(out);
  return out;
}

bool proportional_over_q(const ZVec& a, const ZVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      __int128 minor = __int128(a[i]) * b[j] - __int128(a[j]) * b[i];
      if (minor != 0) return false;
    }
  return true;
}

bool adjacency_witness_search(const ZVec& a, const ZVec& b, std::uint64_t m, i64 bound) {
  if (m == 0) return false;
  for (i64 t = -bound; t <= bound; ++t) {
    if (t == 0) continue;
    for (i64 t2 = -bound; t2 <= bound; ++t2) {
      if (t2 == 0) continue;
      bool eq = true;
      for (std::size_t i = 0; i < a.size() && eq; ++i)
        if (__int128(t) * m * a[i] != __int128(t2) * m * b[i]) eq = false;
      if (eq) return true;
    }
  }
  return false;
}

ZGraph gamma_z(const ZTriple& t, PrincIdeal I) {
  t.validate();
  ZGraph out;
  for (const auto& a : t.sigma) {
    ZVec canon = canonical_generator(a);
    bool seen = false;
    for (const auto& v : out.vertices)
      if (v == canon) {
        seen = true;
        break;
      }
    if (!seen) {
      out.vertices.push_back(std::move(canon));
      out.reps.push_back(a);
    }
  }
  // deterministic order
  std::vector<std::size_t> order(out.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return out.vertices[x] < out.vertices[y]; });
  ZGraph sorted;
  for (auto k : order) {
    sorted.vertices.push_back(out.vertices[k]);
    sorted.reps.push_back(out.reps[k]);
  }
  out = std::move(sorted);

  const std::size_t n = out.vertices.size();
  out.graph = LoopGraph::discrete(n);
  if (I.m != 0)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        bool adj = proportional_over_q(out.reps[i], out.reps[j]);
        out.graph.adj[i][j] = out.graph.adj[j][i] = adj;
      }
  std::vector<std::size_t> seeds;
  for (const auto& a : t.sigma_prime) seeds.push_back(out.find_vertex(a));
  auto comps = components(out.graph);
  std::vector<std::size_t> comp_of(n, 0);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (auto v : comps[c]) comp_of[v] = c;
  std::vector<bool> take(comps.size(), false);
  for (auto s : seeds) take[comp_of[s]] = true;
  for (std::size_t v = 0; v < n; ++v)
    if (take[comp_of[v]]) out.graph.marked.push_back(v);
  return out;
}

std::size_t ZGraph::find_vertex(const ZVec& x) const {
  ZVec canon = canonical_generator(x);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == canon) return i;
  return npos;
}

namespace {

bool same_graph(const ZGraph& a, const ZGraph& b) {
  if (a.vertices != b.vertices) return false;
  if (a.graph.adj != b.graph.adj) return false;
  return a.graph.marked == b.graph.marked;
}

} // namespace

bool lemma72_check(const ZTriple& t, const std::vector<PrincIdeal>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("empty ideal family");
  for (const auto& I : ideals)
    if (I.m == 0) throw std::invalid_argument("lemma 7.2 requires nonzero ideals");
  std::uint64_t prod = 1, l = 1;
  for (const auto& I : ideals) {
    prod *= I.m; // inputs kept small; the adjacency test itself is m-free
    l = std::lcm(l, I.m);
  }
  ZGraph g_prod = gamma_z(t, PrincIdeal{prod});
  ZGraph g_lcm = gamma_z(t, PrincIdeal{l});
  if (!same_graph(g_prod, g_lcm)) return false;
  // graph intersection over the same vertex universe
  ZGraph acc = gamma_z(t, ideals[0]);
  for (std::size_t k = 1; k < ideals.size(); ++k) {
    ZGraph next = gamma_z(t, ideals[k]);
    if (next.vertices != acc.vertices) return false;
    for (std::size_t i = 0; i < acc.graph.n; ++i)
      for (std::size_t j = 0; j < acc.graph.n; ++j)
        acc.graph.adj[i][j] = acc.graph.adj[i][j] && next.graph.adj[i][j];
  }
  return same_graph(g_prod, acc);
}

bool lemma71_check_z(const ZTriple& t, const std::vector<PrincIdeal>& family) {
  if (family.empty()) throw std::invalid_argument("empty ideal family");
  // (m) <= (m') iff m' | m; directed: every pair has an upper bound in the family
  auto divides = [](std::uint64_t x, std::uint64_t y) { // (y) contains (x)?
    return y == 0 ? x == 0 : x % y == 0;
  };
  for (const auto& a : family)
    for (const auto& b : family) {
      bool ok = false;
      for (const auto& c : family)
        if (divides(a.m, c.m) && divides(b.m, c.m)) {
          ok = true;
          break;
        }
      if (!ok) throw NotDirected("ideal family is not directed under inclusion");
    }
  std::uint64_t g = 0;
  for (const auto& I : family) g = std::gcd(g, I.m); // sum of the ideals
  ZGraph lhs = gamma_z(t, PrincIdeal{g});
  ZGraph acc = gamma_z(t, family[0]);
  for (std::size_t k = 1; k < family.size(); ++k) {
    ZGraph next = gamma_z(t, family[k]);
    if (next.vertices != acc.vertices) return false;
    for (std::size_t i = 0; i < acc.graph.n; ++i)
      for (std::size_t j = 0; j < acc.graph.n; ++j)
        acc.graph.adj[i][j] = acc.graph.adj[i][j] || next.graph.adj[i][j];
    std::vector<std::size_t> merged = acc.graph.marked;
    merged.insert(merged.end(), next.graph.marked.begin(), next.graph.marked.end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    acc.graph.marked = std::move(merged);
  }
  return lhs.vertices == acc.vertices && lhs.graph.adj == acc.graph.adj &&
         lhs.graph.marked == acc.graph.marked;
}

namespace {

bool ideal_contains(const Ideal& big, const Ideal& small) {
  if (small.is_zero_ideal()) return true;
  if (big.kind() == Ideal::Kind::Whole) return true;
  if (small.kind() == Ideal::Kind::Whole) return false;
  if (big.is_zero_ideal()) return false;
  return big.socle_part().contains(small.socle_part());
}

} // namespace

bool lemma71_check_fp(const CTriple& t, const std::vector<Ideal>& family) {
  if (family.empty()) throw std::invalid_argument("empty ideal family");
  for (const auto& a : family)
    for (const auto& b : family) {
      bool ok = false;
      for (const auto& c : family)
        if (ideal_contains(c, a) && ideal_contains(c, b)) {
          ok = true;
          break;
        }
      if (!ok) throw NotDirected("ideal family is not directed under inclusion");
    }
  // sum of the family
  bool any_whole = false;
  Subspace w(t.module.p(), t.module.n());
  bool any_soc = false;
  for (const auto& I : family) {
    if (I.kind() == Ideal::Kind::Whole) any_whole = true;
    if (I.kind() == Ideal::Kind::SocSub) {
      w = sum(w, I.socle_part());
      any_soc = true;
    }
  }
  Ideal total = any_whole ? Ideal::whole()
                          : (any_soc ? Ideal::soc_sub(w) : Ideal::zero());
  CycGraph lhs = gamma(t, total);
  std::vector<CycGraph> member_graphs;
  for (const auto& I : family) member_graphs.push_back(gamma(t, I));
  CycGraph rhs = graph_union(member_graphs);
  if (lhs.vertex_count() != rhs.vertex_count()) return false;
  for (std::size_t i = 0; i < lhs.vertex_count(); ++i)
    if (!(lhs.vertices[i].sub == rhs.vertices[i].sub)) return false;
  return lhs.graph.adj == rhs.graph.adj && lhs.graph.marked == rhs.graph.marked;
}

} // namespace cycmod
