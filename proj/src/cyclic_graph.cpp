#include "cycmod/cyclic_graph.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace cycmod {

LoopGraph LoopGraph::discrete(std::size_t n) {
  LoopGraph g;
  g.n = n;
  g.adj.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) g.adj[i][i] = true;
  return g;
}

LoopGraph LoopGraph::complete(std::size_t n) {
  LoopGraph g;
  g.n = n;
  g.adj.assign(n, std::vector<bool>(n, true));
  return g;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<std::size_t> expand_to_components(const LoopGraph& g,
                                              const std::vector<std::size_t>& seeds) {
  auto comps = components(g);
  std::vector<std::size_t> comp_of(g.n, 0);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (auto v : comps[c]) comp_of[v] = c;
  std::vector<bool> take(comps.size(), false);
  for (auto s : seeds) take[comp_of[s]] = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.n; ++v)
    if (take[comp_of[v]]) out.push_back(v);
  return out;
}

} // namespace

std::vector<std::vector<std::size_t>> components(const LoopGraph& g) {
  UnionFind uf(g.n);
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = i + 1; j < g.n; ++j)
      if (g.adj[i][j]) uf.unite(i, j);
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t v = 0; v < g.n; ++v) blocks[uf.find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : blocks) out.push_back(std::move(members));
  return out;
}

std::vector<std::vector<std::size_t>> components(const CycGraph& g) { return components(g.graph); }

std::size_t CycGraph::find_vertex(std::span<const u32> x) const {
  Subspace s = cyclic(module, x).space;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].sub == s) return i;
  return npos;
}

void CTriple::validate() const {
  for (const auto& v : sigma) {
    if (v.size() != module.dim()) throw std::invalid_argument("sigma vector length mismatch");
    if (is_zero_vec(v)) throw std::invalid_argument("0 is not allowed in sigma");
  }
  for (const auto& v : sigma_prime)
    if (std::find(sigma.begin(), sigma.end(), v) == sigma.end())
      throw std::invalid_argument("sigma' must be a subset of sigma");
}

namespace {

// Shared graph assembly: dedup cyclic submodules, sort vertices by canonical
// key, compute adjacency through the (few) distinct ideal images. The
// per-element key computation is pure and runs chunked in parallel on large
// sigma; the merge below is sequential and order-fixed, so results are
// deterministic.
CycGraph assemble(const AModule& M, const Ideal& I, const std::vector<Vec>& sigma,
                  const std::vector<Vec>& sigma_prime) {
  CycGraph out;
  out.module = M;
  out.ideal = I;

  std::vector<std::string> keys(sigma.size());
  const std::size_t threads =
      sigma.size() >= 8192 ? std::max<std::size_t>(2, std::thread::hardware_concurrency()) : 1;
  if (threads <= 1) {
    for (std::size_t i = 0; i < sigma.size(); ++i) keys[i] = cyclic(M, sigma[i]).space.key();
  } else {
    const std::size_t chunk = (sigma.size() + threads - 1) / threads;
    std::vector<std::future<void>> futs;
    for (std::size_t t = 0; t < threads; ++t) {
      std::size_t lo = t * chunk, hi = std::min(sigma.size(), lo + chunk);
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, [&, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i) keys[i] = cyclic(M, sigma[i]).space.key();
      }));
    }
    for (auto& f : futs) f.get();
  }

  std::unordered_map<std::string, std::size_t> seen;
  seen.reserve(sigma.size() / 4 + 8);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen.count(keys[i])) continue;
    seen.emplace(keys[i], out.vertices.size());
    const Vec& a = sigma[i];
    Subspace img = ideal_image(I, M, Subspace::span(M.p(), M.dim(), {a}));
    out.vertices.push_back(CycVertex{cyclic(M, a).space, a, std::move(img)});
  }
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const CycVertex& x, const CycVertex& y) { return x.sub.key() < y.sub.key(); });

  const std::size_t nv = out.vertices.size();
  // adjacency depends only on the image subspaces; dedup them
  std::unordered_map<std::string, std::size_t> img_ids;
  std::vector<std::size_t> cls(nv);
  std::vector<const Subspace*> img_of_cls;
  for (std::size_t i = 0; i < nv; ++i) {
    auto [it, fresh] = img_ids.emplace(out.vertices[i].image.key(), img_of_cls.size());
    if (fresh) img_of_cls.push_back(&out.vertices[i].image);
    cls[i] = it->second;
  }
  const std::size_t nc = img_of_cls.size();
  std::vector<std::vector<bool>> cls_adj(nc, std::vector<bool>(nc, false));
  for (std::size_t a = 0; a < nc; ++a) {
    cls_adj[a][a] = img_of_cls[a]->rank() >= 1;
    for (std::size_t b = a + 1; b < nc; ++b) {
      bool adj = intersect(*img_of_cls[a], *img_of_cls[b]).rank() >= 1;
      cls_adj[a][b] = cls_adj[b][a] = adj;
    }
  }
  out.graph.n = nv;
  out.graph.adj.assign(nv, std::vector<bool>(nv, false));
  for (std::size_t i = 0; i < nv; ++i) {
    out.graph.adj[i][i] = true;
    for (std::size_t j = i + 1; j < nv; ++j)
      out.graph.adj[i][j] = out.graph.adj[j][i] = cls_adj[cls[i]][cls[j]];
  }

  std::vector<std::size_t> seeds;
  for (const auto& a : sigma_prime) {
    std::size_t idx = out.find_vertex(a);
    if (idx == CycGraph::npos) throw std::invalid_argument("sigma' element has no vertex");
    seeds.push_back(idx);
  }
  out.graph.marked = expand_to_components(out.graph, seeds);
  return out;
}

} // namespace

CycGraph gamma(const CTriple& t, const Ideal& I) {
  t.validate();
  return assemble(t.module, I, t.sigma, t.sigma_prime);
}

CycGraph gamma_full(const AModule& M, const Ideal& I, u64 budget) {
  u64 required = checked_pow(M.p(), M.dim());
  if (required > budget) throw BudgetExceeded(required, budget);
  Subspace im = ideal_image_full(I, M);
  std::vector<Vec> sigma;
  for (Vec& v : enumerate(Subspace::full(M.p(), M.dim()), budget)) {
    if (is_zero_vec(v) || im.contains(v)) continue;
    sigma.push_back(std::move(v));
  }
  return assemble(M, I, sigma, {});
}

std::size_t cdim(const AModule& M, const Ideal& I, u64 budget) {
  if (!in_decomposition_domain(M, I))
    throw NotDecompositionIdeal("cdim is defined only for decomposition ideals of M");
  return components(gamma_full(M, I, budget)).size();
}

namespace {

// Spans of the vertex subspaces grouped by component, plus for each component
// the span of everything outside it.
struct ComponentSpans {
  std::vector<std::size_t> comp_of;
  std::vector<Subspace> outside; // outside[c] = sum over vertices not in component c
};

ComponentSpans component_spans(const CycGraph& g) {
  auto comps = components(g.graph);
  const std::size_t k = comps.size();
  ComponentSpans out;
  out.comp_of.assign(g.vertex_count(), 0);
  std::vector<Subspace> span_of(k, Subspace(g.module.p(), g.module.dim()));
  for (std::size_t c = 0; c < k; ++c)
    for (auto v : comps[c]) {
      out.comp_of[v] = c;
      span_of[c] = sum(span_of[c], g.vertices[v].sub);
    }
  std::vector<Subspace> prefix(k + 1, Subspace(g.module.p(), g.module.dim()));
  std::vector<Subspace> suffix(k + 1, Subspace(g.module.p(), g.module.dim()));
  for (std::size_t c = 0; c < k; ++c) prefix[c + 1] = sum(prefix[c], span_of[c]);
  for (std::size_t c = k; c-- > 0;) suffix[c] = sum(suffix[c + 1], span_of[c]);
  out.outside.reserve(k);
  for (std::size_t c = 0; c < k; ++c) out.outside.push_back(sum(prefix[c], suffix[c + 1]));
  return out;
}

} // namespace

bool is_fundamental(const CycGraph& g, const std::vector<Vec>& sigma) {
  const AModule& M = g.module;
  if (sigma.empty()) return M.dim() == 0;
  Subspace im = ideal_image_full(g.ideal, M);
  Subspace generated(M.p(), M.dim());
  for (const auto& x : sigma) {
    if (is_zero_vec(x) || im.contains(x)) return false; // fundamental subsets live in M \ IM
    generated = sum(generated, cyclic(M, x).space);
  }
  if (generated.rank() != M.dim()) return false;
  ComponentSpans spans = component_spans(g);
  for (const auto& x : sigma) {
    std::size_t v = g.find_vertex(x);
    if (v == CycGraph::npos) return false;
    if (spans.outside[spans.comp_of[v]].rank() == M.dim()) return false;
  }
  return true;
}

bool is_fundamental(const AModule& M, const Ideal& I, const std::vector<Vec>& sigma,
                    u64 budget) {
  if (sigma.empty()) return M.dim() == 0;
  return is_fundamental(gamma_full(M, I, budget), sigma);
}

std::size_t fcdim(const CycGraph& g, const std::vector<Vec>& sigma) {
  if (!is_fundamental(g, sigma)) throw NotFundamental("sigma is not a fundamental subset");
  if (sigma.empty()) return 0;
  auto comps = components(g.graph);
  std::vector<std::size_t> comp_of(g.vertex_count(), 0);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (auto v : comps[c]) comp_of[v] = c;
  std::vector<bool> hit(comps.size(), false);
  for (const auto& x : sigma) hit[comp_of[g.find_vertex(x)]] = true;
  return std::size_t(std::count(hit.begin(), hit.end(), true));
}

std::size_t fcdim(const AModule& M, const Ideal& I, const std::vector<Vec>& sigma, u64 budget) {
  if (sigma.empty()) {
    if (M.dim() != 0) throw NotFundamental("sigma is not a fundamental subset");
    return 0;
  }
  return fcdim(gamma_full(M, I, budget), sigma);
}

bool avoids_complement_sum(const CycGraph& g, const Vec& anchor, const Vec& probe) {
  std::size_t v = g.find_vertex(anchor);
  if (v == CycGraph::npos) return false;
  ComponentSpans spans = component_spans(g);
  return !spans.outside[spans.comp_of[v]].contains(probe);
}

bool avoids_complement_sum(const CycGraph& g, const Vec& x) {
  return avoids_complement_sum(g, x, x);
}

std::vector<std::size_t> gamma_map(const FpMatrix& f, const CTriple& src, const CTriple& dst,
                                   const Ideal& I) {
  if (f.rows() != dst.module.dim() || f.cols() != src.module.dim() || f.p() != src.module.p())
    throw NotCMorphism("matrix shape does not match the modules");
  for (std::size_t i = 0; i < src.module.n(); ++i)
    if (!(f * src.module.action(i) == dst.module.action(i) * f))
      throw NotCMorphism("matrix does not intertwine the actions");
  auto member = [](const std::vector<Vec>& set, const Vec& v) {
    return std::find(set.begin(), set.end(), v) != set.end();
  };
  for (const auto& a : src.sigma)
    if (!member(dst.sigma, f.apply(a))) throw NotCMorphism("f(sigma) escapes the target sigma");
  for (const auto& a : src.sigma_prime)
    if (!member(dst.sigma_prime, f.apply(a)))
      throw NotCMorphism("f(sigma') escapes the target sigma'");

  CycGraph gs = gamma(src, I);
  CycGraph gd = gamma(dst, I);
  std::vector<std::size_t> map(gs.vertex_count(), CycGraph::npos);
  for (const auto& a : src.sigma) {
    std::size_t from = gs.find_vertex(a);
    std::size_t to = gd.find_vertex(f.apply(a));
    if (map[from] != CycGraph::npos && map[from] != to)
      throw NotCMorphism("vertex map is not well defined on cyclic submodules");
    map[from] = to;
  }
  for (std::size_t i = 0; i < gs.vertex_count(); ++i)
    for (std::size_t j = 0; j < gs.vertex_count(); ++j)
      if (gs.graph.adj[i][j] && !gd.graph.adj[map[i]][map[j]])
        throw NotCMorphism("vertex map does not preserve adjacency");
  return map;
}

CycGraph socle_collapse(const CycGraph& g) {
  CycGraph out;
  out.module = g.module;
  out.ideal = g.ideal;
  std::unordered_map<std::string, std::size_t> cls_of_key;
  std::vector<std::size_t> cls(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    auto [it, fresh] = cls_of_key.emplace(g.vertices[i].image.key(), cls_of_key.size());
    cls[i] = it->second;
    if (fresh) {
      // class representative: keep the image as the identifying subspace
      out.vertices.push_back(CycVertex{g.vertices[i].image, g.vertices[i].rep, g.vertices[i].image});
    }
  }
  const std::size_t k = out.vertices.size();
  out.graph.n = k;
  out.graph.adj.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) out.graph.adj[i][i] = true;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (std::size_t j = 0; j < g.vertex_count(); ++j)
      if (g.graph.adj[i][j]) out.graph.adj[cls[i]][cls[j]] = true;
  std::vector<std::size_t> seeds;
  for (auto m : g.graph.marked) seeds.push_back(cls[m]);
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  out.graph.marked = seeds;
  return out;
}

LoopGraph graph_coproduct(std::span<const LoopGraph> gs) {
  std::size_t n = 0;
  for (const auto& g : gs) n += g.n;
  LoopGraph out = LoopGraph::discrete(n);
  std::size_t off = 0;
  for (const auto& g : gs) {
    for (std::size_t i = 0; i < g.n; ++i)
      for (std::size_t j = 0; j < g.n; ++j)
        if (g.adj[i][j]) out.adj[off + i][off + j] = true;
    for (auto m : g.marked) out.marked.push_back(off + m);
    off += g.n;
  }
  std::sort(out.marked.begin(), out.marked.end());
  return out;
}

LoopGraph graph_product(std::span<const LoopGraph> gs) {
  std::size_t n = 1;
  for (const auto& g : gs) n *= g.n;
  LoopGraph out = LoopGraph::discrete(n);
  auto coords = [&](std::size_t idx) {
    std::vector<std::size_t> c(gs.size());
    for (std::size_t k = gs.size(); k-- > 0;) {
      c[k] = idx % gs[k].n;
      idx /= gs[k].n;
    }
    return c;
  };
  for (std::size_t a = 0; a < n; ++a) {
    auto ca = coords(a);
    for (std::size_t b = a; b < n; ++b) {
      auto cb = coords(b);
      bool adj = true;
      for (std::size_t k = 0; k < gs.size(); ++k)
        if (!gs[k].adj[ca[k]][cb[k]]) {
          adj = false;
          break;
        }
      out.adj[a][b] = out.adj[b][a] = adj;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    auto ca = coords(a);
    bool marked = !gs.empty();
    for (std::size_t k = 0; k < gs.size(); ++k)
      if (std::find(gs[k].marked.begin(), gs[k].marked.end(), ca[k]) == gs[k].marked.end()) {
        marked = false;
        break;
      }
    if (marked) out.marked.push_back(a);
  }
  return out;
}

EqualizerResult graph_equalizer(const LoopGraph& G, const LoopGraph& H,
                                const std::vector<std::size_t>& f,
                                const std::vector<std::size_t>& g) {
  if (f.size() != G.n || g.size() != G.n) throw std::invalid_argument("vertex map size mismatch");
  (void)H;
  EqualizerResult out;
  for (std::size_t v = 0; v < G.n; ++v)
    if (f[v] == g[v]) out.kept.push_back(v);
  out.graph = LoopGraph::discrete(out.kept.size());
  for (std::size_t i = 0; i < out.kept.size(); ++i)
    for (std::size_t j = 0; j < out.kept.size(); ++j)
      if (G.adj[out.kept[i]][out.kept[j]]) out.graph.adj[i][j] = true;
  for (std::size_t i = 0; i < out.kept.size(); ++i)
    if (std::find(G.marked.begin(), G.marked.end(), out.kept[i]) != G.marked.end())
      out.graph.marked.push_back(i);
  return out;
}

CoequalizerResult graph_coequalizer(const LoopGraph& G, const LoopGraph& H,
                                    const std::vector<std::size_t>& f,
                                    const std::vector<std::size_t>& g) {
  if (f.size() != G.n || g.size() != G.n) throw std::invalid_argument("vertex map size mismatch");
  UnionFind uf(H.n);
  for (std::size_t v = 0; v < G.n; ++v) uf.unite(f[v], g[v]);
  CoequalizerResult out;
  out.cls.assign(H.n, 0);
  std::map<std::size_t, std::size_t> root_to_cls;
  for (std::size_t v = 0; v < H.n; ++v) {
    std::size_t r = uf.find(v);
    auto [it, fresh] = root_to_cls.emplace(r, root_to_cls.size());
    out.cls[v] = it->second;
  }
  out.graph = LoopGraph::discrete(root_to_cls.size());
  for (std::size_t i = 0; i < H.n; ++i)
    for (std::size_t j = 0; j < H.n; ++j)
      if (H.adj[i][j]) out.graph.adj[out.cls[i]][out.cls[j]] = true;
  for (auto m : H.marked) out.graph.marked.push_back(out.cls[m]);
  std::sort(out.graph.marked.begin(), out.graph.marked.end());
  out.graph.marked.erase(std::unique(out.graph.marked.begin(), out.graph.marked.end()),
                         out.graph.marked.end());
  return out;
}

namespace {

CycGraph merge_over_universe(std::span<const CycGraph> gs, bool require_all) {
  if (gs.empty()) throw std::invalid_argument("empty graph family");
  for (const auto& g : gs)
    if (g.module.dim() != gs[0].module.dim() || g.module.p() != gs[0].module.p())
      throw std::invalid_argument("graphs live over incompatible module contexts");
  std::map<std::string, std::size_t> count;
  std::map<std::string, const CycVertex*> vertex_of;
  for (const auto& g : gs)
    for (const auto& v : g.vertices) {
      auto k = v.sub.key();
      count[k] += 1;
      vertex_of.emplace(k, &v);
    }
  CycGraph out;
  out.module = gs[0].module;
  out.ideal = gs[0].ideal;
  for (auto& [k, c] : count) {
    if (require_all && c != gs.size()) continue;
    out.vertices.push_back(*vertex_of[k]);
  }
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const CycVertex& x, const CycVertex& y) { return x.sub.key() < y.sub.key(); });
  const std::size_t n = out.vertices.size();
  out.graph = LoopGraph::discrete(n);
  // per-input index lookup by key
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool any = false, all = true, both_everywhere = true;
      for (const auto& g : gs) {
        std::size_t a = CycGraph::npos, b = CycGraph::npos;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
          if (g.vertices[v].sub == out.vertices[i].sub) a = v;
          if (g.vertices[v].sub == out.vertices[j].sub) b = v;
        }
        if (a == CycGraph::npos || b == CycGraph::npos) {
          both_everywhere = false;
          continue;
        }
        if (g.graph.adj[a][b]) any = true;
        else all = false;
      }
      bool adj = require_all ? (both_everywhere && all) : any;
      out.graph.adj[i][j] = out.graph.adj[j][i] = adj;
    }
  std::vector<std::size_t> seeds;
  for (const auto& g : gs)
    for (auto m : g.graph.marked) {
      for (std::size_t i = 0; i < n; ++i)
        if (out.vertices[i].sub == g.vertices[m].sub) seeds.push_back(i);
    }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  out.graph.marked = seeds;
  return out;
}

} // namespace

CycGraph graph_union(std::span<const CycGraph> gs) { return merge_over_universe(gs, false); }

CycGraph graph_intersect(std::span<const CycGraph> gs) { return merge_over_universe(gs, true); }

bool graph_isomorphic(const LoopGraph& a, const LoopGraph& b) {
  if (a.n != b.n) return false;
  if (a.marked.size() != b.marked.size()) return false;
  if (a.n > 8) throw std::invalid_argument("isomorphism check guarded to <= 8 vertices");
  auto degree_seq = [](const LoopGraph& g) {
    std::vector<std::size_t> d(g.n, 0);
    for (std::size_t i = 0; i < g.n; ++i)
      for (std::size_t j = 0; j < g.n; ++j)
        if (i != j && g.adj[i][j]) ++d[i];
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degree_seq(a) != degree_seq(b)) return false;
  std::vector<bool> a_marked(a.n, false), b_marked(b.n, false);
  for (auto m : a.marked) a_marked[m] = true;
  for (auto m : b.marked) b_marked[m] = true;
  std::vector<std::size_t> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.n && ok; ++i) {
      if (a_marked[i] != b_marked[perm[i]]) ok = false;
      for (std::size_t j = 0; j < a.n && ok; ++j)
        if (a.adj[i][j] != b.adj[perm[i]][perm[j]]) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

CTriple triple_coproduct(std::span<const CTriple> ts) {
  if (ts.empty()) throw std::invalid_argument("empty coproduct");
  CTriple out = ts[0];
  for (std::size_t k = 1; k < ts.size(); ++k) {
    const std::size_t off = out.module.dim();
    AModule next = direct_sum(out.module, ts[k].module);
    auto embed_left = [&](const Vec& v) {
      Vec w(next.dim(), 0);
      std::copy(v.begin(), v.end(), w.begin());
      return w;
    };
    auto embed_right = [&](const Vec& v) {
      Vec w(next.dim(), 0);
      std::copy(v.begin(), v.end(), w.begin() + off);
      return w;
    };
    CTriple merged;
    merged.module = std::move(next);
    for (const auto& v : out.sigma) merged.sigma.push_back(embed_left(v));
    for (const auto& v : ts[k].sigma) merged.sigma.push_back(embed_right(v));
    for (const auto& v : out.sigma_prime) merged.sigma_prime.push_back(embed_left(v));
    for (const auto& v : ts[k].sigma_prime) merged.sigma_prime.push_back(embed_right(v));
    out = std::move(merged);
  }
  return out;
}

CTriple triple_chain_limit(const std::vector<CTriple>& chain,
                           const std::vector<FpMatrix>& inclusions) {
  if (chain.empty()) throw std::invalid_argument("empty chain");
  if (inclusions.size() + 1 != chain.size())
    throw std::invalid_argument("need one inclusion per chain step");
  for (std::size_t k = 0; k < inclusions.size(); ++k) {
    const FpMatrix& f = inclusions[k];
    if (f.rows() != chain[k + 1].module.dim() || f.cols() != chain[k].module.dim())
      throw std::invalid_argument("inclusion shape mismatch");
    if (kernel(f).rank() != 0) throw std::invalid_argument("chain map is not injective");
    for (std::size_t i = 0; i < chain[k].module.n(); ++i)
      if (!(f * chain[k].module.action(i) == chain[k + 1].module.action(i) * f))
        throw std::invalid_argument("chain map does not intertwine the actions");
  }
  CTriple out;
  out.module = chain.back().module;
  auto push_unique = [](std::vector<Vec>& set, Vec v) {
    if (std::find(set.begin(), set.end(), v) == set.end()) set.push_back(std::move(v));
  };
  for (std::size_t k = 0; k < chain.size(); ++k) {
    for (const auto& v : chain[k].sigma) {
      Vec w = v;
      for (std::size_t s = k; s < inclusions.size(); ++s) w = inclusions[s].apply(w);
      push_unique(out.sigma, std::move(w));
    }
    for (const auto& v : chain[k].sigma_prime) {
      Vec w = v;
      for (std::size_t s = k; s < inclusions.size(); ++s) w = inclusions[s].apply(w);
      push_unique(out.sigma_prime, std::move(w));
    }
  }
  return out;
}

} // namespace cycmod
