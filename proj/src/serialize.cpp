#include "cycmod/serialize.hpp"

#include <sstream>

#include "json.hpp"

namespace cycmod {

using nlohmann::json;

std::string module_to_json(const AModule& m) {
  json j;
  j["p"] = m.p();
  j["n"] = m.n();
  j["d"] = m.dim();
  json ts = json::array();
  for (const auto& t : m.action()) ts.push_back(t.entries());
  j["T"] = std::move(ts);
  j["generator_marks"] = m.generator_marks();
  return j.dump();
}

AModule module_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError("$", e.what());
  }
  auto require = [&](const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("$.") + key, "missing field");
    return j.at(key);
  };
  u32 p, n;
  std::size_t d;
  try {
    p = require("p").get<u32>();
    n = require("n").get<u32>();
    d = require("d").get<std::size_t>();
  } catch (const json::exception& e) {
    throw ParseError("$.p|n|d", e.what());
  }
  if (!is_prime(p)) throw ParseError("$.p", "not prime: " + std::to_string(p));
  json ts = require("T");
  if (!ts.is_array() || ts.size() != n)
    throw ParseError("$.T", "expected " + std::to_string(n) + " action matrices");
  std::vector<FpMatrix> action;
  for (std::size_t i = 0; i < n; ++i) {
    const json& rows = ts.at(i);
    if (!rows.is_array() || rows.size() != d * d)
      throw ParseError("$.T[" + std::to_string(i) + "]",
                       "expected " + std::to_string(d * d) + " row-major entries");
    std::vector<u32> entries;
    entries.reserve(d * d);
    for (std::size_t k = 0; k < d * d; ++k) {
      u32 e;
      try {
        e = rows.at(k).get<u32>();
      } catch (const json::exception& ex) {
        throw ParseError("$.T[" + std::to_string(i) + "][" + std::to_string(k) + "]", ex.what());
      }
      if (e >= p)
        throw ParseError("$.T[" + std::to_string(i) + "][" + std::to_string(k) + "]",
                         "entry " + std::to_string(e) + " not reduced mod " + std::to_string(p));
      entries.push_back(e);
    }
    action.emplace_back(p, d, d, std::move(entries));
  }
  std::vector<std::size_t> marks;
  if (j.contains("generator_marks")) {
    for (const auto& v : j.at("generator_marks")) {
      std::size_t m = v.get<std::size_t>();
      if (m >= d) throw ParseError("$.generator_marks", "mark out of range");
      marks.push_back(m);
    }
  }
  try {
    return AModule(Algebra(p, n), d, std::move(action), std::move(marks));
  } catch (const std::invalid_argument& e) {
    throw ParseError("$.T", e.what()); // e.g. T_i T_j != 0
  }
}

namespace {

json basis_rows(const Subspace& s) {
  json rows = json::array();
  for (std::size_t r = 0; r < s.rank(); ++r) rows.push_back(s.basis().row(r));
  return rows;
}

template <typename Graph>
json edges_of(const Graph& g) {
  json edges = json::array();
  for (std::size_t i = 0; i < g.graph.n; ++i)
    for (std::size_t j = i + 1; j < g.graph.n; ++j)
      if (g.graph.adj[i][j]) edges.push_back(json::array({i, j}));
  return edges;
}

} // namespace

std::string graph_to_json(const CycGraph& g) {
  json j;
  json verts = json::array();
  for (const auto& v : g.vertices) {
    json jv;
    jv["basis"] = basis_rows(v.sub);
    jv["rep"] = v.rep;
    verts.push_back(std::move(jv));
  }
  j["vertices"] = std::move(verts);
  j["edges"] = edges_of(g);
  j["marked"] = g.graph.marked;
  return j.dump();
}

std::string graph_to_json(const ZGraph& g) {
  json j;
  json verts = json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    json jv;
    jv["basis"] = json::array({g.vertices[i]});
    jv["rep"] = g.reps[i];
    verts.push_back(std::move(jv));
  }
  j["vertices"] = std::move(verts);
  j["edges"] = edges_of(g);
  j["marked"] = g.graph.marked;
  return j.dump();
}

namespace {

template <typename V>
std::string label_of(const V& vec) {
  std::string s;
  for (std::size_t i = 0; i < vec.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vec[i]);
  }
  return s;
}

template <typename Graph, typename RepOf>
std::string dot_of(const Graph& g, RepOf rep_of) {
  std::ostringstream out;
  out << "graph cycgraph {\n";
  std::vector<bool> marked(g.graph.n, false);
  for (auto m : g.graph.marked) marked[m] = true;
  for (std::size_t i = 0; i < g.graph.n; ++i) {
    out << "  v" << i << " [label=\"" << label_of(rep_of(i)) << "\"";
    if (marked[i]) out << ", style=filled";
    out << "];\n";
  }
  for (std::size_t i = 0; i < g.graph.n; ++i)
    for (std::size_t j = i + 1; j < g.graph.n; ++j)
      if (g.graph.adj[i][j]) out << "  v" << i << " -- v" << j << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace

std::string graph_to_dot(const CycGraph& g) {
  return dot_of(g, [&](std::size_t i) { return g.vertices[i].rep; });
}

std::string graph_to_dot(const ZGraph& g) {
  return dot_of(g, [&](std::size_t i) { return g.reps[i]; });
}

std::string seq_to_string(const std::vector<u32>& terms) {
  if (terms.empty()) return "-";
  std::string s;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (j) s += ".";
    s += std::to_string(terms[j]);
  }
  return s;
}

std::vector<u32> seq_from_string(const std::string& s) {
  std::vector<u32> out;
  if (s.empty() || s == "-") return out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find_first_of(".,", pos);
    std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
    try {
      out.push_back(u32(std::stoul(tok)));
    } catch (const std::exception&) {
      throw ParseError("seq", "bad term '" + tok + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string search_to_csv(const SearchReport& rep) {
  std::ostringstream out;
  out << "seq,depth,d,gdim,tilde_components,full_cdim,fundamental_found,fcdim,elapsed_ms\n";
  for (const auto& r : rep.rows) {
    out << seq_to_string(r.seq) << "," << r.depth << "," << r.d << "," << r.gdim << ","
        << r.tilde_components << ",";
    if (r.full_cdim) out << *r.full_cdim;
    else out << "-";
    out << ",";
    if (r.fundamental_found) out << (*r.fundamental_found ? "yes" : "no");
    else out << "-";
    out << ",";
    if (r.fcdim) out << *r.fcdim;
    else out << "-";
    out << "," << r.elapsed_ms << "\n";
  }
  return out.str();
}

std::string search_to_json(const SearchReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) {
    json jr;
    jr["seq"] = r.seq;
    jr["depth"] = r.depth;
    jr["d"] = r.d;
    jr["gdim"] = r.gdim;
    jr["tilde_components"] = r.tilde_components;
    if (r.full_cdim) jr["full_cdim"] = *r.full_cdim;
    else jr["full_cdim"] = nullptr;
    if (r.fundamental_found) jr["fundamental_found"] = *r.fundamental_found;
    else jr["fundamental_found"] = nullptr;
    if (r.fcdim) jr["fcdim"] = *r.fcdim;
    else jr["fcdim"] = nullptr;
    jr["elapsed_ms"] = r.elapsed_ms;
    rows.push_back(std::move(jr));
  }
  json j;
  j["p"] = rep.params.p;
  j["n"] = rep.params.n;
  j["depth"] = rep.params.depth;
  j["beam"] = rep.params.beam;
  j["rows"] = std::move(rows);
  return j.dump();
}

std::string thm31_to_text(const Thm31Report& rep) {
  std::ostringstream out;
  out << "existence suite p=" << rep.p << " n=" << rep.n << "\n";
  for (const auto& c : rep.claims) {
    const char* tag = c.status == ClaimStatus::Pass       ? "[PASS]"
                      : c.status == ClaimStatus::Fail     ? "[FAIL]"
                      : c.status == ClaimStatus::Recorded ? "[RECORDED]"
                                                          : "[NOTE]";
    out << tag << " " << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  return out.str();
}

} // namespace cycmod
