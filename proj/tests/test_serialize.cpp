#include "doctest.h"

#include "json.hpp"

#include "cycmod/serialize.hpp"
#include "cycmod/suites.hpp"

using namespace cycmod;

TEST_CASE("module round trip") {
  Algebra A(2, 2);
  AModule m = free_module(A, 1);
  AModule back = module_from_json(module_to_json(m));
  CHECK(back == m);

  TowerLevel lvl = tower_presentation(3, 3, {2, 1});
  CHECK(module_from_json(module_to_json(lvl.module)) == lvl.module);
}

TEST_CASE("malformed modules are rejected with a path") {
  // action matrices that do not pairwise annihilate
  nlohmann::json j;
  j["p"] = 2;
  j["n"] = 2;
  j["d"] = 2;
  j["T"] = {{0, 1, 0, 0}, {0, 0, 1, 0}};
  j["generator_marks"] = nlohmann::json::array();
  CHECK_THROWS_AS(module_from_json(j.dump()), ParseError);

  j["T"] = {{0, 1, 0, 0}, {0, 5, 0, 0}}; // entry not reduced
  CHECK_THROWS_AS(module_from_json(j.dump()), ParseError);
  try {
    module_from_json(j.dump());
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("$.T[1][1]") != std::string::npos);
  }

  j["T"] = {{0, 1, 0, 0}};
  CHECK_THROWS_AS(module_from_json(j.dump()), ParseError);

  CHECK_THROWS_AS(module_from_json("{"), ParseError);
  CHECK_THROWS_AS(module_from_json(R"({"p":4,"n":0,"d":1,"T":[]})"), ParseError);
}

TEST_CASE("graph json schema") {
  Algebra F2(2, 0);
  AModule plane(F2, 2, {});
  CTriple t{plane, {{1, 0}, {0, 1}, {1, 1}}, {}};
  CycGraph g = gamma(t, Ideal::whole());
  nlohmann::json j = nlohmann::json::parse(graph_to_json(g));
  REQUIRE(j.contains("vertices"));
  REQUIRE(j.contains("edges"));
  REQUIRE(j.contains("marked"));
  CHECK(j["vertices"].size() == 3);
  CHECK(j["edges"].empty()); // discrete graph: loops are implicit
  for (const auto& v : j["vertices"]) {
    CHECK(v.contains("basis"));
    CHECK(v.contains("rep"));
  }
}

TEST_CASE("dot export is canonical") {
  TowerLevel mi = tower_presentation(3, 2, {1});
  const Ideal J = Ideal::radical(mi.module.algebra());
  CTriple t{mi.module, sigma_tilde(mi), {}};
  CycGraph g = gamma(t, J);
  std::string dot = graph_to_dot(g);
  CHECK(dot == graph_to_dot(g));
  CHECK(dot.find("graph cycgraph {") == 0);
  CHECK(dot.find("v0 -- v1;") != std::string::npos);
}

TEST_CASE("sequence strings") {
  CHECK(seq_to_string({}) == "-");
  CHECK(seq_to_string({2, 2, 1}) == "2.2.1");
  CHECK(seq_from_string("2.2.1") == std::vector<u32>{2, 2, 1});
  CHECK(seq_from_string("-").empty());
  CHECK(seq_from_string("").empty());
  CHECK_THROWS_AS(seq_from_string("2.x"), ParseError);
}

TEST_CASE("search csv shape") {
  SearchParams sp;
  sp.p = 3;
  sp.n = 3;
  sp.depth = 1;
  sp.beam = 4;
  SearchReport rep = search(sp);
  std::string csv = search_to_csv(rep);
  CHECK(csv.rfind("seq,depth,d,gdim,tilde_components,full_cdim,fundamental_found,fcdim,elapsed_ms\n",
                  0) == 0);
  CHECK(csv.find("\r") == std::string::npos); // LF endings only
  // one line per row plus the header
  std::size_t lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == rep.rows.size() + 1);
}
