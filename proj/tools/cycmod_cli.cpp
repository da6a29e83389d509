// Command-line surface: graph construction for the module presets, the
// dimension computations, the verification suites, and the search harness.
// Exit codes: 0 all checks pass, 1 a check failed or an operation reported a
// precise error (counterexample printed), 2 usage or budget errors.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cycmod/suites.hpp"

using namespace cycmod;

namespace {

struct Config {
  u64 enumeration_budget = kDefaultEnumBudget;
  u64 oracle_budget = kDefaultOracleBudget;
  u64 seed = 0;
  u32 max_depth = 16;
  u32 max_beam = 512;
  std::string out;

  Budgets budgets() const { return Budgets{enumeration_budget, oracle_budget}; }
};

void load_config_file(const std::string& path, Config& cfg) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open config file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path, e.what());
  }
  if (j.contains("enumeration_budget")) cfg.enumeration_budget = j["enumeration_budget"].get<u64>();
  if (j.contains("oracle_budget")) cfg.oracle_budget = j["oracle_budget"].get<u64>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<u64>();
  if (j.contains("max_depth")) cfg.max_depth = j["max_depth"].get<u32>();
  if (j.contains("max_beam")) cfg.max_beam = j["max_beam"].get<u32>();
  if (j.contains("out")) cfg.out = j["out"].get<std::string>();
  if (cfg.enumeration_budget == 0 || cfg.oracle_budget == 0)
    throw ParseError(path, "budgets must be positive");
}

struct PresetArgs {
  std::string preset = "free";
  u32 p = 2, n = 2, i = 1;
  u32 r = 1;
  std::string seq;
  std::string module_json;
};

struct BuiltModule {
  AModule module;
  std::vector<Vec> generators; // sigma for the tilde option
};

BuiltModule build_preset(const PresetArgs& a) {
  BuiltModule out;
  if (a.preset == "free") {
    out.module = free_module(Algebra(a.p, a.n), a.r);
  } else if (a.preset == "Mi") {
    TowerLevel lvl = tower_presentation(a.p, a.n, {a.i});
    out.module = lvl.module;
    out.generators = lvl.sigma;
  } else if (a.preset == "Mn1i") {
    if (a.n < 2) throw std::invalid_argument("Mn1i needs n >= 2");
    TowerLevel lvl = tower_presentation(a.p, a.n, {a.n - 1, a.i});
    out.module = lvl.module;
    out.generators = lvl.sigma;
  } else if (a.preset == "tower") {
    TowerLevel lvl = build(AdmSeq{a.p, a.n, seq_from_string(a.seq)});
    out.module = lvl.module;
    out.generators = lvl.sigma;
  } else if (a.preset == "json") {
    std::ifstream in(a.module_json);
    if (!in) throw ParseError(a.module_json, "cannot open module file");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    out.module = module_from_json(text);
  } else {
    throw std::invalid_argument("unknown preset: " + a.preset);
  }
  if (out.generators.empty())
    for (auto m : out.module.generator_marks()) {
      Vec v(out.module.dim(), 0);
      v[m] = 1;
      out.generators.push_back(std::move(v));
    }
  return out;
}

Ideal parse_ideal(const std::string& name, const std::string& basis, const AModule& M) {
  if (name == "zero") return Ideal::zero();
  if (name == "whole") return Ideal::whole();
  if (name == "soc") return Ideal::radical(M.algebra());
  if (name == "socsub") {
    std::vector<Vec> rows;
    std::stringstream ss(basis);
    std::string row;
    while (std::getline(ss, row, ';')) {
      Vec v;
      std::stringstream rs(row);
      std::string tok;
      while (std::getline(rs, tok, ',')) v.push_back(u32(std::stoul(tok)));
      if (v.size() != M.n()) throw std::invalid_argument("ideal basis row length must be n");
      rows.push_back(std::move(v));
    }
    return Ideal::soc_sub(Subspace::span(M.p(), M.n(), rows));
  }
  throw std::invalid_argument("unknown ideal: " + name);
}

std::vector<Vec> tilde_of(const BuiltModule& bm, u64 budget) {
  if (bm.generators.empty()) throw std::invalid_argument("preset has no generator marks");
  u64 count = checked_pow(2, bm.generators.size());
  if (count > budget) throw BudgetExceeded(count, budget);
  std::vector<Vec> out;
  for (u64 mask = 1; mask < count; ++mask) {
    Vec v(bm.module.dim(), 0);
    for (std::size_t t = 0; t < bm.generators.size(); ++t)
      if (mask & (u64(1) << t)) v = add_vec(v, bm.generators[t], bm.module.p());
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<ZVec> parse_zvecs(const std::string& text) {
  std::vector<ZVec> out;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    ZVec v;
    std::stringstream rs(row);
    std::string tok;
    while (std::getline(rs, tok, ',')) v.push_back(std::stoll(tok));
    out.push_back(std::move(v));
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphs of cyclic modules over trivial extension algebras"};
  app.require_subcommand(1);

  Config cfg;
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (flags override it)");
  app.add_option("--enumeration-budget", cfg.enumeration_budget, "max vectors to enumerate");
  app.add_option("--oracle-budget", cfg.oracle_budget, "max exhaustive End scan size");
  app.add_option("--seed", cfg.seed, "seed for all randomized suites");

  PresetArgs pa;
  std::string ideal_name = "soc", ideal_basis, sigma_kind = "full", out_prefix = "gamma";
  bool collapse = false;
  u64 zm = 1;
  std::string zvecs = "1,0;2,0;0,1";

  auto add_preset_flags = [&](CLI::App* cmd) {
    cmd->add_option("--preset", pa.preset, "free|Mi|Mn1i|tower|zdom|json")->required();
    cmd->add_option("--p", pa.p, "prime modulus");
    cmd->add_option("--n", pa.n, "dimension of V");
    cmd->add_option("--i", pa.i, "tower index");
    cmd->add_option("--r", pa.r, "free rank");
    cmd->add_option("--seq", pa.seq, "tower sequence, e.g. 2.2.1");
    cmd->add_option("--module-json", pa.module_json, "module file for preset json");
    cmd->add_option("--ideal", ideal_name, "zero|whole|soc|socsub");
    cmd->add_option("--ideal-basis", ideal_basis, "socsub basis rows, e.g. 1,0;0,1");
  };

  CLI::App* graph_cmd = app.add_subcommand("graph", "build a graph, emit DOT and JSON");
  add_preset_flags(graph_cmd);
  graph_cmd->add_option("--sigma", sigma_kind, "full|tilde");
  graph_cmd->add_flag("--collapse", collapse, "identify vertices with equal ideal images");
  graph_cmd->add_option("--out", out_prefix, "output prefix (PREFIX.dot, PREFIX.json)");
  graph_cmd->add_option("--m", zm, "principal ideal generator (zdom)");
  graph_cmd->add_option("--zvecs", zvecs, "integer sigma, e.g. 1,0;2,0;0,1 (zdom)");

  CLI::App* cdim_cmd = app.add_subcommand("cdim", "combinatorial dimension");
  add_preset_flags(cdim_cmd);

  CLI::App* fcdim_cmd = app.add_subcommand("fcdim", "fundamental combinatorial dimension");
  add_preset_flags(fcdim_cmd);
  std::string gens_csv;
  fcdim_cmd->add_option("--gens", gens_csv,
                        "comma-separated generator indices for sigma (default: search)");

  CLI::App* thm_cmd = app.add_subcommand("verify-thm31", "existence suite");
  u32 tp = 3, tn = 2;
  thm_cmd->add_option("--p", tp, "prime")->required();
  thm_cmd->add_option("--n", tn, "dim V")->required();

  CLI::App* lemma_cmd = app.add_subcommand("lemma-check", "named lemma suite");
  std::string lemma_name;
  std::size_t trials = 0;
  lemma_cmd->add_option("name", lemma_name, "which check")->required();
  lemma_cmd->add_option("--trials", trials, "override the trial count");

  CLI::App* oracle_cmd = app.add_subcommand("oracle-check", "random-module bound suite");
  std::size_t oracle_trials = 50;
  oracle_cmd->add_option("--trials", oracle_trials, "number of random modules");

  CLI::App* search_cmd = app.add_subcommand("search", "beam search over admissible sequences");
  SearchParams sp;
  std::string metric_name = "tilde";
  bool timings = false;
  search_cmd->add_option("--p", sp.p, "prime")->required();
  search_cmd->add_option("--n", sp.n, "dim V")->required();
  search_cmd->add_option("--depth", sp.depth, "maximum sequence length");
  search_cmd->add_option("--beam", sp.beam, "beam width");
  search_cmd->add_option("--metric", metric_name, "tilde|cdim");
  search_cmd->add_flag("--timings", timings, "record real elapsed_ms (non-reproducible)");
  std::string search_out;
  search_cmd->add_option("--out", search_out, "CSV output path (default stdout)");
  std::string search_json_out;
  search_cmd->add_option("--json-out", search_json_out, "also write a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (!config_path.empty()) {
      Config file_cfg;
      load_config_file(config_path, file_cfg);
      // flags override the file: reload flags on top of file values
      if (app.count("--enumeration-budget") == 0) cfg.enumeration_budget = file_cfg.enumeration_budget;
      if (app.count("--oracle-budget") == 0) cfg.oracle_budget = file_cfg.oracle_budget;
      if (app.count("--seed") == 0) cfg.seed = file_cfg.seed;
      if (file_cfg.max_depth) cfg.max_depth = file_cfg.max_depth;
      if (file_cfg.max_beam) cfg.max_beam = file_cfg.max_beam;
      if (cfg.out.empty()) cfg.out = file_cfg.out;
    }

    if (graph_cmd->parsed()) {
      std::string dot, json_text;
      if (pa.preset == "zdom") {
        ZTriple t;
        t.sigma = parse_zvecs(zvecs);
        t.d = t.sigma.empty() ? 0 : t.sigma[0].size();
        ZGraph g = gamma_z(t, PrincIdeal{zm});
        dot = graph_to_dot(g);
        json_text = graph_to_json(g);
      } else {
        BuiltModule bm = build_preset(pa);
        Ideal I = parse_ideal(ideal_name, ideal_basis, bm.module);
        CycGraph g;
        if (sigma_kind == "tilde") {
          CTriple t{bm.module, tilde_of(bm, cfg.enumeration_budget), {}};
          g = gamma(t, I);
        } else if (sigma_kind == "full") {
          g = gamma_full(bm.module, I, cfg.enumeration_budget);
        } else {
          throw std::invalid_argument("unknown sigma kind: " + sigma_kind);
        }
        if (collapse) g = socle_collapse(g);
        dot = graph_to_dot(g);
        json_text = graph_to_json(g);
      }
      write_file(out_prefix + ".dot", dot);
      write_file(out_prefix + ".json", json_text);
      std::cout << out_prefix << ".dot\n" << out_prefix << ".json\n";
      return 0;
    }

    if (cdim_cmd->parsed()) {
      BuiltModule bm = build_preset(pa);
      Ideal I = parse_ideal(ideal_name, ideal_basis, bm.module);
      try {
        std::cout << cdim(bm.module, I, cfg.enumeration_budget) << "\n";
      } catch (const NotDecompositionIdeal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
      }
      return 0;
    }

    if (fcdim_cmd->parsed()) {
      BuiltModule bm = build_preset(pa);
      Ideal I = parse_ideal(ideal_name, ideal_basis, bm.module);
      CycGraph g = gamma_full(bm.module, I, cfg.enumeration_budget);
      if (!gens_csv.empty()) {
        std::vector<Vec> sigma;
        std::stringstream ss(gens_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          std::size_t idx = std::stoul(tok);
          if (idx >= bm.generators.size()) throw std::invalid_argument("generator index out of range");
          sigma.push_back(bm.generators[idx]);
        }
        try {
          std::cout << fcdim(g, sigma) << "\n";
        } catch (const NotFundamental& e) {
          std::cerr << "error: " << e.what() << "\n";
          return 1;
        }
        return 0;
      }
      // search small generator subsets for a fundamental one
      const std::size_t gcount = bm.generators.size();
      for (std::size_t size = 1; size <= std::min<std::size_t>(3, gcount); ++size) {
        std::vector<std::size_t> pick;
        std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
          if (pick.size() == size) {
            std::vector<Vec> sigma;
            for (auto t : pick) sigma.push_back(bm.generators[t]);
            if (is_fundamental(g, sigma)) {
              std::cout << fcdim(g, sigma) << "\n";
              return true;
            }
            return false;
          }
          for (std::size_t t = from; t < gcount; ++t) {
            pick.push_back(t);
            if (rec(t + 1)) return true;
            pick.pop_back();
          }
          return false;
        };
        if (rec(0)) return 0;
      }
      std::cerr << "error: no fundamental subset found among generator subsets of size <= 3\n";
      return 1;
    }

    if (thm_cmd->parsed()) {
      Thm31Report rep = verify_thm31(tp, tn, cfg.budgets());
      std::cout << thm31_to_text(rep);
      return rep.all_asserted_pass() ? 0 : 1;
    }

    if (lemma_cmd->parsed()) {
      static const std::map<std::string, std::size_t> default_trials = {
          {"2.4", 50}, {"2.8", 50}, {"2.10", 40}, {"3.2", 50},  {"5.3", 50},
          {"5.4", 50}, {"5.5", 50}, {"7.1", 50},  {"7.2", 100}, {"z-adjacency", 100}};
      std::size_t t = trials;
      if (t == 0) {
        auto it = default_trials.find(lemma_name);
        t = it == default_trials.end() ? 1 : it->second;
      }
      SuiteResult r = run_named_check(lemma_name, cfg.seed, t, cfg.budgets());
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << lemma_name << ": " << r.detail << "\n";
      return r.pass ? 0 : 1;
    }

    if (oracle_cmd->parsed()) {
      SuiteResult r = oracle_check(cfg.seed, oracle_trials, cfg.budgets());
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "oracle-check: " << r.detail << "\n";
      return r.pass ? 0 : 1;
    }

    if (search_cmd->parsed()) {
      if (sp.depth > cfg.max_depth || sp.beam > cfg.max_beam)
        throw std::invalid_argument("depth/beam exceed the configured limits");
      sp.metric = metric_name == "cdim" ? SearchMetric::FullCdim : SearchMetric::TildeComponents;
      sp.budgets = cfg.budgets();
      sp.seed = cfg.seed;
      sp.timings = timings;
      SearchReport rep = search(sp);
      std::string csv = search_to_csv(rep);
      if (search_out.empty()) std::cout << csv;
      else write_file(search_out, csv);
      if (!search_json_out.empty()) write_file(search_json_out, search_to_json(rep));
      return 0;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
