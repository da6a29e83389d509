#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cycmod/suites.hpp"

namespace py = pybind11;
using namespace cycmod;

namespace {

AModule presentation_from_lists(u32 p, u32 n, std::size_t g, std::size_t N,
                                const std::vector<std::vector<std::vector<u32>>>& maps) {
  std::vector<FpMatrix> L;
  for (const auto& rows : maps) L.push_back(FpMatrix::from_rows(p, n, rows));
  return presentation(Algebra(p, n), g, N, L);
}

std::vector<std::vector<u32>> subspace_rows(const Subspace& s) {
  std::vector<std::vector<u32>> rows;
  for (std::size_t r = 0; r < s.rank(); ++r) rows.push_back(s.basis().row(r));
  return rows;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "graphs of cyclic modules over trivial extension algebras";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
  py::register_exception<NotDecompositionIdeal>(m, "NotDecompositionIdealError");
  py::register_exception<NotFundamental>(m, "NotFundamentalError");

  py::class_<Algebra>(m, "Algebra")
      .def(py::init<u32, u32>(), py::arg("p"), py::arg("n"))
      .def_readonly("p", &Algebra::p)
      .def_readonly("n", &Algebra::n)
      .def("__repr__", [](const Algebra& a) {
        return "Algebra(p=" + std::to_string(a.p) + ", n=" + std::to_string(a.n) + ")";
      });

  py::class_<Ideal>(m, "Ideal")
      .def_static("zero", &Ideal::zero)
      .def_static("whole", &Ideal::whole)
      .def_static("radical", &Ideal::radical, py::arg("algebra"))
      .def_static("soc_sub",
                  [](const Algebra& a, const std::vector<Vec>& rows) {
                    return Ideal::soc_sub(Subspace::span(a.p, a.n, rows));
                  },
                  py::arg("algebra"), py::arg("rows"));

  py::class_<AModule>(m, "Module")
      .def_property_readonly("p", &AModule::p)
      .def_property_readonly("n", &AModule::n)
      .def_property_readonly("dim", &AModule::dim)
      .def_property_readonly("generator_marks", &AModule::generator_marks)
      .def("act", [](const AModule& mod, Vec v, Vec x) { return mod.act(v, x); })
      .def("to_json", &module_to_json)
      .def("__eq__", [](const AModule& a, const AModule& b) { return a == b; })
      .def("__repr__", [](const AModule& mod) {
        return "Module(p=" + std::to_string(mod.p()) + ", n=" + std::to_string(mod.n()) +
               ", dim=" + std::to_string(mod.dim()) + ")";
      });

  py::class_<TowerLevel>(m, "TowerLevel")
      .def_property_readonly("module", [](const TowerLevel& t) { return t.module; })
      .def_property_readonly("sigma", [](const TowerLevel& t) { return t.sigma; })
      .def_property_readonly("socle_dim", [](const TowerLevel& t) { return t.socle_dim; })
      .def_property_readonly("seq", [](const TowerLevel& t) { return t.seq.terms; });

  py::class_<CycGraph>(m, "Graph")
      .def_property_readonly("vertex_count", &CycGraph::vertex_count)
      .def("components",
           [](const CycGraph& g) { return components(g); })
      .def("component_count", [](const CycGraph& g) { return components(g).size(); })
      .def("adjacent", [](const CycGraph& g, std::size_t i, std::size_t j) {
        return g.graph.adj.at(i).at(j);
      })
      .def_property_readonly("marked", [](const CycGraph& g) { return g.graph.marked; })
      .def("vertex_basis", [](const CycGraph& g, std::size_t i) {
        return subspace_rows(g.vertices.at(i).sub);
      })
      .def("vertex_rep", [](const CycGraph& g, std::size_t i) { return g.vertices.at(i).rep; })
      .def("to_dot", [](const CycGraph& g) { return graph_to_dot(g); })
      .def("to_json", [](const CycGraph& g) { return graph_to_json(g); });

  m.def("free_module", &free_module, py::arg("algebra"), py::arg("rank"));
  m.def("presentation", &presentation_from_lists, py::arg("p"), py::arg("n"), py::arg("g"),
        py::arg("N"), py::arg("maps"));
  m.def("module_from_json", &module_from_json, py::arg("text"));
  m.def("direct_sum", &direct_sum, py::arg("a"), py::arg("b"));
  m.def("goldie_dim", &goldie_dim, py::arg("module"));
  m.def("in_decomposition_domain", &in_decomposition_domain, py::arg("module"),
        py::arg("ideal"));

  m.def("gamma",
        [](const AModule& mod, const std::vector<Vec>& sigma,
           const std::vector<Vec>& sigma_prime, const Ideal& I) {
          return gamma(CTriple{mod, sigma, sigma_prime}, I);
        },
        py::arg("module"), py::arg("sigma"), py::arg("sigma_prime"), py::arg("ideal"));
  m.def("gamma_full", &gamma_full, py::arg("module"), py::arg("ideal"),
        py::arg("budget") = kDefaultEnumBudget);
  m.def("socle_collapse", &socle_collapse, py::arg("graph"));
  m.def("cdim", &cdim, py::arg("module"), py::arg("ideal"),
        py::arg("budget") = kDefaultEnumBudget);
  m.def("is_fundamental",
        py::overload_cast<const AModule&, const Ideal&, const std::vector<Vec>&, u64>(
            &is_fundamental),
        py::arg("module"), py::arg("ideal"), py::arg("sigma"),
        py::arg("budget") = kDefaultEnumBudget);
  m.def("fcdim",
        py::overload_cast<const AModule&, const Ideal&, const std::vector<Vec>&, u64>(&fcdim),
        py::arg("module"), py::arg("ideal"), py::arg("sigma"),
        py::arg("budget") = kDefaultEnumBudget);

  m.def("is_admissible", &is_admissible, py::arg("terms"), py::arg("p"), py::arg("n"));
  m.def("tower_level",
        [](u32 p, u32 n, const std::vector<u32>& terms) {
          return build(AdmSeq{p, n, terms});
        },
        py::arg("p"), py::arg("n"), py::arg("terms"));
  m.def("sigma_tilde", &sigma_tilde, py::arg("level"), py::arg("budget") = kDefaultEnumBudget);
  m.def("truncation_purity", &truncation_purity, py::arg("level"));

  m.def("ks_length",
        [](const AModule& mod, u64 budget, u64 seed) {
          std::mt19937_64 rng(seed);
          KsLength l = ks_length(mod, budget, rng);
          return py::make_tuple(l.length, l.certain);
        },
        py::arg("module"), py::arg("budget") = kDefaultOracleBudget, py::arg("seed") = 0);

  m.def("verify_thm31_text",
        [](u32 p, u32 n) { return thm31_to_text(verify_thm31(p, n)); }, py::arg("p"),
        py::arg("n"));
  m.def("search_csv",
        [](u32 p, u32 n, u32 depth, u32 beam) {
          SearchParams sp;
          sp.p = p;
          sp.n = n;
          sp.depth = depth;
          sp.beam = beam;
          return search_to_csv(search(sp));
        },
        py::arg("p"), py::arg("n"), py::arg("depth"), py::arg("beam"));
}
