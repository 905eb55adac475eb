#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "asigma/canonical.hpp"
#include "asigma/families.hpp"
#include "asigma/graph6.hpp"
#include "asigma/independence.hpp"
#include "asigma/search.hpp"
#include "asigma/spectral.hpp"
#include "asigma/verification.hpp"

namespace py = pybind11;
using namespace asigma;

namespace {

Graph as_graph(const py::object& g) {
  if (py::isinstance<Graph>(g)) return g.cast<Graph>();
  if (py::isinstance<py::str>(g)) return from_graph6(g.cast<std::string>());
  throw py::type_error("expected a Graph or a graph6 string");
}

py::dict record_dict(const SearchRecord& r) {
  py::dict d;
  d["n"] = r.n;
  d["alpha"] = r.alpha;
  d["sigma"] = r.sigma;
  d["class"] = to_string(r.cls);
  d["min_lambda"] = r.min_lambda;
  d["tie_tol"] = r.tie_tol;
  d["minimizers"] = r.minimizers;
  d["json"] = to_json(r);
  return d;
}

}  // namespace

PYBIND11_MODULE(_asigma, m) {
  m.doc() = "A_sigma spectral radius toolkit";
  m.attr("__version__") = ASIGMA_VERSION;

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, const EdgeList&>(), py::arg("n"), py::arg("edges") = EdgeList{})
      .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + to_graph6(g) + "')"; });

  m.def("family", [](const std::string& spec) { return build(parse_family(spec)); }, py::arg("spec"),
        "Build a named graph from its text form, e.g. 't2:2,1,1,2'.");

  m.def(
      "spectral_radius",
      [](const py::object& g, double sigma, double tol) {
        SpectralResult r = spectral_radius(as_graph(g), sigma, tol);
        return py::make_tuple(r.lambda, r.perron);
      },
      py::arg("graph"), py::arg("sigma"), py::arg("tol") = kDefaultTol,
      "Largest eigenvalue of A_sigma and the unit Perron vector.");

  m.def(
      "independence_number", [](const py::object& g) { return independence_number(as_graph(g)).alpha; },
      py::arg("graph"));
  m.def(
      "canonical_code", [](const py::object& g) { return canonical_code(as_graph(g)); }, py::arg("graph"));
  m.def(
      "is_isomorphic", [](const py::object& a, const py::object& b) { return is_isomorphic(as_graph(a), as_graph(b)); },
      py::arg("a"), py::arg("b"));

  m.def(
      "find_minimizers",
      [](int n, int alpha, const std::vector<double>& sigmas, const std::string& cls, double tie_tol,
         unsigned threads) {
        SearchOptions opts;
        opts.tie_tol = tie_tol;
        opts.threads = threads;
        std::vector<SearchRecord> recs;
        {
          py::gil_scoped_release release;
          recs = find_minimizers_multi({n, alpha, parse_graph_class(cls)}, sigmas, opts);
        }
        py::list out;
        for (const auto& r : recs) out.append(record_dict(r));
        return out;
      },
      py::arg("n"), py::arg("alpha"), py::arg("sigmas"), py::arg("cls") = "tree", py::arg("tie_tol") = 1e-9,
      py::arg("threads") = 0);

  m.def(
      "candidate_rows",
      [](int n, bool refined) {
        py::list out;
        for (const auto& row : candidate_rows(n, refined)) {
          out.append(py::make_tuple(to_string(row.shape), row.counts, row.t, row.lp));
        }
        return out;
      },
      py::arg("n"), py::arg("refined") = true);

  m.def("check_ids", &check_ids);
  m.def(
      "run_check",
      [](const std::string& id, const std::string& params_json) {
        CheckOutcome o;
        {
          py::gil_scoped_release release;
          o = run_check(id, nlohmann::json::parse(params_json));
        }
        return to_json(o).dump();
      },
      py::arg("id"), py::arg("params_json") = "{}", "Run one registered check; returns its JSON outcome.");
}
