#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "catroute/bench.hpp"
#include "catroute/checks.hpp"
#include "catroute/construction.hpp"
#include "catroute/errors.hpp"
#include "catroute/fixtures.hpp"
#include "catroute/generators.hpp"
#include "catroute/routing.hpp"

namespace py = pybind11;
using namespace catroute;

namespace {

Graph graph_from_edges(std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }

Method method_from(const std::string& name) {
  auto m = parse_method(name);
  if (!m) throw ArgumentError("unknown method '" + name + "'");
  return *m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Category systems and greedy routing on graphs";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<DisconnectedError>(m, "DisconnectedError", error.ptr());
  py::register_exception<GenerationError>(m, "GenerationError", error.ptr());
  py::register_exception<InternalError>(m, "InternalError", error.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_static("parse", py::overload_cast<std::string_view>(&parse_edge_list), py::arg("text"))
      .def("__len__", &Graph::size)
      .def_property_readonly("n", &Graph::size)
      .def_property_readonly("m", &Graph::edge_count)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             auto nb = g.neighbors(v);
             return std::vector<Vertex>(nb.begin(), nb.end());
           })
      .def("has_edge", &Graph::has_edge)
      .def("edges", &Graph::edges)
      .def("to_edge_list", [](const Graph& g) { return to_edge_list(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

  m.def("diameter", &diameter);
  m.def("is_connected", &is_connected);
  m.def("is_tree", &is_tree);

  py::class_<CategorySystem>(m, "CategorySystem")
      .def(py::init<std::size_t, std::vector<std::vector<Vertex>>>(), py::arg("n"),
           py::arg("categories"))
      .def_static("parse", [](std::string_view text) { return parse_categories(text); })
      .def("__len__", &CategorySystem::size)
      .def_property_readonly("n", &CategorySystem::universe_size)
      .def_property_readonly("memdim", &CategorySystem::membership_dimension)
      .def("cat",
           [](const CategorySystem& s, Vertex u) {
             auto c = s.cat(u);
             return std::vector<CategoryIndex>(c.begin(), c.end());
           })
      .def("distance", &CategorySystem::distance, py::arg("a"), py::arg("b"))
      .def("to_lists", &CategorySystem::to_lists)
      .def("to_json", [](const CategorySystem& s) { return to_json(s); })
      .def("__eq__", [](const CategorySystem& a, const CategorySystem& b) { return a == b; });

  py::class_<RouteTrace>(m, "RouteTrace")
      .def_readonly("source", &RouteTrace::source)
      .def_readonly("target", &RouteTrace::target)
      .def_readonly("path", &RouteTrace::path)
      .def_readonly("hop_distances", &RouteTrace::hop_distances)
      .def_property_readonly("delivered", &RouteTrace::delivered)
      .def("render", [](const RouteTrace& t) { return render_trace(t); });

  m.def("greedy_step", &greedy_step, py::arg("graph"), py::arg("cats"), py::arg("u"),
        py::arg("target"));
  m.def(
      "greedy_route",
      [](const Graph& g, const CategorySystem& s, Vertex from, Vertex to) {
        return greedy_route(g, s, from, to);
      },
      py::arg("graph"), py::arg("cats"), py::arg("source"), py::arg("target"));

  py::class_<PropertyReport>(m, "PropertyReport")
      .def_readonly("holds", &PropertyReport::holds)
      .def_property_readonly("source",
                             [](const PropertyReport& r) {
                               return r.witness ? r.witness->source : std::nullopt;
                             })
      .def_property_readonly("target",
                             [](const PropertyReport& r) {
                               return r.witness ? r.witness->target : std::nullopt;
                             })
      .def_property_readonly("category",
                             [](const PropertyReport& r) {
                               return r.witness ? r.witness->category : std::nullopt;
                             })
      .def("__bool__", [](const PropertyReport& r) { return r.holds; })
      .def("__str__", &PropertyReport::to_string);

  m.def("is_shattered", &is_shattered);
  m.def("is_internally_connected", &is_internally_connected);
  m.def(
      "verify_all_pairs_routing",
      [](const Graph& g, const CategorySystem& s) { return verify_all_pairs_routing(g, s); },
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "construct",
      [](const Graph& g, const std::string& method) {
        return construct_categories(g, method_from(method));
      },
      py::arg("graph"), py::arg("method") = "auto");
  m.def("path_categories", &path_categories);
  m.def("graph_categories", &graph_categories);

  m.def(
      "generate",
      [](const std::string& family, std::size_t n, std::uint64_t seed, double p, double beta,
         std::size_t k, std::size_t cols) {
        auto f = parse_family(family);
        if (!f) throw ArgumentError("unknown family '" + family + "'");
        return generate(
            {.family = *f, .n = n, .p = p, .beta = beta, .k = k, .cols = cols, .seed = seed});
      },
      py::arg("family"), py::arg("n"), py::arg("seed") = 0, py::arg("p") = 0.1,
      py::arg("beta") = 0.1, py::arg("k") = 4, py::arg("cols") = 0);

  m.def(
      "bench_csv",
      [](const std::string& spec_json, bool record_timing) {
        auto specs = parse_bench_specs(spec_json);
        std::vector<BenchRecord> rows;
        {
          py::gil_scoped_release release;
          rows = run_benchmark(specs, {.record_timing = record_timing});
        }
        std::ostringstream out;
        write_csv(out, rows);
        return out.str();
      },
      py::arg("spec_json"), py::arg("record_timing") = false);

  m.def("run_fixtures", [] {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (auto& r : run_fixtures()) out.emplace_back(r.name, r.passed, r.detail);
    return out;
  });
}
