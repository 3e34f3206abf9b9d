#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "ordolab/core.hpp"
#include "ordolab/gomoryhu.hpp"
#include "ordolab/graph.hpp"
#include "ordolab/io.hpp"
#include "ordolab/matroids.hpp"
#include "ordolab/mlvc.hpp"
#include "ordolab/partition.hpp"
#include "ordolab/reductions.hpp"
#include "ordolab/sfm.hpp"
#include "ordolab/solve.hpp"

namespace py = pybind11;
using namespace ordolab;

namespace {

// Values cross the boundary as fractions.Fraction.
py::object to_fraction(const Rational& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(value));
}

Rational from_python(const py::handle& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return parse_rational(py::str(fraction(value)).cast<std::string>());
}

py::object to_frozenset(const Subset& s) {
  static py::object frozenset = py::module_::import("builtins").attr("frozenset");
  return frozenset(py::cast(s.elements()));
}

Subset from_iterable(const py::iterable& items) {
  std::vector<int> elements;
  for (auto item : items) elements.push_back(item.cast<int>());
  return Subset::from_elements(elements);
}

Graph make_graph(int n, const std::vector<py::tuple>& edges) {
  Graph g(n);
  for (const auto& e : edges) {
    if (e.size() < 2 || e.size() > 3) throw py::value_error("edges are (u, v) or (u, v, weight)");
    g.add_edge(e[0].cast<int>(), e[1].cast<int>(),
               e.size() == 3 ? from_python(e[2]) : Rational(1));
  }
  return g;
}

py::dict solution_dict(const solve::Solution& s) {
  py::dict d;
  d["value"] = to_fraction(s.value);
  d["ordering"] = s.ordering.sequence();
  return d;
}

std::vector<py::object> fractions(const std::vector<Rational>& values) {
  std::vector<py::object> out;
  for (const auto& v : values) out.push_back(to_fraction(v));
  return out;
}

std::vector<py::object> subsets(const std::vector<Subset>& chain) {
  std::vector<py::object> out;
  for (const auto& s : chain) out.push_back(to_frozenset(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(_ordolab, m) {
  m.doc() = "Minimum linear ordering over submodular functions";

  py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
  py::register_exception<io::ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("num_vertices"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<py::tuple> out;
                               for (const auto& e : g.edges()) {
                                 out.push_back(py::make_tuple(e.u, e.v, to_fraction(e.weight)));
                               }
                               return out;
                             })
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + std::to_string(g.num_vertices()) + " vertices, " +
               std::to_string(g.num_edges()) + " edges)";
      });

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init<int, std::vector<std::vector<int>>>(), py::arg("num_vertices"),
           py::arg("edges"))
      .def_property_readonly("num_vertices", &Hypergraph::num_vertices)
      .def_property_readonly("edges", &Hypergraph::edges);

  py::class_<SetFunction>(m, "SetFunction")
      .def(py::init([](std::size_t size, py::function fn) {
             // The callable receives a frozenset of 0-based elements.
             return SetFunction(size, [fn](const Subset& s) -> Rational {
               py::gil_scoped_acquire gil;
               return from_python(fn(to_frozenset(s)));
             });
           }),
           py::arg("size"), py::arg("fn"))
      .def_property_readonly("size", &SetFunction::size)
      .def("__call__",
           [](const SetFunction& f, const py::iterable& s) { return to_fraction(f(from_iterable(s))); });

  py::class_<matroids::Matroid>(m, "Matroid")
      .def_property_readonly("size", &matroids::Matroid::size)
      .def_property_readonly("full_rank", &matroids::Matroid::full_rank)
      .def("rank", [](const matroids::Matroid& mat,
                      const py::iterable& s) { return mat.rank(from_iterable(s)); })
      .def("corank", [](const matroids::Matroid& mat,
                        const py::iterable& s) { return matroids::corank(mat, from_iterable(s)); })
      .def("rank_function", &matroids::Matroid::rank_function)
      .def("corank_function",
           [](const matroids::Matroid& mat) {
             return SetFunction(mat.size(), [mat](const Subset& s) -> Rational {
               return Rational(static_cast<long>(matroids::corank(mat, s)));
             });
           })
      .def("dual", [](const matroids::Matroid& mat) { return matroids::dual(mat); })
      .def("__repr__", &matroids::Matroid::describe);

  m.def("graphic", [](const Graph& g) { return matroids::graphic(g); }, py::arg("graph"));
  m.def("uniform", &matroids::uniform, py::arg("m"), py::arg("k"));
  m.def(
      "vector_matroid",
      [](const std::vector<std::vector<std::int64_t>>& rows, std::uint64_t prime) {
        matroids::IntMatrix a(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (rows[r].size() != a.cols) throw py::value_error("ragged matrix");
          for (std::size_t c = 0; c < a.cols; ++c) a.at(r, c) = rows[r][c];
        }
        return matroids::vector(std::move(a), prime);
      },
      py::arg("rows"), py::arg("prime") = 0);
  m.def("cut_function", &matroids::cut_function, py::arg("graph"));

  m.def("parse_graph", &io::parse_graph, py::arg("text"));
  m.def("parse_hypergraph", &io::parse_hypergraph, py::arg("text"));

  m.def(
      "mlop_objective",
      [](const SetFunction& f, std::vector<int> order) {
        return to_fraction(mlop_objective(f, Ordering::from_sequence(std::move(order))));
      },
      py::arg("f"), py::arg("ordering"));
  m.def(
      "mlvc_objective",
      [](const Graph& g, std::vector<int> order) {
        return mlvc_objective(g, Ordering::from_sequence(std::move(order)));
      },
      py::arg("graph"), py::arg("ordering"));

  m.def(
      "exact_mlop",
      [](const SetFunction& f, const std::vector<std::int64_t>& costs) {
        return solution_dict(costs.empty() ? solve::exact_mlop_dp(f)
                                           : solve::exact_weighted_mlop_dp(f, costs));
      },
      py::arg("f"), py::arg("costs") = std::vector<std::int64_t>{});
  m.def(
      "cactus_exact", [](const Graph& g) { return solution_dict(solve::cactus_exact(g)); },
      py::arg("graph"));
  m.def(
      "uniform_closed_form",
      [](std::int64_t k, std::int64_t size) {
        return py::int_(py::str(solve::uniform_closed_form(k, size).get_str()));
      },
      py::arg("k"), py::arg("m"));

  m.def(
      "approx_mlop",
      [](const SetFunction& f) {
        const auto a = solve::approx_monotone_mlop(f);
        py::dict d;
        d["value"] = to_fraction(a.value);
        d["ordering"] = a.ordering.sequence();
        d["lower"] = to_fraction(a.certificate.lower);
        d["upper"] = to_fraction(a.certificate.upper);
        d["guarantee"] = to_fraction(a.certificate.guarantee);
        d["zero_set"] = to_frozenset(a.zero_set);
        return d;
      },
      py::arg("f"));

  m.def(
      "minimize",
      [](const SetFunction& f, const py::object& lambda) {
        const auto r = sfm::minimize_offset(f, from_python(lambda));
        py::dict d;
        d["value"] = to_fraction(r.min_value);
        d["minimal"] = to_frozenset(r.minimal_minimizer);
        d["maximal"] = to_frozenset(r.maximal_minimizer);
        d["certified"] = r.certified;
        return d;
      },
      py::arg("f"), py::arg("lam") = 0);

  m.def(
      "principal_partition",
      [](const SetFunction& f) {
        const auto pp = partition::compute_principal_partition(f);
        py::dict d;
        d["chain"] = subsets(pp.chain);
        d["critical_values"] = fractions(pp.critical_values);
        d["trivial"] = pp.trivial;
        return d;
      },
      py::arg("f"));

  m.def(
      "gomory_hu_tree",
      [](const SetFunction& f, std::uint64_t seed) {
        const auto tree = gomoryhu::build_gh_tree(f, seed);
        std::vector<py::tuple> out;
        for (const auto& e : tree.edges) out.push_back(py::make_tuple(e.u, e.v, to_fraction(e.weight)));
        return out;
      },
      py::arg("f"), py::arg("seed") = 0);
  m.def(
      "tree_mlop",
      [](const SetFunction& f, std::uint64_t seed) {
        const auto t = gomoryhu::tree_mlop(f, seed);
        py::dict d;
        d["value"] = to_fraction(t.value);
        d["certified"] = t.certified;
        return d;
      },
      py::arg("f"), py::arg("seed") = 0);

  m.def(
      "mlvc_to_weighted_graphic",
      [](const Graph& g) {
        const auto r = reductions::mlvc_to_weighted_graphic(g);
        py::dict d;
        d["graph"] = r.apex_graph;
        d["costs"] = r.costs;
        d["k"] = r.k;
        d["offset"] = py::int_(py::str(r.offset.get_str()));
        d["isolated_vertices"] = r.isolated_vertices;
        return d;
      },
      py::arg("graph"));

  m.def(
      "best_of_n",
      [](const Hypergraph& h, std::size_t samples, std::uint64_t seed) {
        const auto b = mlvc::best_of_n(h, samples, seed);
        return py::make_tuple(b.value, b.labels.sequence());
      },
      py::arg("hypergraph"), py::arg("samples"), py::arg("seed") = 0);
  m.def(
      "clique_gap",
      [](int n) {
        const auto g = mlvc::clique_gap(n);
        py::dict d;
        d["integer_optimum"] = py::int_(py::str(g.integer_optimum.get_str()));
        d["fractional_value"] = to_fraction(g.fractional_value);
        d["ratio"] = to_fraction(g.ratio);
        return d;
      },
      py::arg("n"));
}
