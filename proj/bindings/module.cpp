#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <forestmatrix/forestmatrix.hpp>

namespace py = pybind11;
namespace fm = forestmatrix;

namespace {

// Arbitrary-precision integers cross into Python losslessly through their
// decimal representation.
py::object to_py_int(const fm::BigInt& value) {
    const std::string digits = value.str();
    PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (obj == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

py::object to_py_fraction(const fm::Rational& value) {
    static py::object fraction_type =
        py::module_::import("fractions").attr("Fraction");
    return fraction_type(to_py_int(numerator(value)),
                         to_py_int(denominator(value)));
}

py::list counts_as_list(const fm::IntegerMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.order(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.order(); ++j) {
            row.append(to_py_int(m(i, j)));
        }
        rows.append(std::move(row));
    }
    return rows;
}

py::list entries_as_list(const fm::RationalMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.order(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.order(); ++j) {
            row.append(to_py_fraction(m(i, j)));
        }
        rows.append(std::move(row));
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Exact spanning rooted forest counts, the doubly stochastic graph "
        "matrix F = (f_ij)/f, its closed forms, and its random-walk and "
        "dissemination interpretations";

    py::register_exception<fm::ResourceLimitError>(m, "ResourceLimitError",
                                                   PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const fm::ValidationError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<fm::Graph>(m, "Graph")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &fm::Graph::vertex_count)
        .def_property_readonly("edge_count", &fm::Graph::edge_count)
        .def_property_readonly(
            "edges", [](const fm::Graph& g) { return g.edges(); })
        .def("degree", &fm::Graph::degree, py::arg("v"))
        .def("neighbors",
             [](const fm::Graph& g, int v) {
                 const auto nb = g.neighbors(v);
                 return std::vector<int>(nb.begin(), nb.end());
             },
             py::arg("v"))
        .def("has_edge", &fm::Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("__repr__", [](const fm::Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", edges=" +
                   std::to_string(g.edge_count()) + ")";
        });

    m.def("make_path", &fm::make_path, py::arg("n"));
    m.def("make_cycle", &fm::make_cycle, py::arg("n"));
    m.def("make_tcaterpillar", &fm::make_tcaterpillar, py::arg("n"));
    m.def("make_complete", &fm::make_complete, py::arg("n"));
    m.def("augment_with_hub", &fm::augment_with_hub, py::arg("graph"));
    m.def("random_graph", &fm::random_graph, py::arg("n"),
          py::arg("edge_probability"), py::arg("seed"));

    py::class_<fm::ForestCountMatrix>(m, "ForestCountMatrix")
        .def_readonly("n", &fm::ForestCountMatrix::n)
        .def_property_readonly(
            "f", [](const fm::ForestCountMatrix& fc) { return to_py_int(fc.f); })
        .def_property_readonly("counts",
                               [](const fm::ForestCountMatrix& fc) {
                                   return counts_as_list(fc.counts);
                               })
        .def("__repr__", [](const fm::ForestCountMatrix& fc) {
            return "ForestCountMatrix(n=" + std::to_string(fc.n) +
                   ", f=" + fm::to_string(fc.f) + ")";
        });

    py::class_<fm::ProximityMatrix>(m, "ProximityMatrix")
        .def_readonly("n", &fm::ProximityMatrix::n)
        .def_property_readonly("entries",
                               [](const fm::ProximityMatrix& pm) {
                                   return entries_as_list(pm.entries);
                               })
        .def("__repr__", [](const fm::ProximityMatrix& pm) {
            return "ProximityMatrix(n=" + std::to_string(pm.n) + ")";
        });

    m.def("forest_matrix_exact", &fm::forest_matrix_exact, py::arg("graph"));
    m.def("proximity_matrix", &fm::proximity_matrix, py::arg("counts"));
    m.def("count_spanning_trees",
          [](const fm::Graph& g) { return to_py_int(fm::count_spanning_trees(g)); },
          py::arg("graph"));

    py::class_<fm::RootedForest>(m, "RootedForest")
        .def_readonly("edges", &fm::RootedForest::edges)
        .def_readonly("roots", &fm::RootedForest::roots)
        .def(py::self == py::self)
        .def("__repr__", [](const fm::RootedForest& f) {
            return "RootedForest(edges=" + std::to_string(f.edges.size()) +
                   ", roots=" + std::to_string(f.roots.size()) + ")";
        });

    m.def("enumerate_rooted_forests", &fm::enumerate_rooted_forests,
          py::arg("graph"));
    m.def(
        "count_forests_constrained",
        [](const fm::Graph& g, std::vector<int> required_roots,
           std::optional<std::pair<int, int>> same_tree_rooted_at) {
            fm::ForestConstraint c;
            c.required_roots = std::move(required_roots);
            c.same_tree_rooted_at = same_tree_rooted_at;
            return to_py_int(fm::count_forests_constrained(g, c));
        },
        py::arg("graph"), py::arg("required_roots") = std::vector<int>{},
        py::arg("same_tree_rooted_at") = std::nullopt);
    m.def("forest_matrix_by_enumeration", &fm::forest_matrix_by_enumeration,
          py::arg("graph"), py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>());

    m.def("path_counts", &fm::path_counts, py::arg("n"));
    m.def("cycle_counts", &fm::cycle_counts, py::arg("n"));
    m.def("cycle_counts_lucas", &fm::cycle_counts_lucas, py::arg("n"));

    py::class_<fm::TCaterpillarCounts>(m, "TCaterpillarCounts")
        .def_property_readonly(
            "f",
            [](const fm::TCaterpillarCounts& t) { return to_py_int(t.f); })
        .def_property_readonly(
            "f33",
            [](const fm::TCaterpillarCounts& t) { return to_py_int(t.f33); })
        .def_property_readonly(
            "fnn",
            [](const fm::TCaterpillarCounts& t) { return to_py_int(t.fnn); });
    m.def("tcaterpillar_counts", &fm::tcaterpillar_counts, py::arg("n"));
    m.def("cycle_row_numerators",
          [](int n) {
              py::list out;
              for (const fm::BigInt& v : fm::cycle_row_numerators(n)) {
                  out.append(to_py_int(v));
              }
              return out;
          },
          py::arg("n"));

    py::enum_<fm::VertexKind>(m, "VertexKind")
        .value("introvert", fm::VertexKind::introvert)
        .value("extrovert", fm::VertexKind::extrovert)
        .value("boundary", fm::VertexKind::boundary);

    py::class_<fm::VertexClassification>(m, "VertexClassification")
        .def_readonly("vertex", &fm::VertexClassification::vertex)
        .def_property_readonly("ratio",
                               [](const fm::VertexClassification& c) {
                                   return to_py_fraction(c.ratio);
                               })
        .def_readonly("kind", &fm::VertexClassification::kind);
    m.def("classify_vertices", &fm::classify_vertices, py::arg("proximity"));

    py::enum_<fm::GoldenFamily>(m, "GoldenFamily")
        .value("path_first_vertex", fm::GoldenFamily::path_first_vertex)
        .value("tcat_last_vertex", fm::GoldenFamily::tcat_last_vertex)
        .value("tcat_vertex_3", fm::GoldenFamily::tcat_vertex_3);
    m.def("golden_ratio_gap",
          [](fm::GoldenFamily family, int n) {
              return fm::golden_ratio_gap(family, n).convert_to<double>();
          },
          py::arg("family"), py::arg("n"));

    m.def("fib", [](long i) { return to_py_int(fm::fib(i)); }, py::arg("i"));
    m.def("fib_odd", [](long i) { return to_py_int(fm::fib_odd(i)); },
          py::arg("i"));
    m.def("fib_even", [](long i) { return to_py_int(fm::fib_even(i)); },
          py::arg("i"));
    m.def("lucas", [](long i) { return to_py_int(fm::lucas(i)); },
          py::arg("i"));

    py::class_<fm::TransitionMatrix>(m, "TransitionMatrix")
        .def_readonly("n", &fm::TransitionMatrix::n)
        .def_property_readonly("entries",
                               [](const fm::TransitionMatrix& t) {
                                   return entries_as_list(t.entries);
                               });
    m.def("transition_matrix", &fm::transition_matrix, py::arg("graph"));
    m.def("exact_q_matrix", &fm::exact_q_matrix, py::arg("graph"));
    m.def("expected_steps",
          [](const fm::Graph& g) { return to_py_fraction(fm::expected_steps(g)); },
          py::arg("graph"));

    py::class_<fm::WalkEstimate>(m, "WalkEstimate")
        .def_readonly("n", &fm::WalkEstimate::n)
        .def_readonly("hits", &fm::WalkEstimate::hits)
        .def_readonly("num_walks_per_start",
                      &fm::WalkEstimate::num_walks_per_start)
        .def_readonly("estimates", &fm::WalkEstimate::estimates)
        .def_readonly("total_steps", &fm::WalkEstimate::total_steps)
        .def_readonly("zero_step_walks", &fm::WalkEstimate::zero_step_walks)
        .def_readonly("aborted_walks", &fm::WalkEstimate::aborted_walks);
    m.def(
        "simulate_walks",
        [](const fm::Graph& g, long long num_walks, std::uint64_t seed,
           int workers, long long max_steps) {
            fm::WalkConfig cfg =
                fm::WalkConfig::for_graph(g, num_walks, seed, workers);
            if (max_steps > 0) cfg.max_steps = max_steps;
            return fm::simulate_walks(g, cfg);
        },
        py::arg("graph"), py::arg("num_walks"), py::arg("seed"),
        py::arg("workers") = 1, py::arg("max_steps") = 0,
        py::call_guard<py::gil_scoped_release>());

    py::class_<fm::DisseminationEstimate>(m, "DisseminationEstimate")
        .def_readonly("n", &fm::DisseminationEstimate::n)
        .def_readonly("source_counts",
                      &fm::DisseminationEstimate::source_counts)
        .def_readonly("trials", &fm::DisseminationEstimate::trials);
    m.def("sample_rooted_forest", &fm::sample_rooted_forest, py::arg("graph"),
          py::arg("seed"));
    m.def("estimate_source_probabilities", &fm::estimate_source_probabilities,
          py::arg("graph"), py::arg("trials"), py::arg("seed"),
          py::call_guard<py::gil_scoped_release>());

    m.attr("__version__") = "0.1.0";
}
