#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bicontract/coloring.hpp"
#include "bicontract/error.hpp"
#include "bicontract/generators.hpp"
#include "bicontract/graph.hpp"
#include "bicontract/graph_io.hpp"
#include "bicontract/oracle.hpp"
#include "bicontract/pipeline.hpp"
#include "bicontract/separators.hpp"
#include "bicontract/treewidth.hpp"

namespace py = pybind11;
using namespace bicontract;

namespace {

using PyEdge = std::pair<Vertex, Vertex>;

std::vector<Edge> to_edges(const std::vector<PyEdge>& pairs) {
    std::vector<Edge> out;
    out.reserve(pairs.size());
    for (auto [u, v] : pairs) out.push_back(Edge::make(u, v));
    return out;
}

std::vector<PyEdge> from_edges(const std::vector<Edge>& edges) {
    std::vector<PyEdge> out;
    out.reserve(edges.size());
    for (const auto& e : edges) out.emplace_back(e.u, e.v);
    return out;
}

EliminationStrategy parse_strategy(const std::string& name) {
    if (name == "min-degree") return EliminationStrategy::min_degree;
    if (name == "min-fill") return EliminationStrategy::min_fill;
    fail(Errc::invalid_argument, "unknown strategy '" + name + "'");
}

SolverConfig make_config(std::optional<std::int64_t> width_bound, std::optional<std::int64_t> wellconnected_size,
                         std::optional<std::size_t> cut_budget, const std::string& policy, unsigned threads,
                         std::uint64_t work_limit) {
    SolverConfig cfg;
    cfg.width_bound = width_bound;
    cfg.wellconnected_size = wellconnected_size;
    cfg.cut_budget = cut_budget;
    cfg.policy = parse_policy(policy);
    cfg.threads = threads;
    cfg.work_limit = work_limit;
    return cfg;
}

std::optional<std::map<Vertex, int>> to_map(const std::optional<TwoColoring>& phi) {
    if (!phi) return std::nullopt;
    return phi->to_map();
}

}  // namespace

PYBIND11_MODULE(_bicontract, m) {
    m.doc() = "Bipartite contraction and cheap 2-coloring solvers";

    static py::exception<Error> error_type(m, "BicontractError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object instance = py::handle(error_type.ptr())(e.what());
            instance.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error_type.ptr(), instance.ptr());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::vector<Vertex> vertices, const std::vector<PyEdge>& edges) {
                 return Graph(std::move(vertices), to_edges(edges));
             }),
             py::arg("vertices"), py::arg("edges"))
        .def_static(
            "with_vertices", [](int n, const std::vector<PyEdge>& edges) { return Graph::with_vertices(n, to_edges(edges)); },
            py::arg("n"), py::arg("edges"), "Graph on vertices 1..n.")
        .def_property_readonly("vertices",
                               [](const Graph& g) { return std::vector<Vertex>(g.vertices().begin(), g.vertices().end()); })
        .def_property_readonly("edges", [](const Graph& g) { return from_edges(g.edges()); })
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def("has_edge", [](const Graph& g, Vertex u, Vertex v) { return g.has_edge(u, v); })
        .def("is_bipartite", [](const Graph& g) { return is_bipartite(g); })
        .def("components", [](const Graph& g) { return connected_components(g); })
        .def("contract", [](const Graph& g, const std::vector<PyEdge>& s) { return contract_edges(g, to_edges(s)).graph; })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) + ")";
        });

    m.def("parse_graph", [](const std::string& text) { return parse_graph(text); }, py::arg("text"));
    m.def(
        "parse_graph_file",
        [](const std::string& text) {
            auto file = parse_graph_file(text);
            return std::make_tuple(file.graph, file.t1, file.t2);
        },
        py::arg("text"), "Returns (graph, t1, t2).");
    m.def(
        "read_graph",
        [](const std::string& path) {
            auto file = read_graph_file(path);
            return std::make_tuple(file.graph, file.t1, file.t2);
        },
        py::arg("path"), "Returns (graph, t1, t2).");
    m.def(
        "serialize_graph",
        [](const Graph& g, const VertexSet& t1, const VertexSet& t2) { return serialize_graph(g, t1, t2); },
        py::arg("graph"), py::arg("t1") = VertexSet{}, py::arg("t2") = VertexSet{});

    m.def(
        "solve",
        [](const Graph& g, std::size_t k, std::optional<std::int64_t> width_bound,
           std::optional<std::int64_t> wellconnected_size, std::optional<std::size_t> cut_budget,
           const std::string& policy, unsigned threads, std::uint64_t work_limit) -> std::optional<std::vector<PyEdge>> {
            auto cfg = make_config(width_bound, wellconnected_size, cut_budget, policy, threads, work_limit);
            std::optional<ContractionSet> s;
            {
                py::gil_scoped_release release;
                s = solve_bipartite_contraction(g, k, cfg);
            }
            if (!s) return std::nullopt;
            return from_edges(s->edges());
        },
        py::arg("graph"), py::arg("k"), py::kw_only(), py::arg("width_bound") = py::none(),
        py::arg("wellconnected_size") = py::none(), py::arg("cut_budget") = py::none(),
        py::arg("policy") = "verified-against-oracle", py::arg("threads") = 1u,
        py::arg("work_limit") = default_work_limit,
        "Edge set S with |S| <= k and G/S bipartite, or None.");
    m.def(
        "solve_cheap_coloring",
        [](const Graph& g, std::size_t k) {
            py::gil_scoped_release release;
            return to_map(solve_cheap_coloring(g, k));
        },
        py::arg("graph"), py::arg("k"), "Coloring {vertex: 1 or 2} of cost <= k, or None.");
    m.def(
        "solve_extension",
        [](const Graph& g, std::size_t k, const VertexSet& t1, const VertexSet& t2,
           std::optional<std::int64_t> width_bound, std::optional<std::int64_t> wellconnected_size,
           std::optional<std::size_t> cut_budget, const std::string& policy) {
            auto cfg = make_config(width_bound, wellconnected_size, cut_budget, policy, 1, default_work_limit);
            py::gil_scoped_release release;
            return to_map(solve_extension(ExtensionInstance{g, k, t1, t2}, cfg));
        },
        py::arg("graph"), py::arg("k"), py::arg("t1") = VertexSet{}, py::arg("t2") = VertexSet{}, py::kw_only(),
        py::arg("width_bound") = py::none(), py::arg("wellconnected_size") = py::none(),
        py::arg("cut_budget") = py::none(), py::arg("policy") = "verified-against-oracle",
        "Coloring of a bipartite graph extending (t1, t2) with cost <= k, or None.");

    m.def(
        "check_witness",
        [](const Graph& g, const std::vector<PyEdge>& s, std::size_t k) {
            auto edges = to_edges(s);
            auto r = check_witness(g, edges, k);
            return std::make_pair(r.accepted, r.reason);
        },
        py::arg("graph"), py::arg("edges"), py::arg("k"), "Returns (accepted, reason).");
    m.def(
        "coloring_cost",
        [](const Graph& g, const std::map<Vertex, int>& colors) {
            return coloring_cost(g, TwoColoring::from_map(colors));
        },
        py::arg("graph"), py::arg("coloring"));

    m.def(
        "brute_force_contraction",
        [](const Graph& g, std::size_t k) -> std::optional<std::vector<PyEdge>> {
            auto s = brute_force_contraction(g, k);
            if (!s) return std::nullopt;
            return from_edges(s->edges());
        },
        py::arg("graph"), py::arg("k"));
    m.def(
        "brute_force_coloring",
        [](const Graph& g, const VertexSet& t1, const VertexSet& t2) {
            auto r = brute_force_coloring(g, t1, t2);
            return std::make_pair(r.cost, r.coloring.to_map());
        },
        py::arg("graph"), py::arg("t1") = VertexSet{}, py::arg("t2") = VertexSet{}, "Returns (cost, coloring).");
    m.def(
        "reduce_edge_bipartization",
        [](const Graph& g, std::size_t k) {
            auto r = reduce_edge_bipartization(g, k);
            return std::make_pair(r.graph, r.k);
        },
        py::arg("graph"), py::arg("k"));

    m.def(
        "tree_decomposition",
        [](const Graph& g, const std::string& strategy) {
            auto td = heuristic_decomposition(g, parse_strategy(strategy));
            return std::make_pair(td.bags, td.tree_edges);
        },
        py::arg("graph"), py::arg("strategy") = "min-fill", "Returns (bags, tree_edges).");
    m.def(
        "treewidth_upper_bound",
        [](const Graph& g, const std::string& strategy) {
            return heuristic_decomposition(g, parse_strategy(strategy)).width();
        },
        py::arg("graph"), py::arg("strategy") = "min-fill");
    m.def(
        "important_sets",
        [](const Graph& g, Vertex x, Vertex y, std::size_t p) {
            std::vector<VertexSet> out;
            for (auto& s : enumerate_important_sets(g, x, y, p)) out.push_back(std::move(s.members));
            return out;
        },
        py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("p"));

    m.def("gen_cycle", &gen_cycle, py::arg("n"));
    m.def("gen_path", &gen_path, py::arg("n"));
    m.def("gen_complete", &gen_complete, py::arg("n"));
    m.def("gen_complete_bipartite", &gen_complete_bipartite, py::arg("a"), py::arg("b"));
    m.def("gen_star", &gen_star, py::arg("leaves"));
    m.def("gen_grid", &gen_grid, py::arg("rows"), py::arg("cols"));
    m.def("gen_petersen", &gen_petersen);
    m.def("gen_random", &gen_random, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("gen_random_bipartite", &gen_random_bipartite, py::arg("n"), py::arg("p"), py::arg("seed"));
}
