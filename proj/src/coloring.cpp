#include "bicontract/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "bicontract/error.hpp"

namespace bicontract {

TwoColoring::TwoColoring(std::vector<Vertex> vertices, std::vector<std::uint8_t> colors) {
    if (vertices.size() != colors.size())
        fail(Errc::invalid_coloring, "vertex and color lists differ in length");
    std::vector<std::size_t> order(vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vertices[a] < vertices[b]; });
    for (auto i : order) {
        if (!vertices_.empty() && vertices_.back() == vertices[i])
            fail(Errc::invalid_coloring, "vertex " + std::to_string(vertices[i]) + " colored twice");
        if (colors[i] != 1 && colors[i] != 2)
            fail(Errc::invalid_coloring, "color of vertex " + std::to_string(vertices[i]) + " is not 1 or 2");
        vertices_.push_back(vertices[i]);
        colors_.push_back(colors[i]);
    }
}

TwoColoring TwoColoring::uniform(const Graph& g, int color) {
    return TwoColoring({g.vertices().begin(), g.vertices().end()},
                       std::vector<std::uint8_t>(g.num_vertices(), static_cast<std::uint8_t>(color)));
}

TwoColoring TwoColoring::from_map(const std::map<Vertex, int>& colors) {
    std::vector<Vertex> vs;
    std::vector<std::uint8_t> cs;
    for (const auto& [v, c] : colors) {
        if (c != 1 && c != 2)
            fail(Errc::invalid_coloring, "color of vertex " + std::to_string(v) + " is not 1 or 2");
        vs.push_back(v);
        cs.push_back(static_cast<std::uint8_t>(c));
    }
    return TwoColoring(std::move(vs), std::move(cs));
}

TwoColoring TwoColoring::from_proper(const Graph& g, const ProperColoring& proper) {
    return TwoColoring({g.vertices().begin(), g.vertices().end()}, proper.colors);
}

int TwoColoring::color(Vertex v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        fail(Errc::invalid_coloring, "vertex " + std::to_string(v) + " is not colored");
    return colors_[static_cast<std::size_t>(it - vertices_.begin())];
}

TwoColoring TwoColoring::with_color(Vertex v, int color) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        fail(Errc::invalid_coloring, "vertex " + std::to_string(v) + " is not colored");
    if (color != 1 && color != 2) fail(Errc::invalid_coloring, "color must be 1 or 2");
    TwoColoring out = *this;
    out.colors_[static_cast<std::size_t>(it - vertices_.begin())] = static_cast<std::uint8_t>(color);
    return out;
}

bool TwoColoring::covers_exactly(const Graph& g) const {
    return std::equal(vertices_.begin(), vertices_.end(), g.vertices().begin(), g.vertices().end());
}

void TwoColoring::require_host(const Graph& g) const {
    if (!covers_exactly(g))
        fail(Errc::invalid_coloring, "coloring does not match the graph's vertex set (" +
                                         std::to_string(vertices_.size()) + " colored, " +
                                         std::to_string(g.num_vertices()) + " vertices)");
}

bool TwoColoring::extends(std::span<const Vertex> t1, std::span<const Vertex> t2) const {
    return std::all_of(t1.begin(), t1.end(), [&](Vertex v) { return color(v) == 1; }) &&
           std::all_of(t2.begin(), t2.end(), [&](Vertex v) { return color(v) == 2; });
}

std::map<Vertex, int> TwoColoring::to_map() const {
    std::map<Vertex, int> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) out.emplace(vertices_[i], colors_[i]);
    return out;
}

namespace {

// Components of (V, edges selected by keep), as dense-index labels.
template <typename Keep>
std::vector<std::size_t> component_labels(const Graph& g, Keep&& keep, std::size_t& count) {
    const auto n = g.num_vertices();
    std::vector<std::size_t> label(n, n);
    std::vector<std::size_t> stack;
    count = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (label[root] != n) continue;
        label[root] = count;
        stack.push_back(root);
        while (!stack.empty()) {
            auto i = stack.back();
            stack.pop_back();
            for (auto j : g.adjacent(i))
                if (label[j] == n && keep(i, j)) {
                    label[j] = count;
                    stack.push_back(j);
                }
        }
        ++count;
    }
    return label;
}

std::vector<VertexSet> group(const Graph& g, const std::vector<std::size_t>& label, std::size_t count) {
    std::vector<VertexSet> out(count);
    for (std::size_t i = 0; i < label.size(); ++i) out[label[i]].push_back(g.vertex_at(i));
    return out;
}

}  // namespace

ColoringAnalysis analyze(const Graph& g, const TwoColoring& phi) {
    phi.require_host(g);
    const auto colors = phi.colors();
    ColoringAnalysis out;
    for (const auto& e : g.edges())
        if (colors[g.index(e.u)] == colors[g.index(e.v)]) out.bad_edges.push_back(e);

    std::size_t mono = 0;
    auto mono_label = component_labels(g, [&](auto i, auto j) { return colors[i] == colors[j]; }, mono);
    out.monochromatic_components = group(g, mono_label, mono);

    std::size_t good = 0;
    auto good_label = component_labels(g, [&](auto i, auto j) { return colors[i] != colors[j]; }, good);
    out.good_components = group(g, good_label, good);

    for (const auto& part : out.monochromatic_components) out.cost += part.size() - 1;
    return out;
}

std::size_t coloring_cost(const Graph& g, const TwoColoring& phi) {
    phi.require_host(g);
    const auto colors = phi.colors();
    std::size_t mono = 0;
    component_labels(g, [&](auto i, auto j) { return colors[i] == colors[j]; }, mono);
    return g.num_vertices() - mono;
}

ContractionSet ContractionSet::certify(const Graph& g, EdgeSet edges) {
    for (auto& e : edges) e = Edge::make(e.u, e.v);
    std::sort(edges.begin(), edges.end());
    auto contracted = contract_edges(g, edges);
    if (!is_bipartite(contracted.graph))
        fail(Errc::precondition_violated, "contracting the edge set does not yield a bipartite graph");
    return ContractionSet(std::move(edges));
}

ContractionSet coloring_to_contraction_set(const Graph& g, const TwoColoring& phi) {
    phi.require_host(g);
    const auto colors = phi.colors();
    const auto n = g.num_vertices();
    // BFS spanning forest of the same-color subgraph.
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> queue;
    EdgeSet tree;
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto i = queue[head];
            for (auto j : g.adjacent(i))
                if (!seen[j] && colors[i] == colors[j]) {
                    seen[j] = 1;
                    queue.push_back(j);
                    tree.push_back(Edge::make(g.vertex_at(i), g.vertex_at(j)));
                }
        }
    }
    return ContractionSet::certify(g, std::move(tree));
}

TwoColoring contraction_set_to_coloring(const Graph& g, std::span<const Edge> s) {
    auto contracted = contract_edges(g, s);
    auto proper = proper_two_coloring(contracted.graph);
    if (!proper)
        fail(Errc::precondition_violated, "contracting the edge set does not yield a bipartite graph");
    const auto& q = contracted.graph;
    std::vector<Vertex> vs;
    std::vector<std::uint8_t> cs;
    for (const auto& [survivor, members] : contracted.trace.origin) {
        auto c = proper->colors[q.index(survivor)];
        for (auto v : members) {
            vs.push_back(v);
            cs.push_back(c);
        }
    }
    return TwoColoring(std::move(vs), std::move(cs));
}

WitnessCheck check_witness(const Graph& g, std::span<const Edge> s, std::size_t k) {
    if (s.size() > k)
        return {false, "witness has " + std::to_string(s.size()) + " edges, budget is " + std::to_string(k)};
    for (const auto& e : s)
        if (!g.has_edge(e))
            return {false, "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " is not in the graph"};
    if (!is_bipartite(contract_edges(g, s).graph)) return {false, "contracted graph is not bipartite"};
    return {true, {}};
}

std::string serialize_coloring(const TwoColoring& phi) {
    std::ostringstream out;
    for (std::size_t i = 0; i < phi.size(); ++i)
        out << phi.vertices()[i] << ' ' << static_cast<int>(phi.colors()[i]) << '\n';
    return out.str();
}

TwoColoring parse_coloring(std::string_view text) {
    std::map<Vertex, int> colors;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream words(line);
        std::string first;
        if (!(words >> first) || first == "c") continue;
        long long v = 0;
        int c = 0;
        std::string rest;
        auto [ptr, ec] = std::from_chars(first.data(), first.data() + first.size(), v);
        if (ec != std::errc{} || ptr != first.data() + first.size() || !(words >> c) || (words >> rest))
            fail(Errc::parse_error, "line " + std::to_string(line_no) + ": expected '<vertex> <color>'");
        if (c != 1 && c != 2)
            fail(Errc::parse_error, "line " + std::to_string(line_no) + ": color must be 1 or 2");
        if (!colors.emplace(static_cast<Vertex>(v), c).second)
            fail(Errc::parse_error, "line " + std::to_string(line_no) + ": vertex colored twice");
    }
    return TwoColoring::from_map(colors);
}

}  // namespace bicontract
