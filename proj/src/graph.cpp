#include "bicontract/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "bicontract/error.hpp"

namespace bicontract {

std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::invalid_edge: return "invalid-edge";
        case Errc::invalid_vertex: return "invalid-vertex";
        case Errc::invalid_coloring: return "invalid-coloring";
        case Errc::invalid_terminals: return "invalid-terminals";
        case Errc::invalid_argument: return "invalid-argument";
        case Errc::invalid_decomposition: return "invalid-decomposition";
        case Errc::precondition_violated: return "precondition-violated";
        case Errc::parse_error: return "parse-error";
        case Errc::budget_exceeded: return "budget-exceeded";
        case Errc::dichotomy_failure: return "dichotomy-failure";
        case Errc::candidate_invalid: return "candidate-invalid";
        case Errc::not_found: return "not-found";
        case Errc::unsound_deletion: return "unsound-deletion";
    }
    return "unknown";
}

namespace {

std::string edge_name(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace

Graph::Graph(std::vector<Vertex> vertices, std::vector<Edge> edges) : ids_(std::move(vertices)) {
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
        fail(Errc::invalid_vertex, "duplicate vertex id");

    for (auto& e : edges) {
        if (e.u == e.v) fail(Errc::invalid_edge, "loop on vertex " + std::to_string(e.u));
        e = Edge::make(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        fail(Errc::invalid_edge, "duplicate edge " + edge_name(*dup));

    adj_.assign(ids_.size(), {});
    for (const auto& e : edges) {
        auto iu = index_of(e.u);
        auto iv = index_of(e.v);
        if (!iu || !iv) fail(Errc::invalid_edge, "edge " + edge_name(e) + " has an unknown endpoint");
        adj_[*iu].push_back(static_cast<std::uint32_t>(*iv));
        adj_[*iv].push_back(static_cast<std::uint32_t>(*iu));
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
    edges_ = std::move(edges);
}

Graph Graph::with_vertices(int n, std::vector<Edge> edges) {
    std::vector<Vertex> ids(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(ids.begin(), ids.end(), 1);
    return Graph(std::move(ids), std::move(edges));
}

std::optional<std::size_t> Graph::index_of(Vertex v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t Graph::index(Vertex v) const {
    auto i = index_of(v);
    if (!i) fail(Errc::invalid_vertex, "vertex " + std::to_string(v) + " is not in the graph");
    return *i;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    auto ia = index_of(a);
    auto ib = index_of(b);
    if (!ia || !ib) return false;
    const auto& list = adj_[*ia];
    return std::binary_search(list.begin(), list.end(), static_cast<std::uint32_t>(*ib));
}

VertexSet Graph::neighbors(Vertex v) const {
    VertexSet out;
    for (auto j : adj_[index(v)]) out.push_back(ids_[j]);
    return out;
}

std::size_t Graph::boundary_size(std::span<const Vertex> set) const {
    std::vector<char> in(ids_.size(), 0);
    for (auto v : set) in[index(v)] = 1;
    std::size_t count = 0;
    for (const auto& e : edges_)
        if (in[index(e.u)] != in[index(e.v)]) ++count;
    return count;
}

EdgeSet Graph::boundary(std::span<const Vertex> set) const {
    std::vector<char> in(ids_.size(), 0);
    for (auto v : set) in[index(v)] = 1;
    EdgeSet out;
    for (const auto& e : edges_)
        if (in[index(e.u)] != in[index(e.v)]) out.push_back(e);
    return out;
}

Graph Graph::induced_subgraph(std::span<const Vertex> keep) const {
    std::vector<char> in(ids_.size(), 0);
    std::vector<Vertex> vs;
    for (auto v : keep) {
        auto i = index(v);
        if (!in[i]) vs.push_back(v);
        in[i] = 1;
    }
    std::vector<Edge> es;
    for (const auto& e : edges_)
        if (in[index(e.u)] && in[index(e.v)]) es.push_back(e);
    Graph out(std::move(vs), std::move(es));
    for (const auto& [v, text] : labels_)
        if (in[index(v)]) out.labels_.emplace(v, text);
    return out;
}

Graph Graph::with_edges(std::vector<Edge> edges) const {
    Graph out(ids_, std::move(edges));
    out.labels_ = labels_;
    return out;
}

std::optional<std::string> Graph::label(Vertex v) const {
    auto it = labels_.find(v);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

Graph Graph::with_label(Vertex v, std::string text) const {
    index(v);
    Graph out = *this;
    out.labels_[v] = std::move(text);
    return out;
}

Vertex ContractionTrace::image(Vertex original) const {
    for (const auto& [survivor, members] : origin)
        if (std::binary_search(members.begin(), members.end(), original)) return survivor;
    fail(Errc::invalid_vertex, "vertex " + std::to_string(original) + " is not covered by the trace");
}

std::map<Vertex, Vertex> ContractionTrace::image_map() const {
    std::map<Vertex, Vertex> out;
    for (const auto& [survivor, members] : origin)
        for (auto v : members) out.emplace(v, survivor);
    return out;
}

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
};

}  // namespace

ContractionResult contract_edges(const Graph& g, std::span<const Edge> s) {
    const auto n = g.num_vertices();
    // Roots are always the smallest index in their set, and index order is id
    // order, so the survivor is the smallest id.
    DisjointSets sets(n);
    ContractionResult result;
    for (const auto& raw : s) {
        Edge e = Edge::make(raw.u, raw.v);
        if (!g.has_edge(e))
            fail(Errc::invalid_edge, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                         " is not in the graph");
        auto a = sets.find(g.index(e.u));
        auto b = sets.find(g.index(e.v));
        if (a == b) continue;
        if (b < a) std::swap(a, b);
        sets.parent[b] = a;
        result.trace.merges.emplace_back(g.vertex_at(a), g.vertex_at(b));
    }

    std::vector<Vertex> survivors;
    for (std::size_t i = 0; i < n; ++i) {
        auto root = sets.find(i);
        result.trace.origin[g.vertex_at(root)].push_back(g.vertex_at(i));
        if (root == i) survivors.push_back(g.vertex_at(i));
    }

    std::vector<Edge> quotient;
    for (const auto& e : g.edges()) {
        auto a = sets.find(g.index(e.u));
        auto b = sets.find(g.index(e.v));
        if (a != b) quotient.push_back(Edge::make(g.vertex_at(a), g.vertex_at(b)));
    }
    std::sort(quotient.begin(), quotient.end());
    quotient.erase(std::unique(quotient.begin(), quotient.end()), quotient.end());

    Graph out(std::move(survivors), std::move(quotient));
    for (const auto& [v, text] : g.labels())
        if (result.trace.origin.count(v)) out = out.with_label(v, text);
    result.graph = std::move(out);
    return result;
}

Graph delete_edge(const Graph& g, Edge e) {
    e = Edge::make(e.u, e.v);
    if (!g.has_edge(e))
        fail(Errc::invalid_edge,
             "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in the graph");
    std::vector<Edge> rest;
    rest.reserve(g.num_edges() - 1);
    for (const auto& f : g.edges())
        if (f != e) rest.push_back(f);
    return g.with_edges(std::move(rest));
}

std::optional<ProperColoring> proper_two_coloring(const Graph& g) {
    const auto n = g.num_vertices();
    ProperColoring out{std::vector<std::uint8_t>(n, 0)};
    std::queue<std::size_t> queue;
    for (std::size_t root = 0; root < n; ++root) {
        if (out.colors[root]) continue;
        out.colors[root] = 1;
        queue.push(root);
        while (!queue.empty()) {
            auto i = queue.front();
            queue.pop();
            for (auto j : g.adjacent(i)) {
                if (!out.colors[j]) {
                    out.colors[j] = static_cast<std::uint8_t>(3 - out.colors[i]);
                    queue.push(j);
                } else if (out.colors[j] == out.colors[i]) {
                    return std::nullopt;
                }
            }
        }
    }
    return out;
}

bool is_bipartite(const Graph& g) { return proper_two_coloring(g).has_value(); }

std::vector<VertexSet> connected_components(const Graph& g) {
    const auto n = g.num_vertices();
    std::vector<char> seen(n, 0);
    std::vector<VertexSet> out;
    std::vector<std::size_t> stack;
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        VertexSet part;
        seen[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            auto i = stack.back();
            stack.pop_back();
            part.push_back(g.vertex_at(i));
            for (auto j : g.adjacent(i))
                if (!seen[j]) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
        }
        std::sort(part.begin(), part.end());
        out.push_back(std::move(part));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool induces_connected(const Graph& g, std::span<const Vertex> set) {
    if (set.empty()) return true;
    std::vector<char> in(g.num_vertices(), 0);
    for (auto v : set) in[g.index(v)] = 1;
    std::vector<char> seen(g.num_vertices(), 0);
    std::vector<std::size_t> stack{g.index(set.front())};
    seen[stack.back()] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
        auto i = stack.back();
        stack.pop_back();
        ++reached;
        for (auto j : g.adjacent(i))
            if (in[j] && !seen[j]) {
                seen[j] = 1;
                stack.push_back(j);
            }
    }
    std::size_t distinct = 0;
    for (auto c : in) distinct += c;
    return reached == distinct;
}

std::vector<std::pair<int, int>> canonical_form(const Graph& g) {
    const auto n = g.num_vertices();
    std::vector<int> label(n, -1);
    int next = 0;
    std::queue<std::size_t> queue;
    for (std::size_t root = 0; root < n; ++root) {
        if (label[root] >= 0) continue;
        label[root] = next++;
        queue.push(root);
        while (!queue.empty()) {
            auto i = queue.front();
            queue.pop();
            for (auto j : g.adjacent(i))
                if (label[j] < 0) {
                    label[j] = next++;
                    queue.push(j);
                }
        }
    }
    std::vector<std::pair<int, int>> out;
    for (const auto& e : g.edges()) {
        int a = label[g.index(e.u)];
        int b = label[g.index(e.v)];
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bicontract
