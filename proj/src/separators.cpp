#include "bicontract/separators.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "bicontract/error.hpp"
#include "bicontract/flow_network.hpp"

namespace bicontract {

namespace {

std::vector<char> membership(const Graph& g, std::span<const Vertex> set) {
    std::vector<char> in(g.num_vertices(), 0);
    for (auto v : set) in[g.index(v)] = 1;
    return in;
}

// Splits the flow leaving `source` into paths ending at `sink`. `next_arcs`
// lists, per node, the arcs carrying positive flow out of it (with
// multiplicity). Loops met along the way are cut out.
std::vector<std::vector<std::size_t>> decompose(std::vector<std::vector<std::size_t>> next_arcs,
                                                const FlowNetwork& net, std::size_t source,
                                                std::size_t sink) {
    std::vector<std::vector<std::size_t>> paths;
    std::vector<long> position(net.num_nodes(), -1);
    while (!next_arcs[source].empty()) {
        std::vector<std::size_t> nodes{source};
        position[source] = 0;
        auto node = source;
        while (node != sink) {
            if (next_arcs[node].empty()) throw std::logic_error("flow decomposition hit a dead end");
            auto arc = next_arcs[node].back();
            next_arcs[node].pop_back();
            node = net.arc_head(arc);
            if (position[node] >= 0) {
                for (auto k = static_cast<std::size_t>(position[node]) + 1; k < nodes.size(); ++k)
                    position[nodes[k]] = -1;
                nodes.resize(static_cast<std::size_t>(position[node]) + 1);
            } else {
                position[node] = static_cast<long>(nodes.size());
                nodes.push_back(node);
            }
        }
        for (auto n : nodes) position[n] = -1;
        paths.push_back(std::move(nodes));
    }
    return paths;
}

}  // namespace

FlowResult max_disjoint_paths(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                              FlowMode mode) {
    if (a.empty() || b.empty()) fail(Errc::invalid_argument, "both terminal sets must be nonempty");
    const auto n = g.num_vertices();
    const auto in_a = membership(g, a);
    const auto in_b = membership(g, b);
    FlowResult result;

    if (mode == FlowMode::vertex) {
        auto in = [](std::size_t i) { return 2 * i; };
        auto out = [](std::size_t i) { return 2 * i + 1; };
        const auto source = 2 * n;
        const auto sink = 2 * n + 1;
        FlowNetwork net(2 * n + 2);
        std::vector<std::size_t> inner(n);
        for (std::size_t i = 0; i < n; ++i) inner[i] = net.add_arc(in(i), out(i), 1);
        for (const auto& e : g.edges()) {
            auto u = g.index(e.u);
            auto v = g.index(e.v);
            net.add_arc(out(u), in(v), FlowNetwork::infinite);
            net.add_arc(out(v), in(u), FlowNetwork::infinite);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (in_a[i]) net.add_arc(source, in(i), FlowNetwork::infinite);
            if (in_b[i]) net.add_arc(out(i), sink, FlowNetwork::infinite);
        }
        result.value = static_cast<std::size_t>(net.max_flow(source, sink));

        std::vector<std::vector<std::size_t>> next_arcs(net.num_nodes());
        for (std::size_t node = 0; node < net.num_nodes(); ++node)
            for (auto arc : net.arcs_from(node))
                if (arc % 2 == 0)
                    for (auto f = net.flow(arc); f > 0; --f) next_arcs[node].push_back(arc);
        for (const auto& nodes : decompose(std::move(next_arcs), net, source, sink)) {
            VertexSet path;
            for (auto node : nodes)
                if (node < 2 * n && node % 2 == 0) path.push_back(g.vertex_at(node / 2));
            result.paths.push_back(std::move(path));
        }
        auto reach = net.residual_reachable_from(source);
        for (std::size_t i = 0; i < n; ++i)
            if (reach[in(i)] && !reach[out(i)]) result.cut_vertices.push_back(g.vertex_at(i));
        return result;
    }

    for (std::size_t i = 0; i < n; ++i)
        if (in_a[i] && in_b[i])
            fail(Errc::invalid_argument, "edge-mode terminal sets must be disjoint");
    const auto source = n;
    const auto sink = n + 1;
    FlowNetwork net(n + 2);
    std::vector<std::size_t> edge_arc;
    for (const auto& e : g.edges()) edge_arc.push_back(net.add_edge(g.index(e.u), g.index(e.v), 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (in_a[i]) net.add_arc(source, i, FlowNetwork::infinite);
        if (in_b[i]) net.add_arc(i, sink, FlowNetwork::infinite);
    }
    result.value = static_cast<std::size_t>(net.max_flow(source, sink));

    std::vector<std::vector<std::size_t>> next_arcs(net.num_nodes());
    for (std::size_t node = 0; node < net.num_nodes(); ++node)
        for (auto arc : net.arcs_from(node))
            for (auto f = net.flow(arc); f > 0; --f) next_arcs[node].push_back(arc);
    // An undirected edge shows up as two arcs with opposite flow; only the
    // positive direction was collected above.
    for (const auto& nodes : decompose(std::move(next_arcs), net, source, sink)) {
        VertexSet path;
        for (auto node : nodes)
            if (node < n) path.push_back(g.vertex_at(node));
        result.paths.push_back(std::move(path));
    }
    auto reach = net.residual_reachable_from(source);
    for (const auto& e : g.edges())
        if (reach[g.index(e.u)] != reach[g.index(e.v)]) result.cut_edges.push_back(e);
    return result;
}

namespace {

struct FurthestCut {
    std::int64_t value = 0;
    std::vector<char> side;  // component of x among vertices that cannot reach y
};

// Minimum edge cut between the source vertices and y in g minus `removed`,
// and the x side of the furthest such cut.
FurthestCut furthest_min_cut(const Graph& g, const std::vector<char>& source_set,
                             const std::vector<char>& removed, std::size_t x, std::size_t y) {
    const auto n = g.num_vertices();
    const auto source = n;
    FlowNetwork net(n + 1);
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (!removed[e]) net.add_edge(g.index(edges[e].u), g.index(edges[e].v), 1);
    for (std::size_t i = 0; i < n; ++i)
        if (source_set[i]) net.add_arc(source, i, FlowNetwork::infinite);

    FurthestCut out;
    out.value = net.max_flow(source, y);
    auto reaching = net.residual_reaching(y);

    out.side.assign(n, 0);
    std::vector<std::size_t> stack{x};
    out.side[x] = 1;
    // adjacency restricted to kept edges
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (removed[e]) continue;
        auto a = g.index(edges[e].u);
        auto b = g.index(edges[e].v);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    while (!stack.empty()) {
        auto i = stack.back();
        stack.pop_back();
        for (auto j : adj[i])
            if (!out.side[j] && !reaching[j]) {
                out.side[j] = 1;
                stack.push_back(j);
            }
    }
    return out;
}

VertexSet members_of(const Graph& g, const std::vector<char>& mask) {
    VertexSet out;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) out.push_back(g.vertex_at(i));
    return out;
}

}  // namespace

bool is_important_set(const Graph& g, Vertex x, Vertex y, std::span<const Vertex> members) {
    if (x == y) return false;
    auto in = membership(g, members);
    const auto ix = g.index(x);
    const auto iy = g.index(y);
    if (!in[ix] || in[iy]) return false;
    if (!induces_connected(g, members)) return false;
    std::vector<char> none(g.num_edges(), 0);
    auto cut = furthest_min_cut(g, in, none, ix, iy);
    if (static_cast<std::size_t>(cut.value) != g.boundary_size(members)) return false;
    return cut.side == in;
}

std::vector<ImportantSet> enumerate_important_sets(const Graph& g, Vertex x, Vertex y, std::size_t p,
                                                   ImportantSetStats* stats, std::uint64_t work_limit) {
    if (x == y) fail(Errc::invalid_argument, "x and y must differ");
    const auto ix = g.index(x);
    const auto iy = g.index(y);
    const auto& edges = g.edges();
    ImportantSetStats local;
    std::set<VertexSet> leaves;
    std::vector<char> removed(edges.size(), 0);

    std::function<void(const std::vector<char>&, std::int64_t)> branch =
        [&](const std::vector<char>& source_set, std::int64_t budget) {
            if (++local.branch_nodes > work_limit)
                fail(Errc::budget_exceeded, "important-set enumeration exceeded its branch limit");
            auto cut = furthest_min_cut(g, source_set, removed, ix, iy);
            if (cut.value > budget) return;
            if (cut.value == 0) {
                ++local.leaves;
                leaves.insert(members_of(g, cut.side));
                return;
            }
            std::size_t pick = edges.size();
            for (std::size_t e = 0; e < edges.size() && pick == edges.size(); ++e)
                if (!removed[e] && cut.side[g.index(edges[e].u)] != cut.side[g.index(edges[e].v)]) pick = e;
            if (pick == edges.size()) throw std::logic_error("positive cut without a boundary edge");
            const auto a = g.index(edges[pick].u);
            const auto far = cut.side[a] ? g.index(edges[pick].v) : a;

            removed[pick] = 1;
            branch(cut.side, budget - 1);
            removed[pick] = 0;

            if (far != iy) {
                auto grown = cut.side;
                grown[far] = 1;
                branch(grown, budget);
            }
        };

    std::vector<char> start(g.num_vertices(), 0);
    start[ix] = 1;
    branch(start, static_cast<std::int64_t>(p));

    std::vector<ImportantSet> out;
    for (const auto& members : leaves) {
        auto d = g.boundary_size(members);
        if (d > p || !is_important_set(g, x, y, members)) {
            ++local.rejected;
            continue;
        }
        out.push_back({members, d, x, y});
    }
    if (stats) *stats = local;
    return out;
}

ZComputation compute_z(const Graph& g, std::span<const Vertex> y_set, std::span<const Vertex> t1,
                       std::span<const Vertex> t2, std::size_t k, std::optional<std::size_t> cut_budget,
                       std::uint64_t work_limit) {
    for (auto v : t1)
        if (std::find(t2.begin(), t2.end(), v) != t2.end())
            fail(Errc::invalid_terminals, "vertex " + std::to_string(v) + " is in both T1 and T2");
    std::set<Vertex> terminals;
    for (auto v : t1) terminals.insert(g.vertices()[g.index(v)]);
    for (auto v : t2) terminals.insert(g.vertices()[g.index(v)]);

    ZComputation out;
    out.apex = g.max_vertex() + 1;
    out.cut_budget = cut_budget.value_or(default_cut_budget(k));

    std::vector<Vertex> vertices(g.vertices().begin(), g.vertices().end());
    vertices.push_back(out.apex);
    std::vector<Edge> edges = g.edges();
    std::set<Vertex> ys;
    for (auto v : y_set) ys.insert(g.vertices()[g.index(v)]);
    for (auto v : ys) edges.push_back(Edge::make(v, out.apex));
    out.augmented = Graph(std::move(vertices), std::move(edges));

    std::set<Vertex> z;
    for (auto x : terminals) {
        auto sets = enumerate_important_sets(out.augmented, x, out.apex, out.cut_budget, nullptr, work_limit);
        out.sets_enumerated += sets.size();
        out.max_sets_per_terminal = std::max(out.max_sets_per_terminal, sets.size());
        for (const auto& s : sets) z.insert(s.members.begin(), s.members.end());
    }
    out.z.assign(z.begin(), z.end());
    out.augmented_boundary = out.augmented.boundary_size(out.z);
    return out;
}

}  // namespace bicontract
