#include "bicontract/treewidth.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "bicontract/error.hpp"

namespace bicontract {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

namespace {

DecompositionReport violation(DecompositionProperty property, std::string message) {
    DecompositionReport r;
    r.ok = false;
    r.violated = property;
    r.message = std::move(message);
    return r;
}

bool bag_has(const VertexSet& bag, Vertex v) { return std::binary_search(bag.begin(), bag.end(), v); }

}  // namespace

DecompositionReport validate_decomposition(const Graph& g, const TreeDecomposition& td) {
    const auto nb = td.bags.size();
    for (std::size_t b = 0; b < nb; ++b)
        if (!std::is_sorted(td.bags[b].begin(), td.bags[b].end()) ||
            std::adjacent_find(td.bags[b].begin(), td.bags[b].end()) != td.bags[b].end())
            return violation(DecompositionProperty::tree_shape, "bag " + std::to_string(b) + " is not a sorted set");

    // tree shape
    if (nb > 0 && td.tree_edges.size() != nb - 1)
        return violation(DecompositionProperty::tree_shape, "bag graph has " + std::to_string(td.tree_edges.size()) +
                                                                " edges for " + std::to_string(nb) + " bags");
    if (nb == 0 && !td.tree_edges.empty())
        return violation(DecompositionProperty::tree_shape, "tree edges without bags");
    std::vector<std::vector<std::size_t>> tree(nb);
    for (auto [a, b] : td.tree_edges) {
        if (a >= nb || b >= nb || a == b)
            return violation(DecompositionProperty::tree_shape, "tree edge refers to an invalid bag");
        tree[a].push_back(b);
        tree[b].push_back(a);
    }
    if (nb > 0) {
        std::vector<char> seen(nb, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t count = 0;
        while (!stack.empty()) {
            auto t = stack.back();
            stack.pop_back();
            ++count;
            for (auto s : tree[t])
                if (!seen[s]) {
                    seen[s] = 1;
                    stack.push_back(s);
                }
        }
        if (count != nb) return violation(DecompositionProperty::tree_shape, "bag graph is disconnected");
    }

    // vertex coverage
    std::vector<std::vector<std::size_t>> holders(g.num_vertices());
    for (std::size_t b = 0; b < nb; ++b)
        for (auto v : td.bags[b]) {
            auto i = g.index_of(v);
            if (!i) {
                auto r = violation(DecompositionProperty::vertex_coverage,
                                   "bag " + std::to_string(b) + " holds unknown vertex " + std::to_string(v));
                r.vertex = v;
                return r;
            }
            holders[*i].push_back(b);
        }
    for (std::size_t i = 0; i < g.num_vertices(); ++i)
        if (holders[i].empty()) {
            auto r = violation(DecompositionProperty::vertex_coverage,
                               "vertex " + std::to_string(g.vertex_at(i)) + " is in no bag");
            r.vertex = g.vertex_at(i);
            return r;
        }

    // edge coverage
    for (const auto& e : g.edges()) {
        const auto& hu = holders[g.index(e.u)];
        bool covered = std::any_of(hu.begin(), hu.end(), [&](auto b) { return bag_has(td.bags[b], e.v); });
        if (!covered) {
            auto r = violation(DecompositionProperty::edge_coverage,
                               "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is in no bag");
            r.edge = e;
            return r;
        }
    }

    // connected traces: in a tree, a node subset is connected iff it spans
    // exactly |subset| - 1 tree edges
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
        const auto v = g.vertex_at(i);
        std::size_t inside = 0;
        for (auto [a, b] : td.tree_edges)
            if (bag_has(td.bags[a], v) && bag_has(td.bags[b], v)) ++inside;
        if (inside + 1 != holders[i].size()) {
            auto r = violation(DecompositionProperty::connectivity,
                               "bags containing vertex " + std::to_string(v) + " are not connected");
            r.vertex = v;
            return r;
        }
    }
    return {};
}

TreeDecomposition heuristic_decomposition(const Graph& g, EliminationStrategy strategy) {
    const auto n = g.num_vertices();
    TreeDecomposition td;
    if (n == 0) return td;

    std::vector<std::set<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (auto j : g.adjacent(i)) adj[i].insert(j);
    std::vector<char> gone(n, 0);
    std::vector<std::size_t> order;
    std::vector<std::size_t> position(n);
    std::vector<std::vector<std::size_t>> later(n);  // neighbours at elimination time

    auto fill_in = [&](std::size_t v) {
        std::size_t missing = 0;
        for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
            for (auto b = std::next(a); b != adj[v].end(); ++b)
                if (!adj[*a].count(*b)) ++missing;
        return missing;
    };

    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        std::size_t best_score = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (gone[v]) continue;
            auto score = strategy == EliminationStrategy::min_degree ? adj[v].size() : fill_in(v);
            if (best == n || score < best_score) {
                best = v;
                best_score = score;
            }
        }
        const auto v = best;
        later[v].assign(adj[v].begin(), adj[v].end());
        for (auto a : later[v]) {
            adj[a].erase(v);
            for (auto b : later[v])
                if (a != b) adj[a].insert(b);
        }
        adj[v].clear();
        gone[v] = 1;
        position[v] = step;
        order.push_back(v);
    }

    // Bag of v is v plus its later neighbours; its parent is the bag of the
    // earliest-eliminated of those neighbours.
    td.bags.resize(n);
    std::vector<std::size_t> roots;
    for (std::size_t step = 0; step < n; ++step) {
        const auto v = order[step];
        VertexSet bag{g.vertex_at(v)};
        for (auto u : later[v]) bag.push_back(g.vertex_at(u));
        std::sort(bag.begin(), bag.end());
        td.bags[step] = std::move(bag);
        if (later[v].empty()) {
            roots.push_back(step);
        } else {
            auto parent = *std::min_element(later[v].begin(), later[v].end(),
                                            [&](auto a, auto b) { return position[a] < position[b]; });
            td.tree_edges.emplace_back(step, position[parent]);
        }
    }
    for (std::size_t r = 0; r + 1 < roots.size(); ++r) td.tree_edges.emplace_back(roots[r], roots.back());
    return td;
}

bool verify_partition(const Graph& g, WellConnectedCandidate& candidate, VertexSet y1, VertexSet y2) {
    if (y1.size() != y2.size() || y1.empty()) return false;
    auto flow = max_disjoint_paths(g, y1, y2, FlowMode::vertex);
    if (flow.value != y1.size()) return false;
    candidate.verified.push_back({std::move(y1), std::move(y2), std::move(flow)});
    return true;
}

namespace {

// Vertices of the densest degeneracy core: peel minimum-degree vertices and
// keep the remainder at the point where the peeled degree peaks.
VertexSet max_core(const Graph& g) {
    const auto n = g.num_vertices();
    std::vector<std::size_t> degree(n);
    for (std::size_t i = 0; i < n; ++i) degree[i] = g.adjacent(i).size();
    std::vector<char> gone(n, 0);
    std::vector<std::size_t> peeled;
    std::size_t best_core = 0;
    std::size_t best_start = 0;
    std::size_t current = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t v = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!gone[i] && (v == n || degree[i] < degree[v])) v = i;
        current = std::max(current, degree[v]);
        if (current > best_core || step == 0) {
            best_core = current;
            best_start = step;
        }
        gone[v] = 1;
        peeled.push_back(v);
        for (auto j : g.adjacent(v))
            if (!gone[j]) --degree[j];
    }
    VertexSet out;
    for (std::size_t step = best_start; step < peeled.size(); ++step) out.push_back(g.vertex_at(peeled[step]));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Dichotomy decomposition_or_wellconnected(const Graph& g, std::int64_t w, std::int64_t h) {
    if (w < 1 || h < 2) fail(Errc::invalid_argument, "need w >= 1 and h >= 2");
    auto by_degree = heuristic_decomposition(g, EliminationStrategy::min_degree);
    auto by_fill = heuristic_decomposition(g, EliminationStrategy::min_fill);
    auto& best = by_fill.width() < by_degree.width() ? by_fill : by_degree;
    if (best.width() <= w) return std::move(best);

    std::vector<VertexSet> options{max_core(g)};
    auto largest = std::max_element(best.bags.begin(), best.bags.end(),
                                    [](const auto& a, const auto& b) { return a.size() < b.size(); });
    options.push_back(*largest);

    for (auto members : options) {
        if (members.size() % 2) members.pop_back();
        if (static_cast<std::int64_t>(members.size()) < h) continue;
        WellConnectedCandidate candidate{members, {}};
        const auto half = members.size() / 2;
        VertexSet y1(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(half));
        VertexSet y2(members.begin() + static_cast<std::ptrdiff_t>(half), members.end());
        if (verify_partition(g, candidate, std::move(y1), std::move(y2))) return candidate;
    }
    fail(Errc::dichotomy_failure, "decomposition width " + std::to_string(best.width()) + " exceeds " +
                                      std::to_string(w) + " and no verified candidate of size " +
                                      std::to_string(h) + " was found");
}

std::string serialize_pace(const TreeDecomposition& td, const Graph& g) {
    std::ostringstream out;
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << g.num_vertices() << '\n';
    for (std::size_t b = 0; b < td.bags.size(); ++b) {
        out << "b " << b + 1;
        for (auto v : td.bags[b]) out << ' ' << g.index(v) + 1;
        out << '\n';
    }
    for (auto [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

TreeDecomposition parse_pace(std::string_view text, const Graph& g) {
    TreeDecomposition td;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    auto bad = [&](const std::string& what) {
        fail(Errc::parse_error, "line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream words(line);
        std::string tag;
        if (!(words >> tag) || tag == "c") continue;
        if (tag == "s") {
            std::string td_tag;
            std::size_t bags = 0, width1 = 0, n = 0;
            if (!(words >> td_tag >> bags >> width1 >> n) || td_tag != "td") bad("malformed 's td' line");
            if (n != g.num_vertices()) bad("vertex count does not match the graph");
            td.bags.assign(bags, {});
            header = true;
        } else if (tag == "b") {
            if (!header) bad("bag before header");
            std::size_t id = 0;
            if (!(words >> id) || id < 1 || id > td.bags.size()) bad("bad bag id");
            std::size_t v = 0;
            while (words >> v) {
                if (v < 1 || v > g.num_vertices()) bad("vertex out of range");
                td.bags[id - 1].push_back(g.vertex_at(v - 1));
            }
            std::sort(td.bags[id - 1].begin(), td.bags[id - 1].end());
        } else {
            if (!header) bad("tree edge before header");
            std::size_t a = 0, b = 0;
            std::istringstream pair(line);
            if (!(pair >> a >> b) || a < 1 || b < 1) bad("malformed tree edge");
            td.tree_edges.emplace_back(a - 1, b - 1);
        }
    }
    if (!header) fail(Errc::parse_error, "missing 's td' header");
    return td;
}

}  // namespace bicontract
