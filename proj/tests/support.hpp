#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "bicontract/coloring.hpp"
#include "bicontract/error.hpp"
#include "bicontract/graph.hpp"

namespace testing_support {

using bicontract::Edge;
using bicontract::Graph;
using bicontract::Vertex;

// Runs `body` and reports whether it threw Error with `code`.
template <class F>
::testing::AssertionResult throws_code(F&& body, bicontract::Errc code) {
    try {
        body();
    } catch (const bicontract::Error& e) {
        if (e.code() == code) return ::testing::AssertionSuccess();
        return ::testing::AssertionFailure() << "threw " << bicontract::to_string(e.code()) << ": " << e.what();
    } catch (const std::exception& e) {
        return ::testing::AssertionFailure() << "threw a foreign exception: " << e.what();
    }
    return ::testing::AssertionFailure() << "did not throw";
}

// Bipartite check by trying every 2-coloring; n <= 20.
inline bool bipartite_by_enumeration(const Graph& g) {
    const auto n = g.num_vertices();
    if (n == 0) return true;
    for (std::uint32_t mask = 0; mask < (1u << n); mask += 2) {
        bool ok = true;
        for (const auto& e : g.edges()) {
            auto a = (mask >> g.index(e.u)) & 1;
            auto b = (mask >> g.index(e.v)) & 1;
            if (a == b) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// Sum over monochromatic components of (size - 1), computed by DFS over the
// same-colored edges.
inline std::size_t cost_by_definition(const Graph& g, const std::map<Vertex, int>& color) {
    std::map<Vertex, std::vector<Vertex>> same;
    for (const auto& e : g.edges())
        if (color.at(e.u) == color.at(e.v)) {
            same[e.u].push_back(e.v);
            same[e.v].push_back(e.u);
        }
    std::map<Vertex, bool> seen;
    std::size_t cost = 0;
    for (auto v : g.vertices()) {
        if (seen[v]) continue;
        std::size_t size = 0;
        std::vector<Vertex> stack{v};
        seen[v] = true;
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            ++size;
            for (auto w : same[u])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        cost += size - 1;
    }
    return cost;
}

// Minimum over colorings of cost_by_definition, terminals fixed; n <= 20.
inline std::size_t min_cost_by_enumeration(const Graph& g, const std::vector<Vertex>& t1 = {},
                                           const std::vector<Vertex>& t2 = {}) {
    const auto n = g.num_vertices();
    std::size_t best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::map<Vertex, int> color;
        for (std::size_t i = 0; i < n; ++i) color[g.vertex_at(i)] = (mask >> i) & 1 ? 2 : 1;
        bool ok = true;
        for (auto v : t1) ok = ok && color[v] == 1;
        for (auto v : t2) ok = ok && color[v] == 2;
        if (ok) best = std::min(best, cost_by_definition(g, color));
    }
    return best;
}

// Treewidth as the best elimination ordering over all permutations; n <= 8.
inline int exact_treewidth(const Graph& g) {
    const auto n = g.num_vertices();
    if (n == 0) return -1;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = static_cast<int>(n) - 1;
    do {
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (const auto& e : g.edges()) {
            adj[g.index(e.u)][g.index(e.v)] = 1;
            adj[g.index(e.v)][g.index(e.u)] = 1;
        }
        std::vector<char> gone(n, 0);
        int width = 0;
        for (auto v : order) {
            std::vector<std::size_t> later;
            for (std::size_t u = 0; u < n; ++u)
                if (!gone[u] && adj[v][u]) later.push_back(u);
            width = std::max(width, static_cast<int>(later.size()));
            for (auto a : later)
                for (auto b : later)
                    if (a != b) adj[a][b] = 1;
            gone[v] = 1;
        }
        best = std::min(best, width);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

inline Graph make_graph(int n, std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Edge> edges;
    for (auto [a, b] : pairs) edges.push_back(Edge::make(a, b));
    return Graph::with_vertices(n, std::move(edges));
}

}  // namespace testing_support
