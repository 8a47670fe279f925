#include "bicontract/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "bicontract/error.hpp"

namespace bicontract {

namespace {

// Uniform double in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementations.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Graph gen_cycle(int n) {
    if (n < 3) fail(Errc::invalid_argument, "a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) edges.push_back(Edge::make(i, i % n + 1));
    return Graph::with_vertices(n, std::move(edges));
}

Graph gen_path(int n) {
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    return Graph::with_vertices(n, std::move(edges));
}

Graph gen_complete(int n) {
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
    return Graph::with_vertices(n, std::move(edges));
}

Graph gen_complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (int i = 1; i <= a; ++i)
        for (int j = a + 1; j <= a + b; ++j) edges.push_back({i, j});
    return Graph::with_vertices(a + b, std::move(edges));
}

Graph gen_star(int leaves) {
    std::vector<Edge> edges;
    for (int i = 2; i <= leaves + 1; ++i) edges.push_back({1, i});
    return Graph::with_vertices(leaves + 1, std::move(edges));
}

Graph gen_grid(int rows, int cols) {
    std::vector<Edge> edges;
    auto id = [cols](int r, int c) { return r * cols + c + 1; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
        }
    return Graph::with_vertices(rows * cols, std::move(edges));
}

Graph gen_petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back(Edge::make(i + 1, (i + 1) % 5 + 1));
        edges.push_back(Edge::make(i + 1, i + 6));
        edges.push_back(Edge::make(i + 6, (i + 2) % 5 + 6));
    }
    return Graph::with_vertices(10, std::move(edges));
}

Graph gen_random(int n, double edge_probability, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (unit(rng) < edge_probability) edges.push_back({i, j});
    return Graph::with_vertices(n, std::move(edges));
}

Graph gen_random_bipartite(int n, double edge_probability, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> side(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) side[i] = static_cast<int>(rng() & 1);
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (side[i] != side[j] && unit(rng) < edge_probability) edges.push_back({i, j});
    return Graph::with_vertices(n, std::move(edges));
}

std::vector<Graph> connected_graph_catalog(int n) {
    if (n < 1 || n > 6) fail(Errc::invalid_argument, "catalog supports 1..6 vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const auto m = pairs.size();

    // pair_index[a][b] = bit of pair {a, b}
    std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
    for (std::size_t b = 0; b < m; ++b) {
        pair_index[pairs[b].first][pairs[b].second] = static_cast<int>(b);
        pair_index[pairs[b].second][pairs[b].first] = static_cast<int>(b);
    }

    std::vector<std::vector<int>> perms;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Bit b of a relabelled code comes from bit image[perm][b] of the original.
    std::vector<std::vector<int>> image(perms.size(), std::vector<int>(m));
    for (std::size_t p = 0; p < perms.size(); ++p)
        for (std::size_t b = 0; b < m; ++b)
            image[p][b] = pair_index[perms[p][pairs[b].first]][perms[p][pairs[b].second]];

    std::set<std::uint32_t> seen;
    std::vector<Graph> out;
    const std::uint32_t total = 1u << m;
    for (std::uint32_t code = 0; code < total; ++code) {
        // connectivity
        std::uint32_t reached = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t b = 0; b < m; ++b) {
                if (!(code >> b & 1)) continue;
                auto [i, j] = pairs[b];
                bool in_i = reached >> i & 1;
                bool in_j = reached >> j & 1;
                if (in_i != in_j) {
                    reached |= (1u << i) | (1u << j);
                    grew = true;
                }
            }
        }
        if (reached != (1u << n) - 1) continue;

        std::uint32_t canonical = code;
        for (const auto& img : image) {
            std::uint32_t relabelled = 0;
            for (std::size_t b = 0; b < m; ++b)
                if (code >> img[b] & 1) relabelled |= 1u << b;
            canonical = std::min(canonical, relabelled);
        }
        if (!seen.insert(canonical).second) continue;

        std::vector<Edge> edges;
        for (std::size_t b = 0; b < m; ++b)
            if (canonical >> b & 1) edges.push_back({pairs[b].first + 1, pairs[b].second + 1});
        out.push_back(Graph::with_vertices(n, std::move(edges)));
    }
    return out;
}

}  // namespace bicontract
