#pragma once

#include <cstdint>
#include <vector>

#include "bicontract/graph.hpp"

namespace bicontract {

// All generators number vertices 1..n.

/// Cycle 1-2-...-n-1.
Graph gen_cycle(int n);
/// Path 1-2-...-n.
Graph gen_path(int n);
Graph gen_complete(int n);
/// Sides 1..a and a+1..a+b.
Graph gen_complete_bipartite(int a, int b);
/// Center 1, leaves 2..leaves+1.
Graph gen_star(int leaves);
/// Row-major r x c grid.
Graph gen_grid(int rows, int cols);
/// Outer cycle 1..5, spokes i-(i+5), inner pentagram on 6..10.
Graph gen_petersen();

/// G(n, p): each pair {i, j} is an edge with probability p. Deterministic for
/// a fixed seed (mt19937_64, pairs in lexicographic order).
Graph gen_random(int n, double edge_probability, std::uint64_t seed);

/// Random bipartite graph: vertices split into two random sides, cross pairs
/// kept with the given probability.
Graph gen_random_bipartite(int n, double edge_probability, std::uint64_t seed);

/// One representative per isomorphism class of connected graphs on n
/// vertices (n <= 6).
std::vector<Graph> connected_graph_catalog(int n);

}  // namespace bicontract
