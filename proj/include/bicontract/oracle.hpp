#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bicontract/coloring.hpp"
#include "bicontract/graph.hpp"

namespace bicontract {

/// Elementary-step budget for exhaustive searches. Exceeding it throws
/// Error(budget_exceeded); results are never silently truncated.
inline constexpr std::uint64_t default_work_limit = 100'000'000;

/// Minimum-cardinality S with |S| <= k and G/S bipartite, or nullopt. Subsets
/// are tried by size, then in lexicographic edge order, so the answer is
/// deterministic.
std::optional<ContractionSet> brute_force_contraction(const Graph& g, std::size_t k,
                                                      std::uint64_t work_limit = default_work_limit);

struct ColoringOptimum {
    TwoColoring coloring;
    std::size_t cost = 0;
};

/// Minimum-cost coloring with T1 colored 1 and T2 colored 2, by enumerating
/// every coloring of the free vertices. Without terminals the smallest vertex
/// is fixed to color 1. Throws Error(invalid_terminals) if T1 and T2 meet.
ColoringOptimum brute_force_coloring(const Graph& g, std::span<const Vertex> t1 = {},
                                     std::span<const Vertex> t2 = {},
                                     std::uint64_t work_limit = default_work_limit);

/// Every (x, y)-important set with boundary at most p, found by filtering all
/// connected x-containing, y-avoiding vertex sets by the maximality rule.
/// Sets are sorted and listed in lexicographic order. Needs |V| <= 26.
std::vector<VertexSet> important_sets_oracle(const Graph& g, Vertex x, Vertex y, std::size_t p);

/// Minimum-cardinality edge set whose deletion makes g bipartite, if one of
/// size <= k exists.
std::optional<EdgeSet> brute_force_edge_bipartization(const Graph& g, std::size_t k,
                                                      std::uint64_t work_limit = default_work_limit);

struct ReducedInstance {
    Graph graph;
    std::size_t k = 0;
};

/// Replaces every edge by a path of 2k + 3 edges; new vertices get ids above
/// g.max_vertex(), assigned edge by edge in edge order.
ReducedInstance reduce_edge_bipartization(const Graph& g, std::size_t k);

}  // namespace bicontract
