#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bicontract/graph.hpp"

namespace bicontract {

enum class FlowMode { vertex, edge };

/// Menger pair: disjoint A-B paths and a separator of equal size.
struct FlowResult {
    std::size_t value = 0;
    std::vector<VertexSet> paths;  // each from a vertex of A to a vertex of B
    VertexSet cut_vertices;        // vertex mode
    EdgeSet cut_edges;             // edge mode
};

/// Maximum number of A-B paths that are pairwise vertex-disjoint (vertex
/// mode; a vertex of A ∩ B is a length-0 path) or edge-disjoint (edge mode;
/// A and B must be disjoint). The cut is a minimum separator of the same
/// size. Throws Error(invalid_argument) on empty A or B.
FlowResult max_disjoint_paths(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                              FlowMode mode);

/// Connected set X with x ∈ X, y ∉ X and no connected strict superset
/// avoiding y whose edge boundary is at most boundary.
struct ImportantSet {
    VertexSet members;
    std::size_t boundary = 0;
    Vertex x = 0;
    Vertex y = 0;

    friend bool operator==(const ImportantSet&, const ImportantSet&) = default;
};

/// Direct check of the three defining properties. Maximality is decided by
/// flow: X is important iff d(X) equals the minimum X-y edge cut and the
/// component of X among the vertices that cannot reach y in the residual
/// graph is X itself.
bool is_important_set(const Graph& g, Vertex x, Vertex y, std::span<const Vertex> members);

struct ImportantSetStats {
    std::size_t branch_nodes = 0;
    std::size_t leaves = 0;
    std::size_t rejected = 0;  // leaf sets that failed the direct check
};

/// All (x, y)-important sets with boundary at most p, sorted by members.
/// Branches on a boundary edge of the furthest minimum cut: either the edge
/// is cut (budget drops by one) or its far endpoint joins the x side. At most
/// 4^p sets are produced. Throws Error(invalid_argument) if x == y and
/// Error(budget_exceeded) if the branch count passes `work_limit`.
std::vector<ImportantSet> enumerate_important_sets(const Graph& g, Vertex x, Vertex y, std::size_t p,
                                                   ImportantSetStats* stats = nullptr,
                                                   std::uint64_t work_limit = 10'000'000);

inline std::size_t default_cut_budget(std::size_t k) { return 4 * k * k; }

struct ZComputation {
    VertexSet z;              // never contains the apex
    Graph augmented;          // g plus the apex joined to all of Y
    Vertex apex = 0;          // fresh id above g.max_vertex()
    std::size_t cut_budget = 0;
    std::size_t sets_enumerated = 0;
    std::size_t max_sets_per_terminal = 0;
    std::size_t augmented_boundary = 0;  // d of Z in the augmented graph
};

/// Union over x ∈ T1 ∪ T2 of the (x, apex)-important sets of boundary at most
/// the cut budget (4k² unless overridden) in g plus an apex adjacent to Y.
/// Throws Error(invalid_terminals) if T1 and T2 meet.
ZComputation compute_z(const Graph& g, std::span<const Vertex> y_set, std::span<const Vertex> t1,
                       std::span<const Vertex> t2, std::size_t k,
                       std::optional<std::size_t> cut_budget = std::nullopt,
                       std::uint64_t work_limit = 10'000'000);

}  // namespace bicontract
