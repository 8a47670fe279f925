#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bicontract/graph.hpp"
#include "bicontract/separators.hpp"

namespace bicontract {

struct TreeDecomposition {
    std::vector<VertexSet> bags;  // each sorted
    std::vector<std::pair<std::size_t, std::size_t>> tree_edges;

    /// Largest bag size minus one; -1 without bags.
    int width() const;
};

enum class DecompositionProperty {
    tree_shape,       // bag graph is not a tree
    vertex_coverage,  // some vertex is in no bag
    edge_coverage,    // some edge is in no bag
    connectivity,     // bags holding a vertex do not form a subtree
    nice_shape,       // node kind rules of the nice form
};

struct DecompositionReport {
    bool ok = true;
    std::optional<DecompositionProperty> violated;
    std::string message;
    std::optional<Vertex> vertex;
    std::optional<Edge> edge;
};

/// Reports the first violated property together with its witness.
DecompositionReport validate_decomposition(const Graph& g, const TreeDecomposition& td);

enum class EliminationStrategy { min_degree, min_fill };

/// Elimination-ordering decomposition; ties go to the lowest vertex id.
/// Always valid, width not guaranteed minimum.
TreeDecomposition heuristic_decomposition(const Graph& g, EliminationStrategy strategy);

enum class NiceKind { leaf, introduce_vertex, forget_vertex, introduce_edge, join };

struct NiceNode {
    NiceKind kind = NiceKind::leaf;
    VertexSet bag;
    Vertex vertex = 0;  // introduce_vertex / forget_vertex
    Edge edge;          // introduce_edge
    std::vector<std::size_t> children;
};

/// Rooted at a node with an empty bag; leaves have empty bags; every edge of
/// the graph is introduced exactly once. Children always precede parents in
/// `nodes`.
struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    std::size_t root = 0;

    int width() const;
    TreeDecomposition erase_kinds() const;
};

/// Throws Error(invalid_decomposition) if td is not valid for g.
NiceTreeDecomposition to_nice(const TreeDecomposition& td, const Graph& g);

/// Checks the node kind rules and single introduction of every edge, then
/// validates the underlying decomposition.
DecompositionReport validate_nice(const Graph& g, const NiceTreeDecomposition& ntd);

/// Candidate well-connected set with the partitions whose flow has been
/// checked.
struct WellConnectedCandidate {
    struct Partition {
        VertexSet y1;
        VertexSet y2;
        FlowResult flow;
    };

    VertexSet members;
    std::vector<Partition> verified;
};

/// Runs vertex-disjoint flow between y1 and y2; on success (|y1| = |y2| =
/// value) records the partition and returns true.
bool verify_partition(const Graph& g, WellConnectedCandidate& candidate, VertexSet y1, VertexSet y2);

using Dichotomy = std::variant<TreeDecomposition, WellConnectedCandidate>;

/// The better of the min-degree and min-fill decompositions if its width is
/// at most w. Otherwise a candidate of size >= h (even size) taken from the
/// maximum-degeneracy core or the largest bag, with one balanced partition
/// already verified. Throws Error(dichotomy_failure) if neither is available
/// and Error(invalid_argument) unless w >= 1 and h >= 2.
Dichotomy decomposition_or_wellconnected(const Graph& g, std::int64_t w, std::int64_t h);

/// PACE .td text; vertices are written as their 1-based position in g.
std::string serialize_pace(const TreeDecomposition& td, const Graph& g);
TreeDecomposition parse_pace(std::string_view text, const Graph& g);

}  // namespace bicontract
