#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicontract/coloring.hpp"
#include "bicontract/graph.hpp"
#include "bicontract/treewidth.hpp"

namespace bicontract {

/// Bipartite graph, budget and terminal sets that the solution must color 1
/// (t1) and 2 (t2).
struct ExtensionInstance {
    Graph graph;
    std::size_t k = 0;
    VertexSet t1;
    VertexSet t2;

    std::size_t num_terminals() const { return t1.size() + t2.size(); }

    /// Throws Error(precondition_violated) if the graph is not bipartite,
    /// Error(invalid_vertex) for unknown terminals and Error(invalid_terminals)
    /// if t1 and t2 meet.
    void validate() const;
};

struct DpStats {
    std::size_t nodes = 0;
    std::size_t states = 0;          // entries over all tables
    std::size_t largest_table = 0;
    std::size_t pruned = 0;          // entries dropped by the budget bound
};

/// Minimum-cost extension if its cost is at most k. Tables are keyed by the
/// bag coloring and the partition of the bag into live monochromatic blocks
/// and keep the largest number of closed components. Entries whose cost lower
/// bound (processed - closed - live blocks) exceeds k are dropped. Throws
/// Error(invalid_decomposition) if ntd fails validate_nice and
/// Error(budget_exceeded) once more than `work_limit` entries are created.
std::optional<TwoColoring> solve_extension_dp(const ExtensionInstance& inst, const NiceTreeDecomposition& ntd,
                                              DpStats* stats = nullptr,
                                              std::uint64_t work_limit = 50'000'000);

struct DpAuditReport {
    bool ok = true;
    std::string message;
    std::vector<std::size_t> table_sizes;  // per node of ntd
    std::size_t colorings_enumerated = 0;
};

/// Recomputes every table by enumerating the colorings of the vertices
/// processed below each node and compares keys and closed counts with the
/// DP. Limited to 12 vertices (Error(invalid_argument) beyond).
DpAuditReport dp_table_audit(const ExtensionInstance& inst, const NiceTreeDecomposition& ntd);

}  // namespace bicontract
