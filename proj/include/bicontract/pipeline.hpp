#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bicontract/coloring.hpp"
#include "bicontract/extension_dp.hpp"
#include "bicontract/graph.hpp"
#include "bicontract/oracle.hpp"
#include "bicontract/separators.hpp"
#include "bicontract/treewidth.hpp"

namespace bicontract {

enum class IrrelevantPolicy {
    paper_exact_only,         // delete only while all three formulas are in force
    verified_against_oracle,  // delete on small instances after an oracle check
    disabled,                 // never delete; always answer by DP
};

std::string_view to_string(IrrelevantPolicy policy);
/// Accepts "paper-exact-only", "verified", "verified-against-oracle" and
/// "disabled". Throws Error(invalid_argument) otherwise.
IrrelevantPolicy parse_policy(std::string_view text);

/// One diagnostics record: "phase=<name> key=value ...".
struct PhaseRecord {
    PhaseRecord() = default;
    explicit PhaseRecord(std::string name) : phase(std::move(name)) {}

    std::string phase;
    std::vector<std::pair<std::string, std::string>> fields;

    PhaseRecord& add(std::string key, std::string value);
    PhaseRecord& add(std::string key, std::int64_t value);
    std::string to_line() const;
};

struct SolverConfig {
    std::optional<std::int64_t> width_bound;         // w; formula default when unset
    std::optional<std::int64_t> wellconnected_size;  // h; formula default when unset
    std::optional<std::size_t> cut_budget;           // p; 4k² when unset
    IrrelevantPolicy policy = IrrelevantPolicy::verified_against_oracle;
    std::uint64_t work_limit = default_work_limit;
    std::size_t oracle_vertex_limit = 16;  // largest instance the verified policy checks
    std::uint64_t seed = 0;
    unsigned threads = 1;
    /// Called once per phase; calls are serialized.
    std::function<void(const PhaseRecord&)> diagnostics;

    bool uses_default_constants() const { return !width_bound && !wellconnected_size && !cut_budget; }
};

struct DeletionRecord {
    Edge edge;
    VertexSet z;
    VertexSet y1;
    VertexSet y2;
    std::size_t cut_budget = 0;
};

struct SolveStats {
    std::size_t insertions = 0;  // edges added by iterative compression
    std::size_t cheaper_calls = 0;
    std::size_t partitions = 0;
    std::size_t partitions_discarded = 0;  // k' = -1
    std::size_t extension_calls = 0;
    std::size_t shortcuts = 0;  // k' = 0 or terminal-free components
    std::size_t dp_runs = 0;
    int max_width = -1;
    std::size_t candidates = 0;
    std::size_t rejected_candidates = 0;  // invalid, no edge, or failed verification
    std::size_t oracle_fallbacks = 0;
    std::vector<DeletionRecord> deletions;
};

/// Saturating 3·p·t·4^p + 3 and 2·p·t·4^p + 2 with p = 4k².
std::int64_t default_width_bound(std::size_t k, std::size_t t);
std::int64_t default_wellconnected_size(std::size_t k, std::size_t t);

/// A witness S with |S| <= k and G/S bipartite, or nullopt. Components are
/// solved separately, each with the smallest budget that succeeds. The witness
/// is checked before it is returned. Throws Error(budget_exceeded) when a work
/// limit is hit.
std::optional<ContractionSet> solve_bipartite_contraction(const Graph& g, std::size_t k,
                                                          const SolverConfig& cfg = {},
                                                          SolveStats* stats = nullptr);

/// Coloring of cost <= k by iterative compression over the edges in
/// lexicographic order, or nullopt.
std::optional<TwoColoring> solve_cheap_coloring(const Graph& g, std::size_t k, const SolverConfig& cfg = {},
                                                SolveStats* stats = nullptr);

/// Graph with a coloring of cost exactly k + 1.
struct CheaperInstance {
    Graph graph;
    std::size_t k = 0;
    TwoColoring phi;

    /// Throws Error(invalid_coloring) unless phi colors the graph with cost k + 1.
    void validate() const;
};

/// Coloring of cost <= k, or nullopt. Tries every split of the bad-edge
/// endpoints into (X1, X2) in increasing bitmask order (bit set = X2); the
/// first split that succeeds wins, also when partitions run on several
/// threads.
std::optional<TwoColoring> solve_cheaper_coloring(const CheaperInstance& inst, const SolverConfig& cfg = {},
                                                  SolveStats* stats = nullptr);

/// Minimum-cost extension if that cost is at most k. Components are solved
/// separately. A component without terminals, or any component at budget 0,
/// is settled by proper 2-coloring. Otherwise the dichotomy decides between
/// DP on a decomposition and irrelevant-edge deletion on a candidate.
std::optional<TwoColoring> solve_extension(const ExtensionInstance& inst, const SolverConfig& cfg = {},
                                           SolveStats* stats = nullptr);

struct IrrelevantEdgeReport {
    ZComputation z;
    VertexSet y1;
    VertexSet y2;
    bool verified = false;  // the oracle check ran
    std::size_t optimum_before = 0;  // capped at k + 1
    std::size_t optimum_after = 0;
};

/// An edge uv with u, v outside Z taken from the first edges of the
/// vertex-disjoint Y1-Y2 paths, where Z ∩ Y ⊆ Y2 and |Y1| = |Y2|.
/// Errors: Error(precondition_violated) if the policy forbids deletion,
/// Error(not_found) if Z takes more than half of Y or no path starts with an
/// edge outside Z, Error(candidate_invalid) if the partition flow fails, and
/// Error(unsound_deletion) if the oracle check changes the capped optimum.
Edge find_irrelevant_edge(const Graph& g, WellConnectedCandidate& candidate, std::span<const Vertex> t1,
                          std::span<const Vertex> t2, std::size_t k, const SolverConfig& cfg,
                          IrrelevantEdgeReport* report = nullptr);

}  // namespace bicontract
