#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bicontract {

/// Dinic max-flow over integer capacities. Arcs are added in pairs; arc i^1
/// is the residual partner of arc i.
class FlowNetwork {
   public:
    static constexpr std::int64_t infinite = std::int64_t{1} << 40;

    explicit FlowNetwork(std::size_t nodes) : head_(nodes) {}

    std::size_t num_nodes() const { return head_.size(); }

    /// Directed arc with the given capacity. Returns its index.
    std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t capacity);
    /// Undirected edge: both directions share `capacity`. Returns the index of
    /// the from->to arc.
    std::size_t add_edge(std::size_t a, std::size_t b, std::int64_t capacity);

    std::int64_t max_flow(std::size_t source, std::size_t sink);

    /// Net flow along an arc (negative if it runs against the arc).
    std::int64_t flow(std::size_t arc) const { return capacity_[arc] - residual_[arc]; }
    std::size_t arc_head(std::size_t arc) const { return to_[arc]; }
    std::size_t arc_tail(std::size_t arc) const { return to_[arc ^ 1]; }
    const std::vector<std::size_t>& arcs_from(std::size_t node) const { return head_[node]; }

    /// Nodes reachable from `source` through arcs with residual capacity.
    std::vector<char> residual_reachable_from(std::size_t source) const;
    /// Nodes that can reach `sink` through arcs with residual capacity.
    std::vector<char> residual_reaching(std::size_t sink) const;

   private:
    bool build_levels(std::size_t source, std::size_t sink);
    std::int64_t push(std::size_t node, std::size_t sink, std::int64_t limit);

    std::vector<std::vector<std::size_t>> head_;
    std::vector<std::size_t> to_;
    std::vector<std::int64_t> capacity_;
    std::vector<std::int64_t> residual_;
    std::vector<int> level_;
    std::vector<std::size_t> cursor_;
};

}  // namespace bicontract
