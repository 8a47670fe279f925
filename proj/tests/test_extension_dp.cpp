#include <gtest/gtest.h>

#include "bicontract/extension_dp.hpp"
#include "bicontract/generators.hpp"
#include "bicontract/oracle.hpp"
#include "support.hpp"

using namespace bicontract;
using testing_support::make_graph;
using testing_support::throws_code;

namespace {

NiceTreeDecomposition nice_of(const Graph& g, EliminationStrategy s = EliminationStrategy::min_fill) {
    return to_nice(heuristic_decomposition(g, s), g);
}

std::optional<std::size_t> dp_cost(const ExtensionInstance& inst,
                                   EliminationStrategy s = EliminationStrategy::min_fill) {
    auto phi = solve_extension_dp(inst, nice_of(inst.graph, s));
    if (!phi) return std::nullopt;
    EXPECT_TRUE(phi->extends(inst.t1, inst.t2));
    return analyze(inst.graph, *phi).cost;
}

}  // namespace

TEST(ExtensionDp, PathWithOppositeEnds) {
    // a-b-c with a fixed to 1 and c to 2: b shares a color with one of them
    ExtensionInstance inst{gen_path(3), 0, {1}, {3}};
    EXPECT_FALSE(dp_cost(inst).has_value());
    inst.k = 1;
    EXPECT_EQ(dp_cost(inst), 1u);
}

TEST(ExtensionDp, PathWithEvenEnds) {
    ExtensionInstance inst{gen_path(3), 0, {1, 3}, {}};
    EXPECT_EQ(dp_cost(inst), 0u);
}

TEST(ExtensionDp, SixCycleWithOppositeTerminals) {
    ExtensionInstance inst{gen_cycle(6), 1, {1, 4}, {}};
    EXPECT_FALSE(dp_cost(inst).has_value());
    inst.k = 2;
    EXPECT_EQ(dp_cost(inst), 2u);
}

TEST(ExtensionDp, SingleEdge) {
    ExtensionInstance inst{gen_path(2), 0, {1}, {2}};
    EXPECT_EQ(dp_cost(inst), 0u);
}

TEST(ExtensionDp, EmptyGraph) {
    ExtensionInstance inst{Graph{}, 0, {}, {}};
    auto phi = solve_extension_dp(inst, to_nice(TreeDecomposition{}, inst.graph));
    ASSERT_TRUE(phi.has_value());
    EXPECT_EQ(phi->size(), 0u);
}

TEST(ExtensionDp, RejectsBadInstances) {
    ExtensionInstance odd{gen_cycle(5), 1, {}, {}};
    EXPECT_TRUE(throws_code([&] { solve_extension_dp(odd, nice_of(odd.graph)); }, Errc::precondition_violated));
    ExtensionInstance overlap{gen_path(3), 1, {1}, {1}};
    EXPECT_TRUE(throws_code([&] { solve_extension_dp(overlap, nice_of(overlap.graph)); }, Errc::invalid_terminals));
    ExtensionInstance unknown{gen_path(3), 1, {7}, {}};
    EXPECT_TRUE(throws_code([&] { solve_extension_dp(unknown, nice_of(unknown.graph)); }, Errc::invalid_vertex));
    ExtensionInstance fine{gen_path(3), 1, {1}, {}};
    EXPECT_TRUE(throws_code([&] { solve_extension_dp(fine, nice_of(gen_path(4))); }, Errc::invalid_decomposition));
}

TEST(ExtensionDp, StateLimit) {
    ExtensionInstance inst{gen_grid(3, 4), 3, {1}, {6}};
    EXPECT_TRUE(throws_code([&] { solve_extension_dp(inst, nice_of(inst.graph), nullptr, 10); },
                            Errc::budget_exceeded));
}

TEST(ExtensionDp, MatchesOracleOnRandomBipartiteGraphs) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = gen_random_bipartite(4 + static_cast<int>(seed % 6), 0.5, seed);
        VertexSet t1;
        VertexSet t2;
        for (auto v : g.vertices()) {
            if ((v + static_cast<int>(seed)) % 4 == 0 && t1.size() < 2) t1.push_back(v);
            else if ((v + static_cast<int>(seed)) % 4 == 1 && t2.size() < 2) t2.push_back(v);
        }
        auto opt = brute_force_coloring(g, t1, t2).cost;
        for (std::size_t k = 0; k <= 3; ++k) {
            ExtensionInstance inst{g, k, t1, t2};
            auto a = dp_cost(inst, EliminationStrategy::min_degree);
            auto b = dp_cost(inst, EliminationStrategy::min_fill);
            EXPECT_EQ(a, b);
            if (opt <= k) EXPECT_EQ(a, opt) << "seed " << seed << " k " << k;
            else EXPECT_FALSE(a.has_value()) << "seed " << seed << " k " << k;
        }
    }
}

TEST(ExtensionDp, DisconnectedSumsComponents) {
    // two copies of the opposite-ends path: each costs 1
    auto g = make_graph(6, {{1, 2}, {2, 3}, {4, 5}, {5, 6}});
    ExtensionInstance inst{g, 2, {1, 4}, {3, 6}};
    EXPECT_EQ(dp_cost(inst), 2u);
    inst.k = 1;
    EXPECT_FALSE(dp_cost(inst).has_value());
}

TEST(ExtensionDp, StatsAreFilled) {
    ExtensionInstance inst{gen_grid(3, 3), 2, {1}, {9}};
    DpStats stats;
    solve_extension_dp(inst, nice_of(inst.graph), &stats);
    EXPECT_GT(stats.nodes, 0u);
    EXPECT_GT(stats.states, 0u);
    EXPECT_GE(stats.states, stats.largest_table);
}

TEST(DpAudit, PathOfFour) {
    ExtensionInstance inst{gen_path(4), 3, {}, {}};
    auto report = dp_table_audit(inst, nice_of(inst.graph));
    EXPECT_TRUE(report.ok) << report.message;
    EXPECT_GT(report.colorings_enumerated, 0u);
}

TEST(DpAudit, SingleEdgeTables) {
    ExtensionInstance inst{gen_path(2), 1, {}, {}};
    auto ntd = nice_of(inst.graph);
    auto report = dp_table_audit(inst, ntd);
    EXPECT_TRUE(report.ok) << report.message;
    // with both ends in the bag: four colorings, one partition each
    std::size_t largest = 0;
    for (auto s : report.table_sizes) largest = std::max(largest, s);
    EXPECT_EQ(largest, 4u);
}

TEST(DpAudit, FourCycleAndPrunedTables) {
    for (std::size_t k = 0; k <= 3; ++k) {
        ExtensionInstance inst{gen_cycle(4), k, {1}, {}};
        auto report = dp_table_audit(inst, nice_of(inst.graph));
        EXPECT_TRUE(report.ok) << report.message;
    }
}

TEST(DpAudit, RandomSmallInstances) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto g = gen_random_bipartite(7, 0.5, seed);
        ExtensionInstance inst{g, seed % 4, {1}, {}};
        auto report = dp_table_audit(inst, nice_of(g, EliminationStrategy::min_degree));
        EXPECT_TRUE(report.ok) << report.message;
    }
    ExtensionInstance big{gen_grid(4, 4), 1, {}, {}};
    EXPECT_TRUE(throws_code([&] { dp_table_audit(big, nice_of(big.graph)); }, Errc::invalid_argument));
}
