#include <gtest/gtest.h>

#include "bicontract/generators.hpp"
#include "bicontract/treewidth.hpp"
#include "support.hpp"

using namespace bicontract;
using testing_support::exact_treewidth;
using testing_support::make_graph;
using testing_support::throws_code;

namespace {

TreeDecomposition path_chain(int n) {
    TreeDecomposition td;
    for (int i = 1; i < n; ++i) td.bags.push_back({i, i + 1});
    for (std::size_t i = 0; i + 1 < td.bags.size(); ++i) td.tree_edges.emplace_back(i, i + 1);
    return td;
}

std::size_t count_kind(const NiceTreeDecomposition& ntd, NiceKind kind) {
    return static_cast<std::size_t>(
        std::count_if(ntd.nodes.begin(), ntd.nodes.end(), [&](const NiceNode& n) { return n.kind == kind; }));
}

}  // namespace

TEST(Validate, PathChain) {
    auto g = gen_path(5);
    auto r = validate_decomposition(g, path_chain(5));
    EXPECT_TRUE(r.ok) << r.message;
    EXPECT_EQ(path_chain(5).width(), 1);
}

TEST(Validate, SingleBag) {
    auto g = gen_complete(4);
    TreeDecomposition td{{{1, 2, 3, 4}}, {}};
    EXPECT_TRUE(validate_decomposition(g, td).ok);
    EXPECT_EQ(td.width(), 3);
}

TEST(Validate, MissingEdgeIsNamed) {
    auto g = gen_cycle(4);
    TreeDecomposition td{{{1, 2, 3}, {3, 4}}, {{0, 1}}};
    auto r = validate_decomposition(g, td);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.violated, DecompositionProperty::edge_coverage);
    ASSERT_TRUE(r.edge.has_value());
    EXPECT_EQ(*r.edge, (Edge{1, 4}));
}

TEST(Validate, OtherViolations) {
    auto g = gen_path(3);
    TreeDecomposition missing{{{1, 2}}, {}};
    EXPECT_EQ(validate_decomposition(g, missing).violated, DecompositionProperty::vertex_coverage);
    TreeDecomposition broken{{{1, 2}, {2, 3}, {1}}, {{0, 1}, {1, 2}}};
    auto r = validate_decomposition(g, broken);
    EXPECT_EQ(r.violated, DecompositionProperty::connectivity);
    EXPECT_EQ(r.vertex, 1);
    TreeDecomposition cyclic{{{1, 2}, {2, 3}, {2}}, {{0, 1}, {1, 2}, {2, 0}}};
    EXPECT_EQ(validate_decomposition(g, cyclic).violated, DecompositionProperty::tree_shape);
}

TEST(Heuristic, KnownWidths) {
    for (auto strategy : {EliminationStrategy::min_degree, EliminationStrategy::min_fill}) {
        auto tree = make_graph(7, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}});
        EXPECT_EQ(heuristic_decomposition(tree, strategy).width(), 1);
        for (int n = 3; n <= 8; ++n) EXPECT_EQ(heuristic_decomposition(gen_cycle(n), strategy).width(), 2);
        for (int n = 1; n <= 6; ++n)
            EXPECT_EQ(heuristic_decomposition(gen_complete(n), strategy).width(), n - 1);
    }
}

TEST(Heuristic, ExactWidthsOfSmallFamilies) {
    EXPECT_EQ(exact_treewidth(gen_cycle(6)), 2);
    EXPECT_EQ(exact_treewidth(gen_path(6)), 1);
    EXPECT_EQ(exact_treewidth(gen_complete_bipartite(3, 3)), 3);
    EXPECT_EQ(exact_treewidth(gen_grid(2, 4)), 2);
}

TEST(Heuristic, ValidAndNeverBelowExact) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = gen_random(7, 0.4, seed);
        const int exact = exact_treewidth(g);
        for (auto strategy : {EliminationStrategy::min_degree, EliminationStrategy::min_fill}) {
            auto td = heuristic_decomposition(g, strategy);
            auto r = validate_decomposition(g, td);
            EXPECT_TRUE(r.ok) << r.message;
            EXPECT_GE(td.width(), exact);
        }
    }
}

TEST(Heuristic, DisconnectedAndEmpty) {
    auto g = make_graph(6, {{1, 2}, {4, 5}, {5, 6}});
    auto td = heuristic_decomposition(g, EliminationStrategy::min_fill);
    EXPECT_TRUE(validate_decomposition(g, td).ok);
    EXPECT_EQ(td.width(), 1);
    Graph empty;
    EXPECT_TRUE(validate_decomposition(empty, heuristic_decomposition(empty, EliminationStrategy::min_degree)).ok);
}

TEST(Nice, TriangleSingleBag) {
    auto g = gen_complete(3);
    TreeDecomposition td{{{1, 2, 3}}, {}};
    auto ntd = to_nice(td, g);
    auto r = validate_nice(g, ntd);
    EXPECT_TRUE(r.ok) << r.message;
    EXPECT_EQ(count_kind(ntd, NiceKind::introduce_vertex), 3u);
    EXPECT_EQ(count_kind(ntd, NiceKind::introduce_edge), 3u);
    EXPECT_EQ(count_kind(ntd, NiceKind::forget_vertex), 3u);
    EXPECT_TRUE(ntd.nodes[ntd.root].bag.empty());
}

TEST(Nice, PathKeepsWidth) {
    auto g = gen_path(6);
    auto ntd = to_nice(path_chain(6), g);
    EXPECT_EQ(ntd.width(), 1);
    EXPECT_TRUE(validate_nice(g, ntd).ok);
    EXPECT_TRUE(validate_decomposition(g, ntd.erase_kinds()).ok);
}

TEST(Nice, RandomGraphsWithJoins) {
    std::size_t joins = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = gen_random(9, 0.3, seed);
        auto td = heuristic_decomposition(g, EliminationStrategy::min_degree);
        auto ntd = to_nice(td, g);
        auto r = validate_nice(g, ntd);
        EXPECT_TRUE(r.ok) << r.message;
        EXPECT_EQ(ntd.width(), td.width());
        joins += count_kind(ntd, NiceKind::join);
    }
    EXPECT_GT(joins, 0u);
}

TEST(Nice, RejectsInvalidInput) {
    auto g = gen_cycle(4);
    TreeDecomposition td{{{1, 2, 3}, {3, 4}}, {{0, 1}}};
    EXPECT_TRUE(throws_code([&] { to_nice(td, g); }, Errc::invalid_decomposition));
}

TEST(Nice, ValidatorCatchesTampering) {
    auto g = gen_path(3);
    auto ntd = to_nice(path_chain(3), g);
    for (auto& node : ntd.nodes)
        if (node.kind == NiceKind::introduce_edge) {
            node.kind = NiceKind::forget_vertex;
            break;
        }
    EXPECT_FALSE(validate_nice(g, ntd).ok);
}

TEST(Nice, EmptyGraph) {
    Graph empty;
    auto ntd = to_nice(TreeDecomposition{}, empty);
    EXPECT_TRUE(validate_nice(empty, ntd).ok);
}

TEST(Dichotomy, TreeGivesDecomposition) {
    auto g = gen_star(5);
    auto d = decomposition_or_wellconnected(g, 2, 4);
    ASSERT_TRUE(std::holds_alternative<TreeDecomposition>(d));
    EXPECT_LE(std::get<TreeDecomposition>(d).width(), 2);
}

TEST(Dichotomy, TriangleFitsWideBound) {
    auto d = decomposition_or_wellconnected(gen_complete(3), 5, 2);
    ASSERT_TRUE(std::holds_alternative<TreeDecomposition>(d));
    EXPECT_EQ(std::get<TreeDecomposition>(d).width(), 2);
}

TEST(Dichotomy, CompleteBipartiteGivesCandidate) {
    auto g = gen_complete_bipartite(4, 4);
    auto d = decomposition_or_wellconnected(g, 3, 8);
    ASSERT_TRUE(std::holds_alternative<WellConnectedCandidate>(d));
    auto& c = std::get<WellConnectedCandidate>(d);
    EXPECT_EQ(c.members.size(), 8u);
    ASSERT_EQ(c.verified.size(), 1u);
    EXPECT_EQ(c.verified[0].flow.value, 4u);
    // any balanced split of K4,4 links up
    EXPECT_TRUE(verify_partition(g, c, {1, 5, 2, 6}, {3, 7, 4, 8}));
    EXPECT_TRUE(verify_partition(g, c, {1, 2, 3, 4}, {5, 6, 7, 8}));
}

TEST(Dichotomy, FailureAndArguments) {
    auto g = gen_complete_bipartite(3, 3);
    EXPECT_TRUE(throws_code([&] { decomposition_or_wellconnected(g, 2, 10); }, Errc::dichotomy_failure));
    EXPECT_TRUE(throws_code([&] { decomposition_or_wellconnected(g, 0, 4); }, Errc::invalid_argument));
    EXPECT_TRUE(throws_code([&] { decomposition_or_wellconnected(g, 2, 1); }, Errc::invalid_argument));
}

TEST(Dichotomy, FailingPartitionIsNotRecorded) {
    // two triangles joined at one vertex cannot link {1,2} to {4,5} twice
    auto g = make_graph(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    WellConnectedCandidate c{{1, 2, 4, 5}, {}};
    EXPECT_FALSE(verify_partition(g, c, {1, 2}, {4, 5}));
    EXPECT_TRUE(c.verified.empty());
}

TEST(Pace, RoundTrip) {
    auto g = gen_petersen();
    auto td = heuristic_decomposition(g, EliminationStrategy::min_fill);
    auto text = serialize_pace(td, g);
    EXPECT_EQ(text.rfind("s td ", 0), 0u);
    auto back = parse_pace(text, g);
    EXPECT_EQ(back.bags, td.bags);
    EXPECT_TRUE(validate_decomposition(g, back).ok);
    EXPECT_TRUE(throws_code([&] { parse_pace("s td 1 1 10\nb 1 11\n", g); }, Errc::parse_error));
}
