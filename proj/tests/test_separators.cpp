#include <gtest/gtest.h>

#include <cmath>

#include "bicontract/generators.hpp"
#include "bicontract/oracle.hpp"
#include "bicontract/separators.hpp"
#include "support.hpp"

using namespace bicontract;
using testing_support::make_graph;
using testing_support::throws_code;

namespace {

// Every path must start in A, end in B and use graph edges; in vertex mode no
// vertex repeats across paths.
void expect_valid_paths(const Graph& g, const FlowResult& r, const VertexSet& a, const VertexSet& b,
                        FlowMode mode) {
    ASSERT_EQ(r.paths.size(), r.value);
    std::set<Vertex> used;
    std::set<Edge> used_edges;
    for (const auto& p : r.paths) {
        ASSERT_FALSE(p.empty());
        EXPECT_TRUE(std::count(a.begin(), a.end(), p.front()));
        EXPECT_TRUE(std::count(b.begin(), b.end(), p.back()));
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            EXPECT_TRUE(g.has_edge(p[i], p[i + 1]));
            if (mode == FlowMode::edge) EXPECT_TRUE(used_edges.insert(Edge::make(p[i], p[i + 1])).second);
        }
        if (mode == FlowMode::vertex)
            for (auto v : p) EXPECT_TRUE(used.insert(v).second) << "vertex " << v << " reused";
    }
}

}  // namespace

TEST(DisjointPaths, PathGraph) {
    auto g = gen_path(3);
    const VertexSet a{1};
    const VertexSet b{3};
    auto r = max_disjoint_paths(g, a, b, FlowMode::vertex);
    EXPECT_EQ(r.value, 1u);
    expect_valid_paths(g, r, a, b, FlowMode::vertex);
    EXPECT_EQ(r.cut_vertices.size(), 1u);
}

TEST(DisjointPaths, CompleteBipartiteSides) {
    auto g = gen_complete_bipartite(3, 3);
    const VertexSet a{1, 2, 3};
    const VertexSet b{4, 5, 6};
    auto r = max_disjoint_paths(g, a, b, FlowMode::vertex);
    EXPECT_EQ(r.value, 3u);
    expect_valid_paths(g, r, a, b, FlowMode::vertex);
}

TEST(DisjointPaths, SharedTerminalIsATrivialPath) {
    auto g = gen_path(2);
    const VertexSet a{1};
    auto r = max_disjoint_paths(g, a, a, FlowMode::vertex);
    EXPECT_EQ(r.value, 1u);
    ASSERT_EQ(r.paths.size(), 1u);
    EXPECT_EQ(r.paths[0], (VertexSet{1}));
}

TEST(DisjointPaths, EdgeModeOnCycle) {
    auto g = gen_cycle(6);
    const VertexSet a{1};
    const VertexSet b{4};
    auto r = max_disjoint_paths(g, a, b, FlowMode::edge);
    EXPECT_EQ(r.value, 2u);
    expect_valid_paths(g, r, a, b, FlowMode::edge);
    EXPECT_EQ(r.cut_edges.size(), 2u);
    EXPECT_TRUE(throws_code([&] { max_disjoint_paths(g, a, a, FlowMode::edge); }, Errc::invalid_argument));
    EXPECT_TRUE(throws_code([&] { max_disjoint_paths(g, {}, a, FlowMode::vertex); }, Errc::invalid_argument));
}

TEST(DisjointPaths, BowtieHasCutVertex) {
    // two triangles sharing vertex 3
    auto g = make_graph(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    const VertexSet a{1, 2};
    const VertexSet b{4, 5};
    auto r = max_disjoint_paths(g, a, b, FlowMode::vertex);
    EXPECT_EQ(r.value, 1u);
    EXPECT_EQ(r.cut_vertices, (VertexSet{3}));
    EXPECT_EQ(max_disjoint_paths(g, a, b, FlowMode::edge).value, 2u);
}

TEST(ImportantSets, PathExample) {
    auto sets = enumerate_important_sets(gen_path(3), 1, 3, 1);
    ASSERT_EQ(sets.size(), 1u);
    EXPECT_EQ(sets[0].members, (VertexSet{1, 2}));
    EXPECT_EQ(sets[0].boundary, 1u);
}

TEST(ImportantSets, ZeroBudgetWhenConnected) {
    EXPECT_TRUE(enumerate_important_sets(gen_grid(3, 3), 1, 9, 0).empty());
}

TEST(ImportantSets, ZeroBudgetWhenSeparated) {
    auto g = make_graph(4, {{1, 2}, {3, 4}});
    auto sets = enumerate_important_sets(g, 1, 4, 0);
    ASSERT_EQ(sets.size(), 1u);
    EXPECT_EQ(sets[0].members, (VertexSet{1, 2}));
}

TEST(ImportantSets, StarExample) {
    auto sets = enumerate_important_sets(gen_star(3), 2, 3, 2);
    ASSERT_EQ(sets.size(), 1u);
    EXPECT_EQ(sets[0].members, (VertexSet{1, 2, 4}));
}

TEST(ImportantSets, SameEndpointsRejected) {
    EXPECT_TRUE(throws_code([] { enumerate_important_sets(gen_path(3), 2, 2, 1); }, Errc::invalid_argument));
}

TEST(ImportantSets, DirectCheck) {
    auto g = gen_path(3);
    const VertexSet ab{1, 2};
    const VertexSet a{1};
    EXPECT_TRUE(is_important_set(g, 1, 3, ab));
    EXPECT_FALSE(is_important_set(g, 1, 3, a));
}

TEST(ImportantSets, MatchOracleOnGrid) {
    auto g = gen_grid(3, 3);
    for (std::size_t p = 0; p <= 4; ++p) {
        std::vector<VertexSet> mine;
        for (const auto& s : enumerate_important_sets(g, 1, 9, p)) mine.push_back(s.members);
        EXPECT_EQ(mine, important_sets_oracle(g, 1, 9, p)) << "p=" << p;
        EXPECT_LE(static_cast<double>(mine.size()), std::pow(4.0, static_cast<double>(p)));
    }
}

TEST(ImportantSets, BranchLimit) {
    EXPECT_TRUE(throws_code([] { enumerate_important_sets(gen_grid(4, 4), 1, 16, 4, nullptr, 2); },
                            Errc::budget_exceeded));
}

TEST(ComputeZ, NoTerminalsGivesEmptySet) {
    auto g = gen_path(3);
    const VertexSet y{2, 3};
    auto z = compute_z(g, y, {}, {}, 1);
    EXPECT_TRUE(z.z.empty());
    EXPECT_EQ(z.apex, 4);
    EXPECT_EQ(z.cut_budget, 4u);
}

TEST(ComputeZ, PathExample) {
    auto g = gen_path(3);
    const VertexSet y{2, 3};
    const VertexSet t1{1};
    auto z = compute_z(g, y, t1, {}, 1);
    EXPECT_EQ(z.z, (VertexSet{1, 2, 3}));
    EXPECT_EQ(z.sets_enumerated, 2u);
}

TEST(ComputeZ, TerminalInsideY) {
    auto g = gen_cycle(4);
    const VertexSet y{1, 2, 3, 4};
    const VertexSet t1{1};
    auto z = compute_z(g, y, t1, {}, 1);
    for (auto v : z.z) EXPECT_NE(v, z.apex);
    EXPECT_TRUE(throws_code([&] { compute_z(g, y, t1, t1, 1); }, Errc::invalid_terminals));
}

TEST(ComputeZ, OverrideBudget) {
    auto g = gen_path(3);
    const VertexSet y{2, 3};
    const VertexSet t1{1};
    auto z = compute_z(g, y, t1, {}, 1, std::size_t{1});
    EXPECT_EQ(z.cut_budget, 1u);
    EXPECT_EQ(z.z, (VertexSet{1}));
}
