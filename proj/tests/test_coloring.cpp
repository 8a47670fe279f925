#include <gtest/gtest.h>

#include "bicontract/coloring.hpp"
#include "bicontract/generators.hpp"
#include "bicontract/oracle.hpp"
#include "support.hpp"

using namespace bicontract;
using testing_support::cost_by_definition;
using testing_support::make_graph;
using testing_support::throws_code;

namespace {

TwoColoring colors_of(std::initializer_list<int> colors) {
    std::map<Vertex, int> m;
    Vertex v = 1;
    for (int c : colors) m[v++] = c;
    return TwoColoring::from_map(m);
}

}  // namespace

TEST(TwoColoring, Validation) {
    EXPECT_TRUE(throws_code([] { TwoColoring({1, 2}, {1, 3}); }, Errc::invalid_coloring));
    EXPECT_TRUE(throws_code([] { TwoColoring({1, 1}, {1, 2}); }, Errc::invalid_coloring));
    auto phi = colors_of({1, 2, 1});
    EXPECT_EQ(phi.color(2), 2);
    EXPECT_TRUE(throws_code([&] { phi.color(4); }, Errc::invalid_coloring));
    EXPECT_EQ(phi.with_color(2, 1).color(2), 1);
    EXPECT_TRUE(phi.covers_exactly(gen_path(3)));
    EXPECT_FALSE(phi.covers_exactly(gen_path(4)));
    EXPECT_TRUE(throws_code([&] { phi.require_host(gen_path(4)); }, Errc::invalid_coloring));
    const VertexSet t1{1, 3};
    const VertexSet t2{2};
    EXPECT_TRUE(phi.extends(t1, t2));
    EXPECT_FALSE(phi.extends(t2, t1));
}

TEST(Analyze, ProperColoringCostsNothing) {
    auto g = gen_grid(3, 3);
    auto phi = TwoColoring::from_proper(g, *proper_two_coloring(g));
    auto a = analyze(g, phi);
    EXPECT_EQ(a.cost, 0u);
    EXPECT_TRUE(a.bad_edges.empty());
    EXPECT_EQ(a.monochromatic_components.size(), 9u);
}

TEST(Analyze, UniformColoringOfConnectedGraph) {
    auto g = gen_petersen();
    auto a = analyze(g, TwoColoring::uniform(g, 1));
    EXPECT_EQ(a.cost, 9u);
    EXPECT_EQ(a.bad_edges.size(), 15u);
    EXPECT_EQ(a.monochromatic_components.size(), 1u);
}

TEST(Analyze, CycleWithOneBadEdge) {
    auto g = gen_cycle(5);
    auto a = analyze(g, colors_of({1, 2, 1, 2, 2}));
    EXPECT_EQ(a.cost, 1u);
    EXPECT_EQ(a.bad_edges, (EdgeSet{Edge{4, 5}}));
    EXPECT_EQ(a.monochromatic_components,
              (std::vector<VertexSet>{{1}, {2}, {3}, {4, 5}}));
    EXPECT_EQ(a.good_components.size(), 1u);
}

TEST(Analyze, CostMatchesDefinitionOnRandomColorings) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto g = gen_random(8, 0.4, seed);
        std::map<Vertex, int> m;
        for (auto v : g.vertices()) m[v] = ((seed * 7 + static_cast<std::uint64_t>(v) * 13) >> 2) % 2 + 1;
        auto phi = TwoColoring::from_map(m);
        auto a = analyze(g, phi);
        EXPECT_EQ(a.cost, cost_by_definition(g, m));
        EXPECT_EQ(a.cost, g.num_vertices() - a.monochromatic_components.size());
        EXPECT_EQ(coloring_cost(g, phi), a.cost);
    }
}

TEST(ContractionSet, FromProperColoringIsEmpty) {
    auto g = gen_complete_bipartite(2, 3);
    auto phi = TwoColoring::from_proper(g, *proper_two_coloring(g));
    EXPECT_EQ(coloring_to_contraction_set(g, phi).size(), 0u);
}

TEST(ContractionSet, UniformTriangleContractsToAPoint) {
    auto g = gen_complete(3);
    auto s = coloring_to_contraction_set(g, TwoColoring::uniform(g, 1));
    EXPECT_EQ(s.size(), 2u);
    EXPECT_EQ(contract_edges(g, s.edges()).graph.num_vertices(), 1u);
}

TEST(ContractionSet, CycleColoringGivesItsBadEdge) {
    auto g = gen_cycle(5);
    auto s = coloring_to_contraction_set(g, colors_of({1, 2, 1, 2, 2}));
    EXPECT_EQ(s.edges(), (EdgeSet{Edge{4, 5}}));
    EXPECT_TRUE(is_bipartite(contract_edges(g, s.edges()).graph));
}

TEST(ContractionSet, CertifyRejectsNonBipartiteQuotient) {
    auto g = gen_complete(4);
    EXPECT_TRUE(throws_code([&] { ContractionSet::certify(g, {Edge{1, 2}}); }, Errc::precondition_violated));
    EXPECT_TRUE(throws_code([&] { ContractionSet::certify(g, {Edge{1, 9}}); }, Errc::invalid_edge));
    EXPECT_EQ(ContractionSet::certify(g, {Edge{1, 2}, Edge{1, 3}}).size(), 2u);
}

TEST(ContractionToColoring, CycleWithOneContraction) {
    auto g = gen_cycle(5);
    const EdgeSet s{Edge{1, 2}};
    auto phi = contraction_set_to_coloring(g, s);
    EXPECT_LE(analyze(g, phi).cost, 1u);
}

TEST(ContractionToColoring, K4WithTwoAdjacentEdges) {
    auto g = gen_complete(4);
    const EdgeSet s{Edge{1, 2}, Edge{1, 3}};
    EXPECT_EQ(analyze(g, contraction_set_to_coloring(g, s)).cost, 2u);
    const EdgeSet one{Edge{1, 2}};
    EXPECT_TRUE(throws_code([&] { contraction_set_to_coloring(g, one); }, Errc::precondition_violated));
}

TEST(ContractionToColoring, EmptySetOnBipartiteGraph) {
    auto g = gen_grid(2, 4);
    EXPECT_EQ(analyze(g, contraction_set_to_coloring(g, {})).cost, 0u);
}

// Both directions of the duality on every small connected graph: a coloring
// of cost c gives c contractions and a set s gives cost at most |s|.
TEST(Duality, RoundTripsOnCatalog) {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : connected_graph_catalog(n)) {
            auto best = brute_force_coloring(g);
            auto s = coloring_to_contraction_set(g, best.coloring);
            EXPECT_EQ(s.size(), best.cost);
            auto back = contraction_set_to_coloring(g, s.edges());
            EXPECT_LE(coloring_cost(g, back), s.size());
        }
    }
}

TEST(Witness, Checks) {
    auto g = gen_cycle(5);
    const EdgeSet one{Edge{1, 2}};
    EXPECT_TRUE(check_witness(g, one, 1).accepted);
    EXPECT_FALSE(check_witness(g, {}, 1).accepted);
    EXPECT_FALSE(check_witness(g, one, 0).accepted);
    const EdgeSet ghost{Edge{1, 3}};
    auto r = check_witness(g, ghost, 1);
    EXPECT_FALSE(r.accepted);
    EXPECT_NE(r.reason.find("1"), std::string::npos);
}

TEST(ColoringText, RoundTrip) {
    auto phi = colors_of({1, 2, 2, 1});
    EXPECT_EQ(serialize_coloring(phi), "1 1\n2 2\n3 2\n4 1\n");
    EXPECT_EQ(parse_coloring(serialize_coloring(phi)), phi);
    EXPECT_TRUE(throws_code([] { parse_coloring("1 3\n"); }, Errc::parse_error));
}

TEST(Generators, Shapes) {
    EXPECT_EQ(gen_cycle(5).num_edges(), 5u);
    EXPECT_TRUE(is_bipartite(gen_complete_bipartite(3, 3)));
    EXPECT_EQ(gen_complete_bipartite(3, 3).num_edges(), 9u);
    EXPECT_EQ(gen_complete(5).num_edges(), 10u);
    EXPECT_EQ(gen_star(4).degree(1), 4u);
    EXPECT_EQ(gen_grid(3, 4).num_edges(), 17u);
    auto p = gen_petersen();
    EXPECT_EQ(p.num_edges(), 15u);
    for (auto v : p.vertices()) EXPECT_EQ(p.degree(v), 3u);
    EXPECT_EQ(gen_random(8, 0.4, 7), gen_random(8, 0.4, 7));
    EXPECT_TRUE(is_bipartite(gen_random_bipartite(10, 0.5, 3)));
}

TEST(Generators, CatalogCounts) {
    const std::size_t expected[] = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        auto graphs = connected_graph_catalog(n);
        EXPECT_EQ(graphs.size(), expected[n - 1]);
        for (const auto& g : graphs) EXPECT_TRUE(is_connected(g));
    }
}
