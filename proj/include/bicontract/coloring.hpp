#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bicontract/graph.hpp"

namespace bicontract {

/// Total assignment of colors {1, 2} to a fixed, sorted vertex set. A coloring
/// only applies to graphs with exactly that vertex set.
class TwoColoring {
   public:
    TwoColoring() = default;
    /// Throws Error(invalid_coloring) on duplicate vertices or colors outside {1, 2}.
    TwoColoring(std::vector<Vertex> vertices, std::vector<std::uint8_t> colors);

    static TwoColoring uniform(const Graph& g, int color);
    static TwoColoring from_map(const std::map<Vertex, int>& colors);
    static TwoColoring from_proper(const Graph& g, const ProperColoring& proper);

    std::span<const Vertex> vertices() const { return vertices_; }
    std::span<const std::uint8_t> colors() const { return colors_; }
    std::size_t size() const { return vertices_.size(); }

    /// Throws Error(invalid_coloring) if v is not colored.
    int color(Vertex v) const;
    TwoColoring with_color(Vertex v, int color) const;

    bool covers_exactly(const Graph& g) const;
    /// Throws Error(invalid_coloring) unless covers_exactly(g).
    void require_host(const Graph& g) const;

    /// T1 colored 1 and T2 colored 2.
    bool extends(std::span<const Vertex> t1, std::span<const Vertex> t2) const;

    std::map<Vertex, int> to_map() const;

    friend bool operator==(const TwoColoring&, const TwoColoring&) = default;

   private:
    std::vector<Vertex> vertices_;
    std::vector<std::uint8_t> colors_;
};

struct ColoringAnalysis {
    EdgeSet bad_edges;
    std::vector<VertexSet> good_components;
    std::vector<VertexSet> monochromatic_components;
    std::size_t cost = 0;
};

/// Cost is the sum over monochromatic components X of |X| - 1.
ColoringAnalysis analyze(const Graph& g, const TwoColoring& phi);

/// |V| - number of monochromatic components, without building the analysis.
std::size_t coloring_cost(const Graph& g, const TwoColoring& phi);

/// Edge set S with the checked property that G/S is bipartite.
class ContractionSet {
   public:
    /// Throws Error(invalid_edge) for edges not in g and
    /// Error(precondition_violated) if G/S is not bipartite.
    static ContractionSet certify(const Graph& g, EdgeSet edges);

    const EdgeSet& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }

   private:
    explicit ContractionSet(EdgeSet edges) : edges_(std::move(edges)) {}
    EdgeSet edges_;
};

/// A spanning forest of every monochromatic component; |result| = cost(phi).
ContractionSet coloring_to_contraction_set(const Graph& g, const TwoColoring& phi);

/// Colors each vertex with the color its image gets in a proper coloring of
/// G/S. Throws Error(precondition_violated) if G/S is not bipartite.
TwoColoring contraction_set_to_coloring(const Graph& g, std::span<const Edge> s);

struct WitnessCheck {
    bool accepted = false;
    std::string reason;
};

/// Accepts iff |s| <= k, every edge of s is in g, and G/S is bipartite.
WitnessCheck check_witness(const Graph& g, std::span<const Edge> s, std::size_t k);

/// "<vertex> <color>" per line, ascending vertex order.
std::string serialize_coloring(const TwoColoring& phi);
TwoColoring parse_coloring(std::string_view text);

}  // namespace bicontract
