#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bicontract {

/// Opaque vertex identity. Ids survive deletions and contractions.
using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

    bool touches(Vertex w) const { return u == w || v == w; }
    Vertex other(Vertex w) const { return w == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeSet = std::vector<Edge>;
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph over stable vertex ids.
///
/// Vertices are kept sorted by id; the position of a vertex in that order is
/// its dense index, which the algorithms use internally for array storage.
/// Values are immutable after construction; every modifying operation returns
/// a new graph.
class Graph {
   public:
    Graph() = default;

    /// Throws Error(invalid_edge) on loops, duplicate edges, or edges whose
    /// endpoints are not in `vertices`; Error(invalid_vertex) on duplicate ids.
    Graph(std::vector<Vertex> vertices, std::vector<Edge> edges);

    /// Vertices 1..n.
    static Graph with_vertices(int n, std::vector<Edge> edges);

    std::size_t num_vertices() const { return ids_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    bool empty() const { return ids_.empty(); }

    std::span<const Vertex> vertices() const { return ids_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(Vertex v) const { return index_of(v).has_value(); }
    bool has_edge(Vertex a, Vertex b) const;
    bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

    std::optional<std::size_t> index_of(Vertex v) const;
    /// Throws Error(invalid_vertex) if absent.
    std::size_t index(Vertex v) const;
    Vertex vertex_at(std::size_t i) const { return ids_[i]; }

    /// Neighbour indices of the vertex at dense index `i`, ascending.
    std::span<const std::uint32_t> adjacent(std::size_t i) const { return adj_[i]; }
    std::size_t degree(Vertex v) const { return adj_[index(v)].size(); }
    VertexSet neighbors(Vertex v) const;

    Vertex max_vertex() const { return ids_.empty() ? 0 : ids_.back(); }

    /// Number of edges with exactly one endpoint in `set` (d_G(X)).
    std::size_t boundary_size(std::span<const Vertex> set) const;
    EdgeSet boundary(std::span<const Vertex> set) const;

    Graph induced_subgraph(std::span<const Vertex> keep) const;
    Graph with_edges(std::vector<Edge> edges) const;

    const std::map<Vertex, std::string>& labels() const { return labels_; }
    std::optional<std::string> label(Vertex v) const;
    Graph with_label(Vertex v, std::string text) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.ids_ == b.ids_ && a.edges_ == b.edges_;
    }

   private:
    std::vector<Vertex> ids_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::uint32_t>> adj_;
    std::map<Vertex, std::string> labels_;
};

/// Records how a contraction merged vertices. Survivor ids are always the
/// smallest original id of their group.
struct ContractionTrace {
    std::vector<std::pair<Vertex, Vertex>> merges;  // (surviving, absorbed)
    std::map<Vertex, VertexSet> origin;             // contracted id -> original ids

    /// Contracted vertex that `original` ended up in.
    Vertex image(Vertex original) const;

    std::map<Vertex, Vertex> image_map() const;
};

struct ContractionResult {
    Graph graph;
    ContractionTrace trace;
};

/// G/S via union-find over (V, S) and quotient construction. Loops are dropped
/// and parallel edges merged. Throws Error(invalid_edge) if S has an edge not
/// in g.
ContractionResult contract_edges(const Graph& g, std::span<const Edge> s);

/// G - e. Throws Error(invalid_edge) if e is absent.
Graph delete_edge(const Graph& g, Edge e);

/// Colors are 1 or 2, aligned with g.vertices().
struct ProperColoring {
    std::vector<std::uint8_t> colors;
};

/// Breadth-first layering per component, rooted at the smallest id which gets
/// color 1. Absent iff g has an odd cycle.
std::optional<ProperColoring> proper_two_coloring(const Graph& g);

bool is_bipartite(const Graph& g);

/// Components as sorted vertex lists, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Whether g[set] is connected (the empty set counts as connected).
bool induces_connected(const Graph& g, std::span<const Vertex> set);

/// Sorted edge list after relabelling vertices 0.. in breadth-first discovery
/// order (neighbours ascending) from the smallest id of each component.
std::vector<std::pair<int, int>> canonical_form(const Graph& g);

}  // namespace bicontract
