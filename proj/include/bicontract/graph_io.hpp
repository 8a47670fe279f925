#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "bicontract/graph.hpp"

namespace bicontract {

/// Contents of an edge-list file:
///
///     c optional comment
///     p edge <n> <m>
///     e <u> <v>          (m lines, 1 <= u, v <= n, u != v)
///     t1 <v>             (optional terminal lines)
///     t2 <v>
///
/// Vertex ids are the file's 1-based numbers.
struct GraphFile {
    Graph graph;
    VertexSet t1;
    VertexSet t2;
};

/// Throws Error(parse_error) with a "line N: ..." message.
GraphFile parse_graph_file(std::string_view text);
Graph parse_graph(std::string_view text);

/// Relabels vertices to 1..n in ascending id order. Terminals are written
/// after the edges.
std::string serialize_graph(const Graph& g, std::span<const Vertex> t1 = {},
                            std::span<const Vertex> t2 = {});

GraphFile read_graph_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

/// Witness files: "e <u> <v>" lines; "c" comments and a leading YES/NO answer
/// line are ignored, so solver output can be fed back in directly.
EdgeSet parse_edge_list(std::string_view text);
std::string serialize_edge_list(std::span<const Edge> edges);

}  // namespace bicontract
