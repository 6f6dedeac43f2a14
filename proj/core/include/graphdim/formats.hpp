#pragma once

#include "graphdim/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace graphdim {

enum class GraphFormat { EdgeList, Graph6 };

/// "edges" / "edge_list" or "graph6" / "g6"; nullopt otherwise.
std::optional<GraphFormat> parse_format_name(std::string_view name);
/// Guess from a file name: *.g6 / *.graph6 are graph6, everything else edge list.
GraphFormat format_from_path(std::string_view path);

/// Edge list text: one "u v" pair per line, '#' starts a comment, blank lines
/// are skipped, and an optional "n <count>" line fixes the vertex count
/// (otherwise max id + 1). Throws ParseError with the offending line number.
Graph parse_edge_list(std::string_view text);
/// "n <count>" header followed by the edges in lexicographic order.
std::string serialize_edge_list(const Graph& g);

/// One graph6 record; a leading ">>graph6<<" header and trailing newline are
/// accepted. Throws ParseError on bad characters or a truncated bit stream.
Graph parse_graph6(std::string_view text);
/// Every nonblank line of `text` as a graph6 record.
std::vector<Graph> parse_graph6_lines(std::string_view text);
/// Standard graph6 encoding without header or newline.
std::string serialize_graph6(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

/// Plain undirected DOT text.
std::string to_dot(const Graph& g, std::string_view name = "G");

Graph read_graph_file(const std::string& path, std::optional<GraphFormat> format = std::nullopt);
std::string read_text_file(const std::string& path);

} // namespace graphdim
