#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "clawdec/graph.hpp"

namespace clawdec {

// graph6: size header then the upper adjacency triangle, column by column,
// packed 6 bits per printable byte (offset 63). An optional ">>graph6<<"
// prefix is accepted. Parsing throws MalformedGraph6 with the byte position.
Graph parse_graph6(std::string_view text);
// Throws NotSimple for multigraphs.
std::string write_graph6(const Graph& g);

// Plain edge list: "n m" header, then one "u v" line per edge, 0-indexed.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// Graphviz export, for looking at graphs only.
std::string write_dot(const Graph& g, std::string_view name = "G");

enum class GraphFormat { Graph6, EdgeList, Named };

// Sniffs graph6 / edge list / named data file from the content.
GraphFormat detect_format(std::string_view text);

std::string read_text_file(const std::string& path);

}  // namespace clawdec
