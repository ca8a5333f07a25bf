#pragma once

#include <iosfwd>
#include <string>

#include "lextor/graph.hpp"

namespace lextor {

// Edge-list text format: first data line `n m`, then m lines `u v` with
// 0-based whitespace-separated endpoints. Lines whose first non-blank
// character is `#` are comments; blank lines are ignored.

/// Throws std::invalid_argument with a line number on malformed input.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

std::string serialize_edge_list(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace lextor
