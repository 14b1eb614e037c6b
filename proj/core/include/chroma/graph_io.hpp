#pragma once

#include <string>
#include <string_view>

#include "chroma/graph.hpp"

namespace chroma {

// graph6, short form (n <= 62). An optional ">>graph6<<" prefix is
// accepted. Parse errors carry the offending byte offset.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// DIMACS .col: "p edge N M" header then "e u v" lines, 1-based vertices.
// Duplicate edges collapse; errors carry the 1-based line number.
Graph parse_dimacs(std::string_view text);
std::string to_dimacs(const Graph& g);

// Plain edge list, "u v" per line, 0-based; '#' starts a comment. Order is
// max index + 1 (trailing isolated vertices are not representable).
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace chroma
