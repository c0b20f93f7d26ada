#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "foliage/graph.hpp"

namespace foliage {

// Edge-list text: one `u v` pair per line, `#` starts a comment. Labels are
// arbitrary tokens mapped to indices 0..n-1 in first-seen order, so isolated
// vertices are not representable in this format (graph6 covers those).
Graph parse_edge_list(std::istream& in, std::string name = {});
Graph parse_edge_list(const std::string& text, std::string name = {});
std::string emit_edge_list(const Graph& g);

// graph6: the standard bit-packed upper-triangle format. Supports the
// single-byte and the 3-byte (`~`-prefixed) vertex-count headers, n <= 258047.
Graph parse_graph6(const std::string& line, std::string name = {});
std::string emit_graph6(const Graph& g);

/// DOT output. Vertex colorings render as fill colors, edge partitions as
/// edge colors; both optional.
std::string emit_dot(const Graph& g,
                     const std::vector<int>* vertex_classes = nullptr,
                     const std::vector<std::vector<Edge>>* edge_classes = nullptr);

/// Reads one graph from a stream: a graph6 line, or edge-list text.
/// `format` is "g6", "edges", or "auto" (single-token first line => graph6).
Graph read_graph(std::istream& in, const std::string& format = "auto",
                 std::string name = {});

} // namespace foliage
