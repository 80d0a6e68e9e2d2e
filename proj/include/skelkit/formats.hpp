#pragma once

#include <span>
#include <string>
#include <string_view>

#include "skelkit/graph.hpp"

namespace skelkit {

/// Edge-list text: an optional first line `n <count>`, then one `u v` pair per
/// line. `#` starts a comment. Without a header the vertex count is 1 + max id.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// graph6: size header then the upper-triangular adjacency bitstring in
/// column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, offset 63.
/// Surrounding whitespace and an optional `>>graph6<<` header are accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

enum class InputFormat { EdgeList, Graph6 };
Graph read_graph(std::string_view text, InputFormat format);

/// Graphviz output with vertices in id order. `colors`, when non-empty, gives
/// a fill color per vertex.
std::string to_dot(const Graph& g, std::span<const std::string> colors = {},
                   std::string_view name = "G");

}  // namespace skelkit
