#pragma once

#include <span>

#include "skelkit/graph.hpp"

namespace skelkit {

Graph empty_graph(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
/// Requires n >= 3.
Graph cycle(std::size_t n);
/// K_{1,k}: center 0, leaves 1..k.
Graph star(std::size_t k);
/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Vertex ids are shifted so the parts occupy consecutive blocks in order.
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(std::initializer_list<Graph> parts);

/// K_n with q pendant vertices hanging off vertex 0. Pendants are n..n+q-1.
Graph pineapple(std::size_t n, std::size_t q);

// Fixture graphs. Vertex v carries display label v + 1 where the source
// drawing numbers its vertices.

/// Six vertices: 12 23 24 25 34 35 45 56 (1-based labels).
Graph figure2_graph();
/// Two triangles {0,1,2} and {3,4,5}; centers 6 and 7 each joined to all six
/// triangle vertices, not to each other.
Graph figure3_graph();
/// panel 1: K_1 + K_2 + K_3 + K_4. panel 2: K_3 + (K_4 minus the two edges of
/// a K_{2,1}).
Graph figure4_graph(int panel);
/// The six connected examples whose skeleton structures are, in order,
/// K_{2,2}, K_{1,3}, C_4, K_{1,3}, C_4, P_4.
Graph figure6_graph(int panel);

}  // namespace skelkit
