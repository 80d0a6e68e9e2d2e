#include "skelkit/generators.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "skelkit/errors.hpp"

namespace skelkit {
namespace {

// Builds a graph from 1-based edge pairs and attaches labels 1..n.
Graph from_one_based(std::size_t n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
  std::vector<std::int64_t> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  return Graph(n, edges).with_labels(std::move(labels));
}

}  // namespace

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw ArgumentError("cycle(" + std::to_string(n) + "): a simple cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph star(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= k; ++v) edges.emplace_back(0, v);
  return Graph(k + 1, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) edges.emplace_back(u, v);
  return Graph(a + b, edges);
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::vector<Edge> edges;
  std::size_t offset = 0;
  for (const auto& g : parts) {
    for (const auto& [u, v] : g.edges()) edges.emplace_back(u + offset, v + offset);
    offset += g.order();
  }
  return Graph(offset, edges);
}

Graph disjoint_union(std::initializer_list<Graph> parts) {
  return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

Graph pineapple(std::size_t n, std::size_t q) {
  if (n == 0 && q > 0) throw ArgumentError("pineapple: pendants need a clique vertex to attach to");
  std::vector<Edge> edges = complete(n).edges();
  for (Vertex p = n; p < n + q; ++p) edges.emplace_back(0, p);
  return Graph(n + q, edges);
}

Graph figure2_graph() {
  return from_one_based(6, {{1, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {5, 6}});
}

Graph figure3_graph() {
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
  for (Vertex center : {6, 7})
    for (Vertex v = 0; v < 6; ++v) edges.emplace_back(v, center);
  return Graph(8, edges);
}

Graph figure4_graph(int panel) {
  switch (panel) {
    case 1:
      return disjoint_union({complete(1), complete(2), complete(3), complete(4)});
    case 2:
      // Second component: vertex 1 keeps a single edge to 2; {0, 2, 3} is a triangle.
      return disjoint_union({complete(3), Graph(4, {{0, 2}, {0, 3}, {1, 2}, {2, 3}})});
    default:
      throw ArgumentError("figure4_graph: panel must be 1 or 2");
  }
}

Graph figure6_graph(int panel) {
  switch (panel) {
    case 1:
      // 0 and {1,2} see {3,4}; 1 and 2 adjacent.
      return Graph(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {1, 2}});
    case 2:
      // Triangle {0,1,2} with three vertices each joined to the whole triangle.
      return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}, {3, 2}, {4, 0}, {4, 1}, {4, 2},
                       {5, 0}, {5, 1}, {5, 2}});
    case 3: {
      // Figure-3 shape with a third center 8 adjacent to center 6.
      std::vector<Edge> edges = figure3_graph().edges();
      for (Vertex v = 0; v < 6; ++v) edges.emplace_back(v, 8);
      edges.emplace_back(6, 8);
      return Graph(9, edges);
    }
    case 4:
      // K_4 on {0,1,2,3}; 4 and 5 each joined to 2 and 3.
      return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 2}, {4, 3}, {5, 2}, {5, 3}});
    case 5:
    case 6: {
      // Four K_2 blocks joined completely in a ring (5) or a path (6).
      std::vector<Edge> edges{{0, 1}, {2, 3}, {4, 5}, {6, 7}};
      const std::size_t links = panel == 5 ? 4 : 3;
      for (std::size_t b = 0; b < links; ++b) {
        const Vertex x = 2 * b;
        const Vertex y = 2 * ((b + 1) % 4);
        for (Vertex i : {x, x + 1})
          for (Vertex j : {y, y + 1}) edges.emplace_back(i, j);
      }
      return Graph(8, edges);
    }
    default:
      throw ArgumentError("figure6_graph: panel must be in 1..6");
  }
}

}  // namespace skelkit
