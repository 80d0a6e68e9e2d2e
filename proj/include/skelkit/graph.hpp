#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace skelkit {

using Vertex = std::size_t;
/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;
/// Unordered pair stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Adjacency lists are kept sorted, so neighbor
/// sets compare with `==` and intersect with the standard set algorithms.
/// Optional integer display labels (figure labels, primes of a prime graph)
/// travel with the graph but never affect structural equality.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Throws ArgumentError on self-loops or out-of-range endpoints.
  /// Duplicate edges collapse.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::int64_t>& labels() const noexcept { return labels_; }
  /// Display label of `v`; the id itself when the graph carries no labels.
  std::int64_t label(Vertex v) const;
  std::optional<Vertex> find_label(std::int64_t label) const;
  /// Copy carrying `labels` (one per vertex).
  Graph with_labels(std::vector<std::int64_t> labels) const;

  /// Image of the graph under v -> mapping[v]; labels follow their vertices.
  Graph relabeled(std::span<const Vertex> mapping) const;
  /// Subgraph induced on `vertices`, renumbered in the given order.
  Graph induced(std::span<const Vertex> vertices) const;

  /// Structural equality: same order and same edge set. Labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
  std::vector<std::int64_t> labels_;
};

/// Graph distance; std::nullopt means unreachable.
using Distance = std::optional<std::size_t>;

/// All-pairs BFS distances.
class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g);

  std::size_t order() const noexcept { return n_; }
  Distance at(Vertex u, Vertex v) const { return d_.at(u * n_ + v); }
  /// Largest finite distance; 0 for graphs without edges.
  std::size_t diameter() const noexcept { return diameter_; }
  bool connected() const noexcept { return connected_; }

 private:
  std::size_t n_;
  std::vector<Distance> d_;
  std::size_t diameter_ = 0;
  bool connected_ = true;
};

std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

/// N^i(v): vertices at distance exactly i from v. N^0(v) = {v}.
VertexSet ith_neighborhood(const Graph& g, Vertex v, std::size_t i);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
Graph complement(const Graph& g);

}  // namespace skelkit
