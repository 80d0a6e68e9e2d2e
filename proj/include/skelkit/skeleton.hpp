#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "skelkit/graph.hpp"

namespace skelkit {

/// A super-node stands for the complete subgraph K_size on its members.
struct SuperNode {
  std::size_t size = 0;
  VertexSet members;

  friend bool operator==(const SuperNode&, const SuperNode&) = default;
};

/// A reconfiguration of a graph: super-nodes are complete induced subgraphs and
/// a super-edge means the two member sets are completely joined.
///
/// Nodes are kept in canonical order (descending size, then smallest member),
/// so two skeletons of the same graph compare equal iff they group vertices
/// the same way.
class Skeleton {
 public:
  Skeleton() = default;
  /// Sorts nodes canonically and remaps `edges` accordingly. Member sets must
  /// partition 0..N-1 with N the total size, and each size must equal its
  /// member count; violations and bad edge indices throw ArgumentError.
  Skeleton(std::vector<SuperNode> nodes, std::vector<Edge> edges);

  /// Skeleton over a structure graph with the given node sizes. Members are
  /// assigned as consecutive blocks in structure-vertex order.
  static Skeleton from_structure(const Graph& structure, std::span<const std::size_t> sizes);

  const std::vector<SuperNode>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  bool adjacent(std::size_t a, std::size_t b) const { return structure_.adjacent(a, b); }
  /// The skeleton read as a plain graph, one vertex per super-node.
  const Graph& structure() const noexcept { return structure_; }

  friend bool operator==(const Skeleton& a, const Skeleton& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<SuperNode> nodes_;
  std::vector<Edge> edges_;
  Graph structure_;
};

/// Every vertex as its own K_1 node, every edge as a super-edge.
Skeleton trivial_reconfiguration(const Graph& g);

/// Ω(Γ) from the equivalence classes: one node per clique class and per
/// singleton, one K_1 node per member of an independent class. Throws
/// InternalError if two resulting nodes are neither completely joined nor
/// fully separated.
Skeleton complete_skeleton(const Graph& g);

/// SΩ(Γ).
Graph skeleton_structure(const Graph& g);

/// Merges adjacent nodes a and b whose neighborhoods agree outside the pair.
/// Throws ConflationError naming the offending neighbor otherwise.
Skeleton conflate(const Skeleton& skel, std::size_t a, std::size_t b);

/// All pairs (a, b), a < b, that conflate() accepts.
std::vector<std::pair<std::size_t, std::size_t>> conflatable_pairs(const Skeleton& skel);

/// Ω(Γ) by conflating from the trivial reconfiguration until nothing merges,
/// always taking the first conflatable pair.
Skeleton skeleton_by_fixed_point(const Graph& g);
/// Same, picking a pseudo-random conflatable pair at each step.
Skeleton skeleton_by_fixed_point(const Graph& g, std::uint64_t seed);

/// True iff no two adjacent vertices are structurally equivalent.
bool is_skeleton_structure(const Graph& g);

/// Expands each node to K_size on its member ids and joins nodes completely
/// along super-edges. reconstruct(complete_skeleton(g)) == g.
Graph reconstruct(const Skeleton& skel);

}  // namespace skelkit
