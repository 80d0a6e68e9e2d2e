#pragma once

#include <string_view>
#include <vector>

#include "skelkit/graph.hpp"

namespace skelkit {

enum class ClassKind {
  ConnectedClique,          // size >= 2, members pairwise adjacent (true twins)
  DisconnectedIndependent,  // size >= 2, members pairwise non-adjacent (false twins)
  Singleton,
};

std::string_view to_string(ClassKind kind);

struct EquivalenceClass {
  VertexSet members;
  ClassKind kind = ClassKind::Singleton;

  std::size_t size() const noexcept { return members.size(); }
  friend bool operator==(const EquivalenceClass&, const EquivalenceClass&) = default;
};

/// Structural-equivalence classes of a graph in canonical order: descending
/// size, ties broken by the smallest member.
class Partition {
 public:
  Partition() = default;
  /// Sorts `classes` canonically. Throws ArgumentError unless the member sets
  /// are non-empty, pairwise disjoint and cover 0..vertex_count-1.
  Partition(std::vector<EquivalenceClass> classes, std::size_t vertex_count);

  const std::vector<EquivalenceClass>& classes() const noexcept { return classes_; }
  /// s(Γ).
  std::size_t class_count() const noexcept { return classes_.size(); }
  std::size_t vertex_count() const noexcept { return class_of_.size(); }
  /// Index into classes() of the class containing v.
  std::size_t class_of(Vertex v) const { return class_of_.at(v); }
  std::vector<std::size_t> sizes() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<EquivalenceClass> classes_;
  std::vector<std::size_t> class_of_;
};

/// Brute force: does swapping u and v map the edge set onto itself?
bool is_transposition_automorphism(const Graph& g, Vertex u, Vertex v);

/// Twin test. Adjacent u, v are equivalent iff N(u)\{v} = N(v)\{u};
/// non-adjacent ones iff N(u) = N(v).
bool are_structurally_equivalent(const Graph& g, Vertex u, Vertex v);

/// Throws InternalError if the pairwise relation is not transitive or a class
/// mixes edges and non-edges.
Partition equivalence_classes(const Graph& g);

}  // namespace skelkit
