#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skelkit/graph.hpp"

namespace skelkit {

inline constexpr std::size_t kCanonicalMaxOrder = 8;

/// Isomorphism-class representative: the lexicographically smallest
/// upper-triangular adjacency bitstring (graph6 column order) over all vertex
/// permutations. The first bit of the string is the most significant bit of
/// `bits`, so integer order is string order.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  CanonicalForm(std::size_t n, std::uint64_t bits) : n_(n), bits_(bits) {}

  std::size_t order() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }
  /// "0110..." in column order.
  std::string bitstring() const;
  Graph to_graph() const;
  std::string graph6() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  std::size_t n_ = 0;
  std::uint64_t bits_ = 0;
};

/// Exhaustive minimization with prefix pruning. Throws CapacityError for
/// n > kCanonicalMaxOrder.
CanonicalForm canonical_form(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

/// Worker threads for enumeration: hardware concurrency, capped by the
/// SKELKIT_THREADS environment variable when it holds a positive integer.
unsigned default_thread_count();

/// Every isomorphism class on n vertices, ascending by canonical form. Classes
/// on n vertices are found by attaching a new vertex, with every possible
/// neighbor set, to each class on n - 1 vertices. `threads` = 0 uses
/// default_thread_count(). Throws CapacityError for n > kCanonicalMaxOrder.
std::vector<CanonicalForm> enumerate_graphs(std::size_t n, unsigned threads = 0);

inline constexpr std::size_t kExhaustiveMaxOrder = 7;

/// Same result by canonicalizing all 2^(n(n-1)/2) labeled graphs.
/// Throws CapacityError for n > kExhaustiveMaxOrder.
std::vector<CanonicalForm> enumerate_graphs_exhaustive(std::size_t n);

struct CatalogEntry {
  CanonicalForm form;
  std::optional<std::string> name;
  std::size_t rank_I_plus_A = 0;
  std::size_t lambda = 0;

  /// The human name, or the graph6 code when the graph has no name.
  std::string display_name() const { return name ? *name : form.graph6(); }
};

/// Common name ("P_4", "K_1+P_3", "K_{1,3}", "3K_1", ...) when the form matches
/// a generator-produced graph of the same order.
std::optional<std::string> structure_name(const CanonicalForm& form);

/// Skeleton structures (no adjacent structurally equivalent pair) on exactly
/// n vertices, annotated with rank(I + A) and Λ.
std::vector<CatalogEntry> enumerate_skeleton_structures(std::size_t n, unsigned threads = 0);

inline constexpr std::size_t kCatalogMaxOrder = 7;

/// Skeleton structures on 1..n vertices grouped by rank(I + A).
/// Throws CapacityError for n > kCatalogMaxOrder.
std::map<std::size_t, std::vector<CatalogEntry>> rank_catalog(std::size_t n, unsigned threads = 0);

}  // namespace skelkit
