#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "skelkit/graph.hpp"
#include "skelkit/sep_group.hpp"

namespace skelkit {

using Prime = std::uint64_t;

/// Gruenberg-Kegel graph: vertices are primes, edge pq when the group has an
/// element of order pq.
struct PrimeGraph {
  std::vector<Prime> vertices;                  // ascending
  std::vector<std::pair<Prime, Prime>> edges;  // p < q, lexicographic

  bool empty() const noexcept { return vertices.empty(); }
  bool has_vertex(Prime p) const;
  bool has_edge(Prime p, Prime q) const;
  /// Ordinary graph with vertex i standing for vertices[i], labeled by it.
  Graph to_graph() const;

  friend bool operator==(const PrimeGraph&, const PrimeGraph&) = default;
};

/// Ascending primes <= m.
std::vector<Prime> primes_up_to(std::size_t m);
/// p_k, 1-based (p_1 = 2). nth_prime(0) is 0 so p_{k-1} reads naturally at k = 1.
Prime nth_prime(std::size_t k);

/// Closed form. Vertices: primes <= alpha. Edge pq (p > q) iff p + q <= alpha,
/// or, with two or more classes, p <= alpha and q <= beta.
PrimeGraph prime_graph_of_sep(const SepSignature& sig);

/// Largest alpha the element-order oracle accepts.
inline constexpr std::size_t kOracleMaxAlpha = 30;

/// Prime graph of the product of symmetric groups built from the definition:
/// vertices are the primes dividing the product of factorials, and pq is an
/// edge iff some choice of one cycle type per class has lcm exactly pq.
/// Throws CapacityError when alpha exceeds kOracleMaxAlpha.
PrimeGraph oracle_prime_graph(const SepSignature& sig);

/// Whether the prime graph of SEP has a k-clique, from the closed form
/// alpha >= p_k + p_{k-1}, or alpha >= p_k and beta >= p_{k-1} with two or more classes.
bool has_k_clique(const SepSignature& sig, std::size_t k);

/// n > 1 such that the prime graph is K_n, i.e. p_{n+1} > alpha >= p_n and
/// beta >= p_{n-1}; nullopt otherwise.
std::optional<std::size_t> is_complete_prime_graph(const SepSignature& sig);

/// Γ̃(1), Γ̃(2), ... where each step is the prime graph of the SEP group of the
/// previous one. The empty graph that ends every series is not stored.
struct SepSeries {
  std::vector<PrimeGraph> steps;

  std::size_t length() const noexcept { return steps.size(); }
  /// Last non-empty element; nullptr for an empty series.
  const PrimeGraph* minimal() const noexcept { return steps.empty() ? nullptr : &steps.back(); }
};

/// Throws InternalError if consecutive steps fail V(i) ⊊ V(i-1) and E(i) ⊆ E(i-1).
SepSeries sep_series(const Graph& g);

}  // namespace skelkit
