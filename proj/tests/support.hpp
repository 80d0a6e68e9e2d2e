#pragma once

// Hand-rolled generators shared by the unit tests and the acceptance runner.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "skelkit/graph.hpp"
#include "skelkit/skeleton.hpp"

namespace skelkit::testing {

inline std::size_t pair_count(std::size_t n) { return n * (n == 0 ? 0 : n - 1) / 2; }

/// Labeled graph whose edge set is selected by the bits of `mask`, pairs
/// taken in row order (0,1),(0,2),...,(1,2),...
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++k)
      if ((mask >> k) & 1u) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// Calls f(g) for each of the 2^(n choose 2) labeled graphs on n vertices.
template <typename F>
void for_each_labeled_graph(std::size_t n, F&& f) {
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) f(graph_from_mask(n, mask));
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline Graph shuffled(std::mt19937_64& rng, const Graph& g) {
  const auto perm = random_permutation(rng, g.order());
  return g.relabeled(perm);
}

/// Replaces vertex i of `structure` by a clique of sizes[i] vertices, joins
/// cliques along the edges, then scrambles the vertex ids.
inline Graph blow_up(std::mt19937_64& rng, const Graph& structure, const std::vector<std::size_t>& sizes) {
  return shuffled(rng, reconstruct(Skeleton::from_structure(structure, sizes)));
}

/// Random graph with many twins: a random structure on `k` vertices blown up
/// with node sizes in 1..max_size.
inline Graph random_blow_up(std::mt19937_64& rng, std::size_t k, std::size_t max_size, double p) {
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::vector<std::size_t> sizes(k);
  for (auto& s : sizes) s = size(rng);
  return blow_up(rng, random_graph(rng, k, p), sizes);
}

/// The fixed random set used by the spectral checks: 200 graphs with at most
/// 30 vertices, alternating plain random graphs and blow-ups.
inline std::vector<Graph> random_graph_set(std::uint64_t seed = 20240501, std::size_t count = 200) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  while (out.size() < count) {
    if (out.size() % 2 == 0) {
      std::uniform_int_distribution<std::size_t> order(1, 30);
      out.push_back(random_graph(rng, order(rng), density(rng)));
    } else {
      std::uniform_int_distribution<std::size_t> nodes(1, 10);
      Graph g = random_blow_up(rng, nodes(rng), 4, density(rng));
      if (g.order() <= 30) out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace skelkit::testing
