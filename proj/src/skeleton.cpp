#include "skelkit/skeleton.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "skelkit/equivalence.hpp"
#include "skelkit/errors.hpp"

namespace skelkit {

Skeleton::Skeleton(std::vector<SuperNode> nodes, std::vector<Edge> edges) {
  std::size_t total = 0;
  for (auto& node : nodes) {
    if (node.size == 0) throw ArgumentError("skeleton: super-node of size 0");
    std::sort(node.members.begin(), node.members.end());
    if (node.members.size() != node.size) throw ArgumentError("skeleton: size does not match member count");
    total += node.size;
  }
  std::vector<bool> covered(total, false);
  for (const auto& node : nodes) {
    for (Vertex v : node.members) {
      if (v >= total || covered[v]) throw ArgumentError("skeleton: member sets must partition 0..N-1");
      covered[v] = true;
    }
  }

  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (nodes[a].size != nodes[b].size) return nodes[a].size > nodes[b].size;
    return nodes[a].members.front() < nodes[b].members.front();
  });
  std::vector<std::size_t> position(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  nodes_.reserve(nodes.size());
  for (std::size_t old : order) nodes_.push_back(std::move(nodes[old]));
  for (auto [a, b] : edges) {
    if (a >= position.size() || b >= position.size() || a == b) {
      throw ArgumentError("skeleton: invalid super-edge {" + std::to_string(a) + ", " + std::to_string(b) + "}");
    }
    edges_.push_back(std::minmax(position[a], position[b]));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  structure_ = Graph(nodes_.size(), edges_);
}

Skeleton Skeleton::from_structure(const Graph& structure, std::span<const std::size_t> sizes) {
  if (sizes.size() != structure.order()) throw ArgumentError("from_structure: one size per structure vertex");
  std::vector<SuperNode> nodes;
  Vertex next = 0;
  for (std::size_t size : sizes) {
    SuperNode node{size, {}};
    for (std::size_t k = 0; k < size; ++k) node.members.push_back(next++);
    nodes.push_back(std::move(node));
  }
  return Skeleton(std::move(nodes), structure.edges());
}

Skeleton trivial_reconfiguration(const Graph& g) {
  std::vector<SuperNode> nodes;
  nodes.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) nodes.push_back({1, {v}});
  return Skeleton(std::move(nodes), g.edges());
}

Skeleton complete_skeleton(const Graph& g) {
  const Partition partition = equivalence_classes(g);
  std::vector<SuperNode> nodes;
  for (const auto& c : partition.classes()) {
    if (c.kind == ClassKind::DisconnectedIndependent) {
      for (Vertex v : c.members) nodes.push_back({1, {v}});
    } else {
      nodes.push_back({c.size(), c.members});
    }
  }

  std::vector<Edge> super_edges;
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      std::size_t joined = 0;
      for (Vertex u : nodes[a].members)
        for (Vertex v : nodes[b].members) joined += g.adjacent(u, v) ? 1 : 0;
      if (joined == nodes[a].size * nodes[b].size) {
        super_edges.emplace_back(a, b);
      } else if (joined != 0) {
        throw InternalError("super-nodes containing " + std::to_string(nodes[a].members.front()) + " and " +
                            std::to_string(nodes[b].members.front()) + " are only partially joined");
      }
    }
  }
  return Skeleton(std::move(nodes), std::move(super_edges));
}

Graph skeleton_structure(const Graph& g) { return complete_skeleton(g).structure(); }

Skeleton conflate(const Skeleton& skel, std::size_t a, std::size_t b) {
  const std::size_t count = skel.node_count();
  if (a >= count || b >= count) throw ArgumentError("conflate: node index out of range");
  if (a == b) throw ConflationError("conflate: cannot conflate node " + std::to_string(a) + " with itself");
  if (!skel.adjacent(a, b)) {
    throw ConflationError("conflate: nodes " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
  }
  const Graph& s = skel.structure();
  for (std::size_t c = 0; c < count; ++c) {
    if (c == a || c == b) continue;
    if (s.adjacent(a, c) != s.adjacent(b, c)) {
      const std::size_t with = s.adjacent(a, c) ? a : b;
      const std::size_t without = with == a ? b : a;
      throw ConflationError("conflate: node " + std::to_string(c) + " is adjacent to node " + std::to_string(with) +
                            " but not to node " + std::to_string(without));
    }
  }

  std::vector<SuperNode> nodes;
  std::vector<std::size_t> renumber(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i == b) continue;
    renumber[i] = nodes.size();
    nodes.push_back(skel.nodes()[i]);
  }
  renumber[b] = renumber[a];
  SuperNode& merged = nodes[renumber[a]];
  merged.size += skel.nodes()[b].size;
  merged.members.insert(merged.members.end(), skel.nodes()[b].members.begin(), skel.nodes()[b].members.end());

  std::vector<Edge> edges;
  for (auto [x, y] : skel.edges()) {
    if (renumber[x] != renumber[y]) edges.emplace_back(renumber[x], renumber[y]);
  }
  return Skeleton(std::move(nodes), std::move(edges));
}

std::vector<std::pair<std::size_t, std::size_t>> conflatable_pairs(const Skeleton& skel) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const Graph& s = skel.structure();
  for (auto [a, b] : skel.edges()) {
    bool same = true;
    for (std::size_t c = 0; c < s.order() && same; ++c) {
      if (c != a && c != b && s.adjacent(a, c) != s.adjacent(b, c)) same = false;
    }
    if (same) out.emplace_back(a, b);
  }
  return out;
}

namespace {

template <typename Pick>
Skeleton conflate_until_stable(const Graph& g, Pick pick) {
  Skeleton skel = trivial_reconfiguration(g);
  while (true) {
    auto pairs = conflatable_pairs(skel);
    if (pairs.empty()) return skel;
    auto [a, b] = pairs[pick(pairs.size())];
    skel = conflate(skel, a, b);
  }
}

}  // namespace

Skeleton skeleton_by_fixed_point(const Graph& g) {
  return conflate_until_stable(g, [](std::size_t) { return std::size_t{0}; });
}

Skeleton skeleton_by_fixed_point(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return conflate_until_stable(g, [&rng](std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
  });
}

bool is_skeleton_structure(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    if (are_structurally_equivalent(g, u, v)) return false;
  }
  return true;
}

Graph reconstruct(const Skeleton& skel) {
  std::size_t total = 0;
  for (const auto& node : skel.nodes()) total += node.size;
  std::vector<Edge> edges;
  for (const auto& node : skel.nodes()) {
    for (std::size_t i = 0; i < node.members.size(); ++i)
      for (std::size_t j = i + 1; j < node.members.size(); ++j) edges.emplace_back(node.members[i], node.members[j]);
  }
  for (auto [a, b] : skel.edges()) {
    for (Vertex u : skel.nodes()[a].members)
      for (Vertex v : skel.nodes()[b].members) edges.emplace_back(u, v);
  }
  return Graph(total, edges);
}

}  // namespace skelkit
