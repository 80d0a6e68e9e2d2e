#include "skelkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "skelkit/errors.hpp"

namespace skelkit {

Graph::Graph(std::size_t n) : adj_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw ArgumentError("edge {" + std::to_string(u) + ", " + std::to_string(v) +
                          "} has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) {
      throw ArgumentError("self-loop at vertex " + std::to_string(u) + " (simple graphs only)");
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    edge_count_ += nb.size();
  }
  edge_count_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::int64_t Graph::label(Vertex v) const {
  if (v >= order()) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
  return labels_.empty() ? static_cast<std::int64_t>(v) : labels_[v];
}

std::optional<Vertex> Graph::find_label(std::int64_t label) const {
  if (labels_.empty()) {
    if (label >= 0 && static_cast<std::size_t>(label) < order()) return static_cast<Vertex>(label);
    return std::nullopt;
  }
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

Graph Graph::with_labels(std::vector<std::int64_t> labels) const {
  if (!labels.empty() && labels.size() != order()) {
    throw ArgumentError("label count " + std::to_string(labels.size()) +
                        " does not match vertex count " + std::to_string(order()));
  }
  Graph out = *this;
  out.labels_ = std::move(labels);
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> mapping) const {
  const std::size_t n = order();
  if (mapping.size() != n) throw ArgumentError("relabeling must cover every vertex");
  std::vector<bool> seen(n, false);
  for (Vertex v : mapping) {
    if (v >= n || seen[v]) throw ArgumentError("relabeling is not a bijection");
    seen[v] = true;
  }
  std::vector<Edge> mapped;
  mapped.reserve(edge_count_);
  for (const auto& [u, v] : edges()) mapped.emplace_back(mapping[u], mapping[v]);
  Graph out(n, mapped);
  if (!labels_.empty()) {
    out.labels_.resize(n);
    for (Vertex v = 0; v < n; ++v) out.labels_[mapping[v]] = labels_[v];
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<std::size_t> position(order(), SIZE_MAX);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= order()) throw ArgumentError("induced: vertex out of range");
    if (position[vertices[i]] != SIZE_MAX) throw ArgumentError("induced: repeated vertex");
    position[vertices[i]] = i;
  }
  std::vector<Edge> kept;
  for (const auto& [u, v] : edges()) {
    if (position[u] != SIZE_MAX && position[v] != SIZE_MAX) kept.emplace_back(position[u], position[v]);
  }
  Graph out(vertices.size(), kept);
  if (!labels_.empty()) {
    for (Vertex v : vertices) out.labels_.push_back(labels_[v]);
  }
  return out;
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.order()) throw ArgumentError("bfs: source out of range");
  std::vector<Distance> dist(g.order());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceTable::DistanceTable(const Graph& g) : n_(g.order()), d_(n_ * n_) {
  for (Vertex s = 0; s < n_; ++s) {
    auto row = bfs_distances(g, s);
    for (Vertex t = 0; t < n_; ++t) {
      d_[s * n_ + t] = row[t];
      if (row[t]) {
        diameter_ = std::max(diameter_, *row[t]);
      } else {
        connected_ = false;
      }
    }
  }
}

VertexSet ith_neighborhood(const Graph& g, Vertex v, std::size_t i) {
  auto dist = bfs_distances(g, v);
  VertexSet out;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (dist[w] && *dist[w] == i) out.push_back(w);
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const Distance& d) { return d.has_value(); });
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.size() == n * (n == 0 ? 0 : n - 1) / 2;
}

Graph complement(const Graph& g) {
  std::vector<Edge> missing;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) missing.emplace_back(u, v);
    }
  }
  return Graph(g.order(), missing).with_labels(g.labels());
}

}  // namespace skelkit
