#include "skelkit/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "skelkit/errors.hpp"

namespace skelkit {
namespace {

void check_pair(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order()) throw ArgumentError("vertex out of range");
  if (u == v) throw ArgumentError("u and v must be distinct (got " + std::to_string(u) + " twice)");
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::string_view to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::ConnectedClique:
      return "clique";
    case ClassKind::DisconnectedIndependent:
      return "independent";
    case ClassKind::Singleton:
      return "singleton";
  }
  return "unknown";
}

Partition::Partition(std::vector<EquivalenceClass> classes, std::size_t vertex_count)
    : classes_(std::move(classes)), class_of_(vertex_count, SIZE_MAX) {
  for (auto& c : classes_) {
    if (c.members.empty()) throw ArgumentError("partition: empty class");
    std::sort(c.members.begin(), c.members.end());
  }
  std::sort(classes_.begin(), classes_.end(), [](const EquivalenceClass& a, const EquivalenceClass& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.members.front() < b.members.front();
  });
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    for (Vertex v : classes_[i].members) {
      if (v >= vertex_count) throw ArgumentError("partition: vertex " + std::to_string(v) + " out of range");
      if (class_of_[v] != SIZE_MAX) throw ArgumentError("partition: vertex " + std::to_string(v) + " repeated");
      class_of_[v] = i;
    }
  }
  if (std::find(class_of_.begin(), class_of_.end(), SIZE_MAX) != class_of_.end()) {
    throw ArgumentError("partition: classes do not cover every vertex");
  }
}

std::vector<std::size_t> Partition::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(classes_.size());
  for (const auto& c : classes_) out.push_back(c.size());
  return out;
}

bool is_transposition_automorphism(const Graph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  auto swap = [u, v](Vertex x) { return x == u ? v : (x == v ? u : x); };
  // The swap is a bijection on vertex pairs, so mapping E into E suffices.
  for (const auto& [a, b] : g.edges()) {
    if (!g.adjacent(swap(a), swap(b))) return false;
  }
  return true;
}

bool are_structurally_equivalent(const Graph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  const auto& nu = g.neighbors(u);
  const auto& nv = g.neighbors(v);
  auto iu = nu.begin();
  auto iv = nv.begin();
  while (true) {
    while (iu != nu.end() && *iu == v) ++iu;
    while (iv != nv.end() && *iv == u) ++iv;
    if (iu == nu.end() || iv == nv.end()) return iu == nu.end() && iv == nv.end();
    if (*iu != *iv) return false;
    ++iu;
    ++iv;
  }
}

Partition equivalence_classes(const Graph& g) {
  const std::size_t n = g.order();
  DisjointSets sets(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (are_structurally_equivalent(g, u, v)) sets.unite(u, v);
    }
  }

  std::vector<VertexSet> groups(n);
  for (Vertex v = 0; v < n; ++v) groups[sets.find(v)].push_back(v);

  std::vector<EquivalenceClass> classes;
  for (auto& members : groups) {
    if (members.empty()) continue;
    EquivalenceClass c{std::move(members), ClassKind::Singleton};
    if (c.size() >= 2) {
      std::size_t adjacent_pairs = 0;
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
          if (!are_structurally_equivalent(g, c.members[i], c.members[j])) {
            throw InternalError("structural equivalence failed transitivity on {" +
                                std::to_string(c.members[i]) + ", " + std::to_string(c.members[j]) + "}");
          }
          if (g.adjacent(c.members[i], c.members[j])) ++adjacent_pairs;
        }
      }
      const std::size_t pairs = c.size() * (c.size() - 1) / 2;
      if (adjacent_pairs == pairs) {
        c.kind = ClassKind::ConnectedClique;
      } else if (adjacent_pairs == 0) {
        c.kind = ClassKind::DisconnectedIndependent;
      } else {
        throw InternalError("equivalence class containing vertex " + std::to_string(c.members.front()) +
                            " is neither a clique nor independent");
      }
    }
    classes.push_back(std::move(c));
  }
  return Partition(std::move(classes), n);
}

}  // namespace skelkit
