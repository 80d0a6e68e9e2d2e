#include <doctest.h>

#include <random>
#include <set>

#include "skelkit/equivalence.hpp"
#include "skelkit/errors.hpp"
#include "skelkit/generators.hpp"
#include "support.hpp"

using namespace skelkit;

namespace {

// Independent of the library: swap u and v in every edge and compare sets.
bool swap_preserves_edges(const Graph& g, Vertex u, Vertex v) {
  auto image = [&](Vertex x) { return x == u ? v : x == v ? u : x; };
  std::set<Edge> original, mapped;
  for (auto [a, b] : g.edges()) {
    original.insert({a, b});
    Vertex x = image(a), y = image(b);
    mapped.insert({std::min(x, y), std::max(x, y)});
  }
  return original == mapped;
}

// N^i(u) \ {v} = N^i(v) \ {u} for every 1 <= i <= diameter.
bool same_distance_profile(const Graph& g, Vertex u, Vertex v) {
  const DistanceTable d(g);
  for (std::size_t i = 1; i <= d.diameter(); ++i) {
    VertexSet a = ith_neighborhood(g, u, i), b = ith_neighborhood(g, v, i);
    std::erase(a, v);
    std::erase(b, u);
    if (a != b) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> member_lists(const Partition& p) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& c : p.classes()) out.push_back(c.members);
  return out;
}

void check_partition_laws(const Graph& g) {
  const Partition p = equivalence_classes(g);
  std::vector<bool> seen(g.order(), false);
  for (const auto& c : p.classes())
    for (Vertex v : c.members) {
      REQUIRE_FALSE(seen[v]);
      seen[v] = true;
    }
  REQUIRE(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      REQUIRE((p.class_of(u) == p.class_of(v)) == swap_preserves_edges(g, u, v));
  for (const auto& c : p.classes()) {
    std::size_t adjacent_pairs = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) adjacent_pairs += g.adjacent(c.members[i], c.members[j]);
    const std::size_t pairs = c.size() * (c.size() - 1) / 2;
    switch (c.kind) {
      case ClassKind::Singleton: REQUIRE(c.size() == 1); break;
      case ClassKind::ConnectedClique: REQUIRE((c.size() >= 2 && adjacent_pairs == pairs)); break;
      case ClassKind::DisconnectedIndependent: REQUIRE((c.size() >= 2 && adjacent_pairs == 0)); break;
    }
  }
  for (std::size_t i = 1; i < p.class_count(); ++i) {
    const auto& a = p.classes()[i - 1];
    const auto& b = p.classes()[i];
    REQUIRE((a.size() > b.size() || (a.size() == b.size() && a.members.front() < b.members.front())));
  }
}

}  // namespace

TEST_CASE("transposition automorphism oracle") {
  const Graph f2 = figure2_graph();
  auto id = [&](int label) { return *f2.find_label(label); };
  CHECK(is_transposition_automorphism(f2, id(3), id(4)));
  CHECK_FALSE(is_transposition_automorphism(f2, id(1), id(6)));
  CHECK_FALSE(is_transposition_automorphism(f2, id(2), id(5)));
  CHECK(is_transposition_automorphism(complete(3), 0, 2));
  CHECK_THROWS_AS(is_transposition_automorphism(f2, 1, 1), ArgumentError);
  CHECK_THROWS_AS(is_transposition_automorphism(f2, 0, 6), ArgumentError);
}

TEST_CASE("twin test") {
  const Graph pine = pineapple(4, 2);
  CHECK(are_structurally_equivalent(pine, 4, 5));
  CHECK_FALSE(are_structurally_equivalent(pine, 4, 0));
  CHECK(are_structurally_equivalent(pine, 1, 2));
  CHECK_FALSE(are_structurally_equivalent(path(4), 0, 3));
  CHECK(are_structurally_equivalent(empty_graph(2), 0, 1));
  CHECK_THROWS_AS(are_structurally_equivalent(pine, 2, 2), ArgumentError);
}

TEST_CASE("equivalence classes of the fixtures") {
  const Partition pine = equivalence_classes(pineapple(4, 2));
  CHECK(pine.sizes() == std::vector<std::size_t>{3, 2, 1});
  CHECK(pine.classes()[0] == EquivalenceClass{{1, 2, 3}, ClassKind::ConnectedClique});
  CHECK(pine.classes()[1] == EquivalenceClass{{4, 5}, ClassKind::DisconnectedIndependent});
  CHECK(pine.classes()[2] == EquivalenceClass{{0}, ClassKind::Singleton});

  const Graph f2 = figure2_graph();
  const Partition p2 = equivalence_classes(f2);
  std::vector<std::vector<std::int64_t>> labeled;
  for (const auto& c : p2.classes()) {
    std::vector<std::int64_t> ls;
    for (Vertex v : c.members) ls.push_back(f2.label(v));
    labeled.push_back(ls);
  }
  CHECK(labeled == std::vector<std::vector<std::int64_t>>{{3, 4}, {1}, {2}, {5}, {6}});

  for (std::size_t n = 1; n <= 6; ++n) CHECK(equivalence_classes(complete(n)).sizes() == std::vector<std::size_t>{n});
  CHECK(equivalence_classes(Graph(0)).class_count() == 0);

  const Partition isolated = equivalence_classes(empty_graph(3));
  CHECK(isolated.classes()[0].kind == ClassKind::DisconnectedIndependent);

  const Partition f3 = equivalence_classes(figure3_graph());
  CHECK(member_lists(f3) == std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4, 5}, {6, 7}});
  CHECK(f3.classes()[2].kind == ClassKind::DisconnectedIndependent);
}

TEST_CASE("Partition validates its input") {
  CHECK_THROWS_AS(Partition({{{0, 1}, ClassKind::ConnectedClique}}, 3), ArgumentError);
  CHECK_THROWS_AS(Partition({{{0, 1}, ClassKind::ConnectedClique}, {{1, 2}, ClassKind::ConnectedClique}}, 3),
                  ArgumentError);
  CHECK_THROWS_AS(Partition({{{}, ClassKind::Singleton}, {{0}, ClassKind::Singleton}}, 1), ArgumentError);
  const Partition p({{{2}, ClassKind::Singleton}, {{0, 1}, ClassKind::ConnectedClique}}, 3);
  CHECK(p.classes()[0].members == VertexSet{0, 1});
  CHECK(p.class_of(2) == 1);
}

TEST_CASE("twin test agrees with the brute-force swap on all graphs up to 6 vertices") {
  for (std::size_t n = 2; n <= 6; ++n) {
    testing::for_each_labeled_graph(n, [&](const Graph& g) {
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
          const bool oracle = swap_preserves_edges(g, u, v);
          REQUIRE(is_transposition_automorphism(g, u, v) == oracle);
          REQUIRE(are_structurally_equivalent(g, u, v) == oracle);
        }
    });
  }
}

TEST_CASE("partition laws on random graphs up to 40 vertices") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
    const Graph g = trial % 2 ? testing::random_graph(rng, n, 0.4)
                              : testing::random_blow_up(rng, std::max<std::size_t>(1, n / 4), 4, 0.5);
    check_partition_laws(g);
  }
}

TEST_CASE("equivalent vertices of a connected graph are within distance two and share distance profiles") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = testing::random_blow_up(rng, 5, 3, 0.6);
    if (!is_connected(g)) continue;
    const DistanceTable d(g);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v) {
        const bool eq = are_structurally_equivalent(g, u, v);
        REQUIRE(eq == same_distance_profile(g, u, v));
        if (eq) REQUIRE(*d.at(u, v) <= 2);
      }
  }
}

TEST_CASE("class kind names") {
  CHECK(to_string(ClassKind::ConnectedClique) == "clique");
  CHECK(to_string(ClassKind::DisconnectedIndependent) == "independent");
  CHECK(to_string(ClassKind::Singleton) == "singleton");
}
