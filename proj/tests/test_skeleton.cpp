#include <doctest.h>

#include <random>

#include "skelkit/enumeration.hpp"
#include "skelkit/equivalence.hpp"
#include "skelkit/errors.hpp"
#include "skelkit/generators.hpp"
#include "skelkit/skeleton.hpp"
#include "support.hpp"

using namespace skelkit;

namespace {

std::vector<std::size_t> node_sizes(const Skeleton& s) {
  std::vector<std::size_t> out;
  for (const auto& node : s.nodes()) out.push_back(node.size);
  return out;
}

// Checks the defining conditions of a complete skeleton directly on g.
void check_skeleton_of(const Graph& g, const Skeleton& skel) {
  for (const auto& node : skel.nodes())
    for (std::size_t i = 0; i < node.members.size(); ++i)
      for (std::size_t j = i + 1; j < node.members.size(); ++j)
        REQUIRE(g.adjacent(node.members[i], node.members[j]));
  for (std::size_t a = 0; a < skel.node_count(); ++a)
    for (std::size_t b = a + 1; b < skel.node_count(); ++b) {
      std::size_t joined = 0;
      for (Vertex u : skel.nodes()[a].members)
        for (Vertex v : skel.nodes()[b].members) joined += g.adjacent(u, v);
      const std::size_t all = skel.nodes()[a].size * skel.nodes()[b].size;
      REQUIRE(joined == (skel.adjacent(a, b) ? all : 0));
    }
  REQUIRE(conflatable_pairs(skel).empty());
}

}  // namespace

TEST_CASE("Skeleton validates and sorts nodes") {
  const Skeleton s({{1, {2}}, {2, {0, 1}}}, {{0, 1}});
  CHECK(s.nodes()[0].members == VertexSet{0, 1});
  CHECK(s.edges() == std::vector<Edge>{{0, 1}});
  CHECK_THROWS_AS(Skeleton({{2, {0}}}, {}), ArgumentError);
  CHECK_THROWS_AS(Skeleton({{1, {0}}, {1, {0}}}, {}), ArgumentError);
  CHECK_THROWS_AS(Skeleton({{1, {1}}}, {}), ArgumentError);
  CHECK_THROWS_AS(Skeleton({{1, {0}}}, {{0, 1}}), ArgumentError);

  const std::vector<std::size_t> sizes{2, 1, 3};
  const Skeleton built = Skeleton::from_structure(path(3), sizes);
  CHECK(node_sizes(built) == std::vector<std::size_t>{3, 2, 1});
  CHECK(built.nodes()[0].members == VertexSet{3, 4, 5});
  CHECK(built.structure() == Graph(3, {{0, 2}, {1, 2}}));
  const std::vector<std::size_t> short_sizes{1};
  CHECK_THROWS_AS(Skeleton::from_structure(path(3), short_sizes), ArgumentError);
}

TEST_CASE("complete skeletons of the fixtures") {
  const Skeleton f3 = complete_skeleton(figure3_graph());
  CHECK(node_sizes(f3) == std::vector<std::size_t>{3, 3, 1, 1});
  CHECK(are_isomorphic(f3.structure(), cycle(4)));

  const Skeleton pine = complete_skeleton(pineapple(4, 2));
  CHECK(node_sizes(pine) == std::vector<std::size_t>{3, 1, 1, 1});
  CHECK(are_isomorphic(pine.structure(), star(3)));

  for (std::size_t n = 1; n <= 6; ++n) CHECK(node_sizes(complete_skeleton(complete(n))) == std::vector<std::size_t>{n});
  CHECK(complete_skeleton(Graph(0)).node_count() == 0);
  CHECK(skeleton_structure(empty_graph(3)) == empty_graph(3));
}

TEST_CASE("conflation") {
  const Skeleton k2 = conflate(trivial_reconfiguration(complete(2)), 0, 1);
  CHECK(node_sizes(k2) == std::vector<std::size_t>{2});

  Skeleton f3 = trivial_reconfiguration(figure3_graph());
  CHECK(f3.node_count() == 8);
  f3 = conflate(f3, 0, 1);  // {0,1} becomes node 0, vertex 2 is node 1
  f3 = conflate(f3, 0, 1);
  CHECK(f3.nodes()[0] == SuperNode{3, {0, 1, 2}});

  const Skeleton c4 = trivial_reconfiguration(cycle(4));
  CHECK(conflatable_pairs(c4).empty());
  CHECK_THROWS_WITH_AS(conflate(c4, 0, 1), doctest::Contains("node"), ConflationError);
  CHECK_THROWS_AS(conflate(c4, 0, 2), ConflationError);
  CHECK_THROWS_AS(conflate(c4, 1, 1), ConflationError);
  CHECK_THROWS_AS(conflate(c4, 0, 9), ArgumentError);
}

TEST_CASE("fixed-point construction") {
  CHECK(skeleton_by_fixed_point(figure3_graph()) == complete_skeleton(figure3_graph()));
  CHECK(node_sizes(skeleton_by_fixed_point(complete(4))) == std::vector<std::size_t>{4});
  CHECK(skeleton_by_fixed_point(path(5)) == trivial_reconfiguration(path(5)));
}

TEST_CASE("skeleton structures") {
  CHECK(is_skeleton_structure(path(5)));
  CHECK_FALSE(is_skeleton_structure(complete(3)));
  CHECK(is_skeleton_structure(cycle(4)));
  CHECK(is_skeleton_structure(empty_graph(4)));
  CHECK(is_skeleton_structure(Graph(0)));
  CHECK_FALSE(is_skeleton_structure(pineapple(4, 2)));
}

TEST_CASE("reconstruct") {
  const Skeleton f3 = complete_skeleton(figure3_graph());
  CHECK(reconstruct(f3) == figure3_graph());
  const std::vector<std::size_t> sizes{3, 1, 3, 1};
  CHECK(are_isomorphic(reconstruct(Skeleton::from_structure(cycle(4), sizes)), figure3_graph()));
  const std::vector<std::size_t> five{5};
  CHECK(reconstruct(Skeleton::from_structure(complete(1), five)) == complete(5));
  const std::vector<std::size_t> ab{2, 3};
  CHECK(are_isomorphic(reconstruct(Skeleton::from_structure(empty_graph(2), ab)),
                       disjoint_union({complete(2), complete(3)})));
}

TEST_CASE("skeleton properties on every labeled graph up to 6 vertices") {
  for (std::size_t n = 0; n <= 6; ++n) {
    testing::for_each_labeled_graph(n, [&](const Graph& g) {
      const Skeleton skel = complete_skeleton(g);
      check_skeleton_of(g, skel);
      REQUIRE(reconstruct(skel) == g);
      REQUIRE(skeleton_by_fixed_point(g) == skel);
      const Graph s = skel.structure();
      REQUIRE(is_skeleton_structure(s));
      const Skeleton again = complete_skeleton(s);
      REQUIRE(again.node_count() == s.order());
      REQUIRE(again.structure() == s);
    });
  }
}

TEST_CASE("conflation order does not matter") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = testing::random_blow_up(rng, 1 + trial % 5, 3, 0.5);
    if (g.order() > 12) continue;
    const Skeleton expected = complete_skeleton(g);
    for (std::uint64_t seed = 0; seed < 5; ++seed) REQUIRE(skeleton_by_fixed_point(g, rng() ^ seed) == expected);
  }
}

TEST_CASE("blow-ups recover their structure") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph s = testing::random_graph(rng, 1 + trial % 7, 0.5);
    if (!is_skeleton_structure(s)) continue;
    std::vector<std::size_t> sizes(s.order());
    for (auto& a : sizes) a = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const Graph g = testing::blow_up(rng, s, sizes);
    REQUIRE(are_isomorphic(skeleton_structure(g), s));
  }
}
