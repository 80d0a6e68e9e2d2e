#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "skelkit/equivalence.hpp"
#include "skelkit/errors.hpp"
#include "skelkit/formats.hpp"
#include "skelkit/generators.hpp"
#include "skelkit/skeleton.hpp"
#include "skelkit/spectral.hpp"
#include "support.hpp"

using namespace skelkit;
using Rational = boost::multiprecision::cpp_rational;

namespace {

// Plain Gauss-Jordan over the rationals.
std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t oracle_rank(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
  for (Vertex v = 0; v < n; ++v) {
    m[v][v] = 1;
    for (Vertex u : g.neighbors(v)) m[v][u] = 1;
  }
  return rational_rank(std::move(m));
}

IntMatrix matrix(const std::vector<std::vector<int>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("exact rank") {
  CHECK(exact_rank(IntMatrix(0)) == 0);
  CHECK(exact_rank(matrix({{0, 0}, {0, 0}})) == 0);
  CHECK(exact_rank(matrix({{1, 2}, {2, 4}})) == 1);
  CHECK(exact_rank(matrix({{0, 1}, {1, 0}})) == 2);
  CHECK(exact_rank(matrix({{0, 0, 1}, {0, 0, 2}, {1, 1, 0}})) == 2);
  CHECK(exact_rank(matrix({{2, 3, 5}, {7, 11, 13}, {17, 19, 23}})) == 3);
  CHECK(exact_rank(matrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
}

TEST_CASE("rank of I + A") {
  CHECK(rank_I_plus_A(complete(6)) == 1);
  CHECK(rank_I_plus_A(path(5)) == 4);
  CHECK(rank_I_plus_A(cycle(4)) == 4);
  CHECK(rank_I_plus_A(figure4_graph(1)) == 4);
  CHECK(rank_I_plus_A(Graph(0)) == 0);
  CHECK(skeleton_rank(figure3_graph()) == rank_I_plus_A(cycle(4)));
}

TEST_CASE("lambda") {
  CHECK(lambda(path(5)) == 1);
  CHECK(lambda(cycle(4)) == 0);
  CHECK(lambda(complete(7)) == 0);
  CHECK(lambda(Graph(0)) == 0);
}

TEST_CASE("multiplicity of -1") {
  CHECK(minus_one_multiplicity(figure4_graph(1)) == 6);
  CHECK(minus_one_multiplicity(figure4_graph(2)) == 3);
  CHECK(minus_one_multiplicity(path(3)) == 0);
  CHECK(charpoly_multiplicity_oracle(complete(4)) == 3);
  CHECK(charpoly_multiplicity_oracle(path(5)) == 1);
  CHECK(charpoly_multiplicity_oracle(pineapple(4, 2)) == 2);
  CHECK(charpoly_multiplicity_oracle(figure4_graph(1)) == 6);
  CHECK(charpoly_multiplicity_oracle(figure4_graph(2)) == 3);
}

TEST_CASE("characteristic polynomial") {
  CHECK(characteristic_polynomial(complete(4)) == std::vector<BigInt>{-3, -8, -6, 0, 1});
  // x^3 - 2x
  CHECK(characteristic_polynomial(path(3)) == std::vector<BigInt>{0, -2, 0, 1});
  CHECK(characteristic_polynomial(Graph(0)) == std::vector<BigInt>{1});
  CHECK(characteristic_polynomial(empty_graph(2)) == std::vector<BigInt>{0, 0, 1});
  // Petersen: (x - 3)(x - 1)^5 (x + 2)^4
  const auto petersen = characteristic_polynomial(parse_graph6("IheA@GUAo"));
  CHECK(petersen == std::vector<BigInt>{48, -160, 120, 120, -165, -24, 75, 0, -15, 0, 1});
  CHECK_THROWS_AS(characteristic_polynomial(empty_graph(kCharpolyMaxOrder + 1)), CapacityError);
}

TEST_CASE("spectral report") {
  const SpectralReport r = spectral_report(figure3_graph());
  CHECK(r == SpectralReport{8, 4, 4, 0, 4});
  const SpectralReport p = spectral_report(path(5));
  CHECK(p == SpectralReport{5, 4, 5, 1, 1});
}

TEST_CASE("rank identities against rational elimination") {
  std::mt19937_64 rng(41);
  for (std::size_t n = 0; n <= 5; ++n) {
    testing::for_each_labeled_graph(n, [&](const Graph& g) {
      const std::size_t r = rank_I_plus_A(g);
      REQUIRE(r == oracle_rank(g));
      const Graph s = skeleton_structure(g);
      REQUIRE(r == oracle_rank(s));
      REQUIRE(r == s.order() - lambda(g));
      REQUIRE(minus_one_multiplicity(g) == charpoly_multiplicity_oracle(g));
    });
  }
  for (const Graph& g : testing::random_graph_set(43, 40)) {
    const std::size_t r = rank_I_plus_A(g);
    REQUIRE(r == oracle_rank(g));
    REQUIRE(r <= skeleton_structure(g).order());
    REQUIRE(r == rank_I_plus_A(testing::shuffled(rng, g)));
  }
}

TEST_CASE("twin rows in I + A") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_blow_up(rng, 4, 3, 0.5);
    const IntMatrix m = identity_plus_adjacency(g);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v) {
        if (!are_structurally_equivalent(g, u, v)) continue;
        std::size_t differing = 0;
        for (Vertex k = 0; k < g.order(); ++k) differing += m(u, k) != m(v, k);
        REQUIRE(differing == (g.adjacent(u, v) ? 0u : 2u));
      }
  }
}
