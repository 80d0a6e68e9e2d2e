#include "skelkit/prime_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "skelkit/equivalence.hpp"
#include "skelkit/errors.hpp"

namespace skelkit {
namespace {

bool is_prime_by_trial_division(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

// Every order of an element of S_m: lcm over all partitions of m.
std::set<std::uint64_t> symmetric_group_orders(std::size_t m) {
  std::set<std::uint64_t> orders;
  std::vector<std::size_t> parts;
  // Partitions with non-increasing parts, each part <= max_part.
  auto recurse = [&](auto&& self, std::size_t remaining, std::size_t max_part, std::uint64_t lcm) -> void {
    if (remaining == 0) {
      orders.insert(lcm);
      return;
    }
    for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
      self(self, remaining - part, part, std::lcm(lcm, static_cast<std::uint64_t>(part)));
    }
  };
  recurse(recurse, m, m, 1);
  return orders;
}

}  // namespace

bool PrimeGraph::has_vertex(Prime p) const { return std::binary_search(vertices.begin(), vertices.end(), p); }

bool PrimeGraph::has_edge(Prime p, Prime q) const {
  auto key = std::minmax(p, q);
  return std::binary_search(edges.begin(), edges.end(), std::pair<Prime, Prime>(key.first, key.second));
}

Graph PrimeGraph::to_graph() const {
  std::vector<Edge> mapped;
  auto index = [this](Prime p) {
    return static_cast<Vertex>(std::lower_bound(vertices.begin(), vertices.end(), p) - vertices.begin());
  };
  for (const auto& [p, q] : edges) mapped.emplace_back(index(p), index(q));
  std::vector<std::int64_t> labels(vertices.begin(), vertices.end());
  return Graph(vertices.size(), mapped).with_labels(std::move(labels));
}

std::vector<Prime> primes_up_to(std::size_t m) {
  std::vector<Prime> out;
  if (m < 2) return out;
  std::vector<bool> composite(m + 1, false);
  for (std::size_t i = 2; i <= m; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::size_t j = i * i; j <= m; j += i) composite[j] = true;
  }
  return out;
}

Prime nth_prime(std::size_t k) {
  if (k == 0) return 0;
  std::size_t bound = 16;
  while (true) {
    auto primes = primes_up_to(bound);
    if (primes.size() >= k) return primes[k - 1];
    bound *= 2;
  }
}

PrimeGraph prime_graph_of_sep(const SepSignature& sig) {
  PrimeGraph out;
  out.vertices = primes_up_to(sig.alpha);
  const bool several_classes = sig.class_count >= 2;
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < out.vertices.size(); ++j) {
      const Prime q = out.vertices[i];  // smaller
      const Prime p = out.vertices[j];
      const bool joint = p + q <= sig.alpha;
      const bool split = several_classes && p <= sig.alpha && q <= sig.beta;
      if (joint || split) out.edges.emplace_back(q, p);
    }
  }
  return out;
}

PrimeGraph oracle_prime_graph(const SepSignature& sig) {
  if (sig.alpha > kOracleMaxAlpha) {
    throw CapacityError("oracle_prime_graph: alpha = " + std::to_string(sig.alpha) + " exceeds " +
                        std::to_string(kOracleMaxAlpha));
  }
  PrimeGraph out;

  BigInt order = 1;
  std::size_t total = 0;
  for (std::size_t size : sig.sizes) {
    total += size;
    for (std::size_t k = 2; k <= size; ++k) order *= k;
  }
  for (std::uint64_t c = 2; c <= total; ++c) {
    if (is_prime_by_trial_division(c) && order % c == 0) out.vertices.push_back(c);
  }

  std::vector<std::set<std::uint64_t>> class_orders;
  for (std::size_t size : sig.sizes) class_orders.push_back(symmetric_group_orders(size));

  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < out.vertices.size(); ++j) {
      const std::uint64_t target = out.vertices[i] * out.vertices[j];
      // An element of the direct product has order lcm of its component
      // orders; only components whose order divides pq can contribute.
      std::set<std::uint64_t> reachable{1};
      for (const auto& orders : class_orders) {
        std::set<std::uint64_t> next;
        for (std::uint64_t have : reachable) {
          for (std::uint64_t o : orders) {
            if (target % o == 0) next.insert(std::lcm(have, o));
          }
        }
        reachable = std::move(next);
      }
      if (reachable.contains(target)) out.edges.emplace_back(out.vertices[i], out.vertices[j]);
    }
  }
  return out;
}

bool has_k_clique(const SepSignature& sig, std::size_t k) {
  if (k == 0) throw ArgumentError("has_k_clique: k must be positive");
  const Prime pk = nth_prime(k);
  const Prime pk1 = nth_prime(k - 1);
  if (sig.alpha >= pk + pk1) return true;
  return sig.class_count >= 2 && sig.alpha >= pk && sig.beta >= pk1;
}

std::optional<std::size_t> is_complete_prime_graph(const SepSignature& sig) {
  const std::size_t n = primes_up_to(sig.alpha).size();  // p_n <= alpha < p_{n+1}
  if (n <= 1) return std::nullopt;
  if (sig.beta >= nth_prime(n - 1)) return n;
  return std::nullopt;
}

SepSeries sep_series(const Graph& g) {
  SepSeries series;
  Graph current = g;
  while (true) {
    PrimeGraph next = prime_graph_of_sep(sep_signature(equivalence_classes(current)));
    if (next.empty()) break;
    if (!series.steps.empty()) {
      const PrimeGraph& prev = series.steps.back();
      const bool vertices_shrink =
          next.vertices.size() < prev.vertices.size() &&
          std::includes(prev.vertices.begin(), prev.vertices.end(), next.vertices.begin(), next.vertices.end());
      const bool edges_kept =
          std::includes(prev.edges.begin(), prev.edges.end(), next.edges.begin(), next.edges.end());
      if (!vertices_shrink || !edges_kept) {
        throw InternalError("SEP series failed strict descent at step " + std::to_string(series.steps.size() + 1));
      }
    }
    current = next.to_graph();
    series.steps.push_back(std::move(next));
  }
  return series;
}

}  // namespace skelkit
