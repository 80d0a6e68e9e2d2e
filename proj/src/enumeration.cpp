#include "skelkit/enumeration.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <set>
#include <string_view>
#include <thread>

#include "skelkit/errors.hpp"
#include "skelkit/formats.hpp"
#include "skelkit/generators.hpp"
#include "skelkit/skeleton.hpp"
#include "skelkit/spectral.hpp"

namespace skelkit {
namespace {

constexpr std::size_t pair_count(std::size_t n) { return n * (n == 0 ? 0 : n - 1) / 2; }

class MinimalCode {
 public:
  explicit MinimalCode(const Graph& g) : n_(g.order()), total_bits_(pair_count(n_)) {
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : g.neighbors(u)) adj_[u] |= 1u << v;
    std::array<Vertex, kCanonicalMaxOrder> identity{};
    for (Vertex v = 0; v < n_; ++v) identity[v] = v;
    best_ = encode(identity);
  }

  std::uint64_t run() {
    search(0, 0, 0);
    return best_;
  }

 private:
  std::uint64_t encode(const std::array<Vertex, kCanonicalMaxOrder>& perm) const {
    std::uint64_t code = 0;
    for (std::size_t j = 1; j < n_; ++j)
      for (std::size_t i = 0; i < j; ++i) code = (code << 1) | ((adj_[perm[i]] >> perm[j]) & 1u);
    return code;
  }

  // `code` holds the bits of columns 1..depth-1 of the placed prefix.
  void search(std::size_t depth, std::uint64_t code, std::uint32_t used) {
    if (depth == n_) {
      best_ = std::min(best_, code);
      return;
    }
    const std::size_t bits_after = pair_count(depth + 1);
    std::array<std::pair<std::uint64_t, Vertex>, kCanonicalMaxOrder> candidates{};
    std::size_t count = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (used & (1u << v)) continue;
      std::uint64_t column = 0;
      for (std::size_t i = 0; i < depth; ++i) column = (column << 1) | ((adj_[perm_[i]] >> v) & 1u);
      candidates[count++] = {(code << depth) | column, v};
    }
    // Smallest extension first so good bounds appear early.
    std::sort(candidates.begin(), candidates.begin() + count);
    for (std::size_t c = 0; c < count; ++c) {
      const auto [extended, v] = candidates[c];
      if (extended > (best_ >> (total_bits_ - bits_after))) break;
      perm_[depth] = v;
      search(depth + 1, extended, used | (1u << v));
    }
  }

  std::size_t n_;
  std::size_t total_bits_;
  std::array<std::uint32_t, kCanonicalMaxOrder> adj_{};
  std::array<Vertex, kCanonicalMaxOrder> perm_{};
  std::uint64_t best_ = 0;
};

Graph graph_from_bits(std::size_t n, std::uint64_t bits) {
  std::vector<Edge> edges;
  const std::size_t total = pair_count(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k)
      if ((bits >> (total - 1 - k)) & 1u) edges.emplace_back(i, j);
  return Graph(n, edges);
}

void check_capacity(std::size_t n, std::size_t limit, std::string_view what) {
  if (n > limit) {
    throw CapacityError(std::string(what) + ": n = " + std::to_string(n) + " exceeds " + std::to_string(limit));
  }
}

// Runs `work(begin, end)` over [0, count) split across up to `threads` workers.
template <typename Work>
void parallel_ranges(std::size_t count, unsigned threads, Work work) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    work(0, count, 0);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = std::min(count, t * chunk);
    const std::size_t end = std::min(count, begin + chunk);
    pool.emplace_back(work, begin, end, t);
  }
  for (auto& th : pool) th.join();
}

std::vector<CanonicalForm> extend_by_one_vertex(const std::vector<CanonicalForm>& smaller, unsigned threads) {
  const std::size_t n = smaller.empty() ? 1 : smaller.front().order() + 1;
  std::vector<std::set<CanonicalForm>> found(std::max(1u, threads));
  parallel_ranges(smaller.size(), threads, [&](std::size_t begin, std::size_t end, unsigned slot) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const Graph base = smaller[idx].to_graph();
      const std::vector<Edge> base_edges = base.edges();
      for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<Edge> edges = base_edges;
        for (Vertex v = 0; v + 1 < n; ++v)
          if (mask & (1u << v)) edges.emplace_back(v, n - 1);
        found[slot].insert(canonical_form(Graph(n, edges)));
      }
    }
  });
  std::set<CanonicalForm> merged;
  for (auto& part : found) merged.merge(part);
  return {merged.begin(), merged.end()};
}

struct NamedForm {
  std::string name;
  CanonicalForm form;
};

std::vector<NamedForm> connected_names(std::size_t k) {
  std::vector<NamedForm> out;
  auto add = [&](std::string name, const Graph& g) { out.push_back({std::move(name), canonical_form(g)}); };
  const std::string ks = std::to_string(k);
  if (k >= 1) add("K_" + ks, complete(k));
  if (k >= 3) add("P_" + ks, path(k));
  if (k >= 4) add("C_" + ks, cycle(k));
  for (std::size_t a = 1; a <= k / 2; ++a) {
    const std::size_t b = k - a;
    add("K_{" + std::to_string(a) + "," + std::to_string(b) + "}", complete_bipartite(a, b));
  }
  return out;
}

}  // namespace

std::string CanonicalForm::bitstring() const {
  const std::size_t total = pair_count(n_);
  std::string out(total, '0');
  for (std::size_t k = 0; k < total; ++k)
    if ((bits_ >> (total - 1 - k)) & 1u) out[k] = '1';
  return out;
}

Graph CanonicalForm::to_graph() const { return graph_from_bits(n_, bits_); }

std::string CanonicalForm::graph6() const { return to_graph6(to_graph()); }

CanonicalForm canonical_form(const Graph& g) {
  check_capacity(g.order(), kCanonicalMaxOrder, "canonical_form");
  return CanonicalForm(g.order(), MinimalCode(g).run());
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

unsigned default_thread_count() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SKELKIT_THREADS")) {
    unsigned cap = 0;
    std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
    if (ec == std::errc{} && ptr == s.data() + s.size() && cap > 0) threads = std::min(threads, cap);
  }
  return threads;
}

std::vector<CanonicalForm> enumerate_graphs(std::size_t n, unsigned threads) {
  check_capacity(n, kCanonicalMaxOrder, "enumerate_graphs");
  if (threads == 0) threads = default_thread_count();
  std::vector<CanonicalForm> level{CanonicalForm(0, 0)};
  for (std::size_t k = 1; k <= n; ++k) level = extend_by_one_vertex(level, threads);
  return level;
}

std::vector<CanonicalForm> enumerate_graphs_exhaustive(std::size_t n) {
  check_capacity(n, kExhaustiveMaxOrder, "enumerate_graphs_exhaustive");
  const std::size_t total = pair_count(n);
  std::set<CanonicalForm> found;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << total); ++bits) {
    found.insert(canonical_form(graph_from_bits(n, bits)));
  }
  return {found.begin(), found.end()};
}

std::optional<std::string> structure_name(const CanonicalForm& form) {
  const std::size_t n = form.order();
  if (n == 0) return std::nullopt;
  std::vector<NamedForm> table = connected_names(n);
  // jK_1 + X for a named connected X on n - j >= 2 vertices.
  for (std::size_t j = 1; j + 2 <= n; ++j) {
    const std::string prefix = (j == 1 ? std::string() : std::to_string(j)) + "K_1+";
    for (const auto& base : connected_names(n - j)) {
      table.push_back({prefix + base.name, canonical_form(disjoint_union({empty_graph(j), base.form.to_graph()}))});
    }
  }
  if (n >= 2) table.push_back({std::to_string(n) + "K_1", canonical_form(empty_graph(n))});
  for (const auto& entry : table)
    if (entry.form == form) return entry.name;
  return std::nullopt;
}

std::vector<CatalogEntry> enumerate_skeleton_structures(std::size_t n, unsigned threads) {
  check_capacity(n, kCatalogMaxOrder, "enumerate_skeleton_structures");
  std::vector<CatalogEntry> out;
  for (const auto& form : enumerate_graphs(n, threads)) {
    const Graph g = form.to_graph();
    if (!is_skeleton_structure(g)) continue;
    out.push_back({form, structure_name(form), rank_I_plus_A(g), lambda(g)});
  }
  return out;
}

std::map<std::size_t, std::vector<CatalogEntry>> rank_catalog(std::size_t n, unsigned threads) {
  check_capacity(n, kCatalogMaxOrder, "rank_catalog");
  std::map<std::size_t, std::vector<CatalogEntry>> out;
  for (std::size_t k = 1; k <= n; ++k) {
    for (auto& entry : enumerate_skeleton_structures(k, threads)) out[entry.rank_I_plus_A].push_back(std::move(entry));
  }
  return out;
}

}  // namespace skelkit
