#include "skelkit/sep_group.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "skelkit/errors.hpp"

namespace skelkit {
namespace {

// Sub-cycles are enumerated over subsets of a cycle's support.
constexpr std::size_t kMaxWitnessCycleLength = 16;

}  // namespace

SepSignature SepSignature::from_sizes(std::vector<std::size_t> sizes) {
  if (std::find(sizes.begin(), sizes.end(), 0u) != sizes.end()) {
    throw ArgumentError("signature: class sizes must be positive");
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  SepSignature sig;
  sig.class_count = sizes.size();
  sig.alpha = sizes.empty() ? 0 : sizes[0];
  sig.beta = sizes.size() < 2 ? 0 : sizes[1];
  sig.sizes = std::move(sizes);
  return sig;
}

SepSignature sep_signature(const Partition& p) { return SepSignature::from_sizes(p.sizes()); }

BigInt sep_order(const SepSignature& sig) {
  BigInt order = 1;
  for (std::size_t size : sig.sizes) {
    for (std::size_t k = 2; k <= size; ++k) order *= k;
  }
  return order;
}

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (Vertex v : image_) {
    if (v >= image_.size() || hit[v]) throw ArgumentError("permutation image is not a bijection");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(const std::vector<std::vector<Vertex>>& cycles, std::size_t n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto& cyc : cycles) {
    for (Vertex v : cyc) {
      if (v >= n) throw ArgumentError("cycle element " + std::to_string(v) + " outside domain of size " + std::to_string(n));
      if (used[v]) throw ArgumentError("element " + std::to_string(v) + " appears in more than one cycle position");
      used[v] = true;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) image[cyc[i]] = cyc[(i + 1) % cyc.size()];
  }
  return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t n) {
  std::vector<std::vector<Vertex>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
  };
  skip_ws();
  if (text.substr(i) == "id") return identity(n);
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("cycle notation: expected '(' at offset " + std::to_string(i));
    ++i;
    std::vector<Vertex> cyc;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i == text.size()) throw ParseError("cycle notation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc{}) throw ParseError("cycle notation: expected a vertex id at offset " + std::to_string(i));
      i = static_cast<std::size_t>(ptr - text.data());
      cyc.push_back(value);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  try {
    return from_cycles(cycles, n);
  } catch (const ArgumentError& e) {
    throw ParseError(std::string("cycle notation: ") + e.what());
  }
}

bool Permutation::is_identity() const {
  for (Vertex v = 0; v < image_.size(); ++v)
    if (image_[v] != v) return false;
  return true;
}

std::vector<std::vector<Vertex>> Permutation::cycles() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(image_.size(), false);
  for (Vertex start = 0; start < image_.size(); ++start) {
    if (seen[start] || image_[start] == start) continue;
    std::vector<Vertex> cyc;
    for (Vertex v = start; !seen[v]; v = image_[v]) {
      seen[v] = true;
      cyc.push_back(v);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cyc) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << ')';
  }
  return out.str();
}

bool is_automorphism(const Graph& g, const Permutation& sigma) {
  if (sigma.domain_size() != g.order()) throw ArgumentError("permutation domain does not match vertex count");
  for (const auto& [u, v] : g.edges()) {
    if (!g.adjacent(sigma(u), sigma(v))) return false;
  }
  return true;
}

bool contains(const Partition& p, const Permutation& sigma) {
  if (sigma.domain_size() != p.vertex_count()) {
    throw ArgumentError("permutation acts on " + std::to_string(sigma.domain_size()) +
                        " points but the graph has " + std::to_string(p.vertex_count()) + " vertices");
  }
  for (Vertex v = 0; v < sigma.domain_size(); ++v) {
    if (p.class_of(v) != p.class_of(sigma(v))) return false;
  }
  return true;
}

std::vector<HereditaryWitness> hereditary_witnesses(const Partition& p, const Permutation& sigma) {
  if (!contains(p, sigma)) throw ArgumentError("hereditary_witnesses: " + sigma.to_string() + " is not in SEP");
  const std::size_t n = sigma.domain_size();
  const auto cycles = sigma.cycles();

  std::set<Permutation> found;
  if (cycles.size() > 1) {
    for (const auto& c : cycles) found.insert(Permutation::from_cycles({c}, n));
  }
  for (const auto& c : cycles) {
    const std::size_t len = c.size();
    if (len < 3) continue;
    if (len > kMaxWitnessCycleLength) {
      throw CapacityError("hereditary_witnesses: cycles longer than " +
                          std::to_string(kMaxWitnessCycleLength) + " are not enumerated");
    }
    // Every subset of the support with 2..len-1 points, in inherited order.
    for (std::uint32_t mask = 1; mask + 1 < (1u << len); ++mask) {
      if (std::popcount(mask) < 2) continue;
      std::vector<Vertex> sub;
      for (std::size_t i = 0; i < len; ++i)
        if (mask & (1u << i)) sub.push_back(c[i]);
      found.insert(Permutation::from_cycles({sub}, n));
    }
  }
  if (found.empty()) found.insert(Permutation::identity(n));

  std::vector<HereditaryWitness> out;
  out.reserve(found.size());
  for (const auto& tau : found) out.push_back({tau, contains(p, tau)});
  // Smaller supports first, then by cycle notation.
  auto key = [](const Permutation& tau) {
    std::size_t moved = 0;
    for (Vertex v = 0; v < tau.domain_size(); ++v) moved += tau(v) != v;
    return std::pair(moved, tau.cycles());
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const HereditaryWitness& a, const HereditaryWitness& b) { return key(a.permutation) < key(b.permutation); });
  return out;
}

}  // namespace skelkit
