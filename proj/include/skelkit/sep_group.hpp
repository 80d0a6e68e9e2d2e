#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "skelkit/equivalence.hpp"
#include "skelkit/graph.hpp"

namespace skelkit {

using BigInt = boost::multiprecision::cpp_int;

/// SEP(Γ) up to isomorphism: the direct product of symmetric groups on the
/// equivalence classes is determined by the multiset of class sizes.
struct SepSignature {
  std::vector<std::size_t> sizes;  // descending
  std::size_t class_count = 0;
  std::size_t alpha = 0;  // largest class size
  std::size_t beta = 0;   // second largest, 0 with a single class

  /// Any order of sizes; zero sizes are rejected.
  static SepSignature from_sizes(std::vector<std::size_t> sizes);

  friend bool operator==(const SepSignature&, const SepSignature&) = default;
};

SepSignature sep_signature(const Partition& p);

/// |SEP(Γ)| = product of the factorials of the class sizes.
BigInt sep_order(const SepSignature& sig);

/// Bijection on 0..n-1 stored as an image array.
class Permutation {
 public:
  Permutation() = default;
  /// Throws ArgumentError unless `image` is a bijection on 0..image.size()-1.
  explicit Permutation(std::vector<Vertex> image);

  static Permutation identity(std::size_t n);
  /// Parses cycle notation such as "(3 4)(1 2)" on the domain 0..n-1.
  /// "", "()" and "id" denote the identity. Throws ParseError.
  static Permutation from_cycles(std::string_view text, std::size_t n);
  /// Builds a permutation from disjoint cycles. Throws ArgumentError.
  static Permutation from_cycles(const std::vector<std::vector<Vertex>>& cycles, std::size_t n);

  std::size_t domain_size() const noexcept { return image_.size(); }
  Vertex operator()(Vertex v) const { return image_.at(v); }
  const std::vector<Vertex>& image() const noexcept { return image_; }
  bool is_identity() const;

  /// Non-trivial disjoint cycles, each rotated to start at its smallest
  /// element, ordered by that element.
  std::vector<std::vector<Vertex>> cycles() const;
  /// "(0 1 2)(3 4)", or "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> image_;
};

/// σ ∈ Aut(Γ).
bool is_automorphism(const Graph& g, const Permutation& sigma);

/// σ ∈ SEP(Γ): every cycle of σ lies inside one equivalence class.
bool contains(const Partition& p, const Permutation& sigma);

struct HereditaryWitness {
  Permutation permutation;
  bool member = false;
};

/// Every proper sub-cycle of every cycle of σ (cycles on proper subsets of the
/// support, at least two points, keeping the parent's cyclic order) and, when
/// σ has several cycles, each cycle on its own. Yields the identity alone when
/// nothing else qualifies. Ordered by support size, then cycle notation.
/// Requires contains(p, σ).
std::vector<HereditaryWitness> hereditary_witnesses(const Partition& p, const Permutation& sigma);

}  // namespace skelkit
