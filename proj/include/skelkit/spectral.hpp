#pragma once

#include <vector>

#include "skelkit/graph.hpp"
#include "skelkit/sep_group.hpp"  // BigInt

namespace skelkit {

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t dim() const noexcept { return n_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<BigInt> a_;
};

IntMatrix identity_plus_adjacency(const Graph& g);

/// Rank over the rationals by fraction-free (Bareiss) elimination. The pivot
/// is the first nonzero entry at or below the current row, columns scanned in
/// order; every division is exact.
std::size_t exact_rank(IntMatrix m);

/// rank(I + A(Γ)), computed on the full matrix.
std::size_t rank_I_plus_A(const Graph& g);
/// rank(I + A(SΩ(Γ))).
std::size_t skeleton_rank(const Graph& g);
/// Λ = |V(SΩ(Γ))| - rank(I + A(SΩ(Γ))). Throws InternalError if negative.
std::size_t lambda(const Graph& g);
/// Multiplicity of -1 as an adjacency eigenvalue, n - rank(I + A(Γ)).
/// Throws InternalError if it falls below n - |V(SΩ(Γ))|.
std::size_t minus_one_multiplicity(const Graph& g);

inline constexpr std::size_t kCharpolyMaxOrder = 64;

/// det(xI - A(Γ)) as integer coefficients, constant term first (monic, degree n),
/// by the Faddeev-LeVerrier recurrence. Throws CapacityError beyond kCharpolyMaxOrder.
std::vector<BigInt> characteristic_polynomial(const Graph& g);
/// Exponent of (x + 1) in the characteristic polynomial.
std::size_t charpoly_multiplicity_oracle(const Graph& g);

struct SpectralReport {
  std::size_t n = 0;
  std::size_t rank_I_plus_A = 0;
  std::size_t skeleton_vertices = 0;
  std::size_t lambda = 0;
  std::size_t minus_one_multiplicity = 0;

  friend bool operator==(const SpectralReport&, const SpectralReport&) = default;
};

/// Computes every field independently and throws InternalError if
/// rank = skeleton_vertices - lambda or multiplicity = n - rank fails.
SpectralReport spectral_report(const Graph& g);

}  // namespace skelkit
