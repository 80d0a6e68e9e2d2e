#include "skelkit/spectral.hpp"

#include <string>

#include "skelkit/errors.hpp"
#include "skelkit/skeleton.hpp"

namespace skelkit {

IntMatrix identity_plus_adjacency(const Graph& g) {
  IntMatrix m(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    m(v, v) = 1;
    for (Vertex w : g.neighbors(v)) m(v, w) = 1;
  }
  return m;
}

std::size_t exact_rank(IntMatrix m) {
  const std::size_t n = m.dim();
  std::size_t rank = 0;
  BigInt previous_pivot = 1;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(rank, j));
    }
    const BigInt& p = m(rank, col);
    for (std::size_t i = rank + 1; i < n; ++i) {
      const BigInt factor = m(i, col);
      for (std::size_t j = col + 1; j < n; ++j) {
        // Sylvester's identity makes this division exact.
        m(i, j) = (p * m(i, j) - factor * m(rank, j)) / previous_pivot;
      }
      m(i, col) = 0;
    }
    previous_pivot = p;
    ++rank;
  }
  return rank;
}

std::size_t rank_I_plus_A(const Graph& g) { return exact_rank(identity_plus_adjacency(g)); }

std::size_t skeleton_rank(const Graph& g) { return rank_I_plus_A(skeleton_structure(g)); }

std::size_t lambda(const Graph& g) {
  const Graph structure = skeleton_structure(g);
  const std::size_t r = rank_I_plus_A(structure);
  if (r > structure.order()) throw InternalError("rank exceeds the skeleton vertex count");
  return structure.order() - r;
}

std::size_t minus_one_multiplicity(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t k = n - rank_I_plus_A(g);
  const std::size_t skeleton_vertices = skeleton_structure(g).order();
  if (k < n - skeleton_vertices) {
    throw InternalError("multiplicity " + std::to_string(k) + " is below n - |V(SΩ)| = " +
                        std::to_string(n - skeleton_vertices));
  }
  return k;
}

std::vector<BigInt> characteristic_polynomial(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kCharpolyMaxOrder) {
    throw CapacityError("characteristic_polynomial: n = " + std::to_string(n) + " exceeds " +
                        std::to_string(kCharpolyMaxOrder));
  }
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k,  M_0 = 0, c_n = 1.
  std::vector<BigInt> coeff(n + 1);
  coeff[n] = 1;
  std::vector<BigInt> m(n * n);       // M_{k-1}
  std::vector<BigInt> am(n * n);      // A M_{k-1}
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        BigInt sum = 0;
        for (Vertex l : g.neighbors(i)) sum += m[l * n + j];
        am[i * n + j] = std::move(sum);
      }
    }
    for (std::size_t i = 0; i < n; ++i) am[i * n + i] += coeff[n - k + 1];
    m.swap(am);  // m = M_k

    BigInt trace = 0;  // tr(A M_k)
    for (std::size_t i = 0; i < n; ++i)
      for (Vertex l : g.neighbors(i)) trace += m[l * n + i];
    if (trace % k != 0) throw InternalError("Faddeev-LeVerrier: inexact division");
    coeff[n - k] = -(trace / k);
  }
  return coeff;
}

std::size_t charpoly_multiplicity_oracle(const Graph& g) {
  std::vector<BigInt> poly = characteristic_polynomial(g);
  std::size_t multiplicity = 0;
  // Synthetic division by (x + 1) while the remainder vanishes.
  while (poly.size() > 1) {
    std::vector<BigInt> quotient(poly.size() - 1);
    BigInt carry = 0;
    for (std::size_t i = poly.size(); i-- > 1;) {
      carry = poly[i] - carry;
      quotient[i - 1] = carry;
    }
    if (poly[0] - carry != 0) break;
    poly = std::move(quotient);
    ++multiplicity;
  }
  return multiplicity;
}

SpectralReport spectral_report(const Graph& g) {
  SpectralReport r;
  r.n = g.order();
  r.rank_I_plus_A = rank_I_plus_A(g);
  r.skeleton_vertices = skeleton_structure(g).order();
  r.lambda = lambda(g);
  r.minus_one_multiplicity = minus_one_multiplicity(g);
  if (r.rank_I_plus_A + r.lambda != r.skeleton_vertices) {
    throw InternalError("rank(I+A) = " + std::to_string(r.rank_I_plus_A) + " but |V(SΩ)| - Λ = " +
                        std::to_string(r.skeleton_vertices) + " - " + std::to_string(r.lambda));
  }
  if (r.minus_one_multiplicity + r.rank_I_plus_A != r.n) throw InternalError("multiplicity != n - rank");
  return r;
}

}  // namespace skelkit
