// Copyright 2026 The bogofock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "bogofock/bogoliubov.hpp"
#include "bogofock/hermite.hpp"
#include "bogofock/multi_index.hpp"
#include "bogofock/types.hpp"

namespace bogofock {

/// Unnormalised Husimi Q-function of a Gaussian operator,
///   e^{α†α}⟨α|Ô|α⟩ = c0 · exp(−½ ᾱᵀVᾱ + μᵀᾱ),  ᾱ = (α, α*).
/// Its derivatives at the origin are the Fock matrix elements.
struct HusimiGaussian {
  std::size_t n_modes = 0;
  CMatrix v_matrix;  ///< 2N×2N complex symmetric
  CVector mu;        ///< length 2N
  cplx c0;           ///< ⟨0|Ô|0⟩
};

/// Q-function of Ô·exp(λᵀX̂) for X̂ = Q̂ or P̂, as a Gaussian in (ᾱ, λ).
/// The top-left 2N×2N block of vbar is the parent V.
struct QuadratureHusimi {
  std::size_t n_modes = 0;
  CMatrix vbar;  ///< 3N×3N complex symmetric
  CVector mubar; ///< length 3N
  cplx c0;
  QuadratureKind kind = QuadratureKind::position;
};

/// The symmetric matrix W of the coherent-state integral and its closed-form
/// inverse.
struct WMatrix {
  CMatrix w;
  CMatrix w_inv;
};

WMatrix w_matrix(const BogoliubovTransform& transform);

/// Builds (V, μ, c0) from (S, R, t):
///   V  = [[−R†(S†)⁻¹, −(S*)⁻¹], [−(S†)⁻¹, (S†)⁻¹Rᵀ]]
///   μᵀ = lᵀ [[0, I], [−(S†)⁻¹, (S†)⁻¹Rᵀ]]
///   c0 = |det S|^{−1/2} exp(−½ lᵀ [[0, 0], [I, (S†)⁻¹Rᵀ]] l)
/// Throws InvalidTransformError for non-symplectic input.
HusimiGaussian gaussian_qfunction(const BogoliubovTransform& transform,
                                  double tolerance = kSymplecticTolerance);

/// Extends the Q-function with the generating parameter λ of exp(λᵀX̂).
QuadratureHusimi quadrature_qfunction(const BogoliubovTransform& transform,
                                      QuadratureKind kind,
                                      double tolerance = kSymplecticTolerance);

enum class HermiteEngine { recursion, direct };

/// ⟨m|Ô|n⟩ = c0 ∏(n_j! m_j!)^{−1/2} H_{(n,m)}(V⁻¹μ; V⁻¹).
/// The recursion engine is bit-identical to element_block().
cplx matrix_element(const HusimiGaussian& h, const MultiIndex& m, const MultiIndex& n,
                    HermiteEngine engine = HermiteEngine::recursion);

/// ⟨m|Ô ∏_j X̂_j^{k_j}|n⟩ with X̂ = Q̂ or P̂ per q.kind.
cplx quadrature_element(const QuadratureHusimi& q, const MultiIndex& m,
                        const MultiIndex& n, const MultiIndex& k,
                        HermiteEngine engine = HermiteEngine::recursion);

/// All ⟨m|Ô|n⟩ for m ≤ max_m and n ≤ max_n entry-wise, from one memoised
/// recursion. Row r corresponds to rows()[r], column c to cols()[c].
class ElementBlock {
 public:
  ElementBlock(std::vector<MultiIndex> rows, std::vector<MultiIndex> cols, CMatrix values)
      : rows_(std::move(rows)), cols_(std::move(cols)), values_(std::move(values)) {}

  const std::vector<MultiIndex>& rows() const { return rows_; }
  const std::vector<MultiIndex>& cols() const { return cols_; }
  const CMatrix& values() const { return values_; }

  /// Σ_r |block(r, c)|² for a column.
  double column_norm_squared(std::size_t col) const;

 private:
  std::vector<MultiIndex> rows_;
  std::vector<MultiIndex> cols_;
  CMatrix values_;
};

struct BlockOptions {
  std::size_t threads = 0;  ///< 0: default_worker_count()
  std::size_t max_entries = HermiteLattice::kDefaultMaxEntries;
};

/// Throws ResourceError when the (n, m) lattice exceeds opts.max_entries.
ElementBlock element_block(const HusimiGaussian& h, const MultiIndex& max_m,
                           const MultiIndex& max_n, const BlockOptions& opts = {});

/// Per-mode photon bound for normalisation sums over the column |n⟩:
///   M_j = ceil(10 + 20 sinh²(σ_max) + 4|t_j|² + 3(1 + 2 sinh²(σ_max)) Σn).
/// An empty `column` means the vacuum.
MultiIndex truncation_bounds(const BogoliubovTransform& transform,
                             const MultiIndex& column = {});

}  // namespace bogofock
