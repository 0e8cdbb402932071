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
#include <span>
#include <vector>

#include "bogofock/bogoliubov.hpp"
#include "bogofock/multi_index.hpp"
#include "bogofock/types.hpp"

namespace bogofock {

/// Limits applied before building truncated Fock matrices.
struct TruncationGuard {
  /// Largest admissible squeezed-vacuum tail amplitude tanh(σ_max)^{d/2}
  /// at the cutoff d.
  double tail_tolerance = 0.05;
  /// Largest admissible Hilbert-space dimension d^N.
  std::size_t max_dimension = 4096;
};

/// Throws TruncationRiskError when tanh(σ_max)^{cutoff/2} exceeds the
/// guard's tail tolerance, ResourceError when cutoff^n_modes exceeds the
/// dimension cap and DomainError when cutoff < 2.
void check_truncation_guard(double sigma_max, std::size_t n_modes, std::size_t cutoff,
                            const TruncationGuard& guard = {});

/// Operator on the Fock space truncated to levels 0..cutoff−1 per mode, in
/// tensor-product order with mode 0 varying slowest. May hold only a
/// subset of columns (see transform_columns()).
class TruncatedOperator {
 public:
  /// Full operator: `matrix` is dimension × dimension.
  TruncatedOperator(std::size_t n_modes, std::size_t cutoff, CMatrix matrix);
  /// Column subset: matrix.col(i) is the image of basis state columns[i].
  TruncatedOperator(std::size_t n_modes, std::size_t cutoff, CMatrix matrix,
                    std::vector<std::size_t> columns);

  std::size_t n_modes() const { return n_modes_; }
  std::size_t cutoff() const { return cutoff_; }
  std::size_t dimension() const { return dimension_; }
  const CMatrix& matrix() const { return matrix_; }
  bool full() const { return columns_.empty(); }

  /// Basis position of a Fock state; throws OutOfRangeError if any
  /// occupation is >= cutoff, ShapeError on length mismatch.
  std::size_t index_of(const MultiIndex& occupation) const;
  MultiIndex occupation_of(std::size_t index) const;

  bool has_column(std::size_t basis_index) const;
  /// ⟨row|T|col⟩ by basis positions.
  cplx entry(std::size_t row, std::size_t col) const;

  /// max |‖T|n⟩‖ − 1| over stored columns with Σn <= max_total.
  double column_leakage(int max_total) const;

 private:
  std::size_t n_modes_;
  std::size_t cutoff_;
  std::size_t dimension_;
  CMatrix matrix_;
  std::vector<std::size_t> columns_;
  std::vector<long> column_slot_;
};

/// Dense annihilation operators â_j = I⊗…⊗a⊗…⊗I with a_{k−1,k} = √k.
/// Throws DomainError for cutoff < 2.
std::vector<CMatrix> ladder_matrices(std::size_t n_modes, std::size_t cutoff);

/// exp of the truncated generator of one elementary factor.
TruncatedOperator elementary_matrix(const ElementaryOp& op, std::size_t cutoff,
                                    const TruncationGuard& guard = {});

/// Ordered product ops[0]·ops[1]·… as a dense truncated matrix. An empty
/// list gives the identity.
TruncatedOperator transform_matrix(std::span<const ElementaryOp> ops, std::size_t n_modes,
                                   std::size_t cutoff, const TruncationGuard& guard = {});

/// Columns of transform_matrix() for every basis state with Σn <=
/// max_column_total, obtained by applying the factors right to left.
TruncatedOperator transform_columns(std::span<const ElementaryOp> ops, std::size_t n_modes,
                                    std::size_t cutoff, int max_column_total,
                                    const TruncationGuard& guard = {});

/// ⟨m|T|n⟩. Throws OutOfRangeError for occupations >= cutoff or a column
/// that was not materialised.
cplx oracle_element(const TruncatedOperator& op, const MultiIndex& m, const MultiIndex& n);

/// ⟨m|T ∏_j X̂_j^{k_j}|n⟩ with X̂ = Q̂ or P̂ built from truncated ladders.
/// Requires n_j + k_j < cutoff − 1.
cplx oracle_quadrature_element(const TruncatedOperator& op, const MultiIndex& m,
                               const MultiIndex& n, const MultiIndex& k,
                               QuadratureKind kind);

/// Result of raising the cutoff until successive oracles agree.
struct ConvergedOracle {
  TruncatedOperator op;
  std::size_t cutoff = 0;   ///< cutoff of `op`
  double change = 0.0;      ///< max |Δ| against cutoff − step
  bool converged = false;
};

struct ConvergenceOptions {
  double tolerance = 1e-9;
  std::size_t step = 4;
  int max_row_total = 6;    ///< rows compared: Σm <= max_row_total
  int max_column_total = 6; ///< columns materialised: Σn <= max_column_total
};

/// Builds transform_columns at start_cutoff, start_cutoff + step, … and
/// stops once every compared element moves by at most the tolerance or the
/// dimension cap is reached. The guard is checked at start_cutoff.
ConvergedOracle converged_oracle(std::span<const ElementaryOp> ops, std::size_t n_modes,
                                 std::size_t start_cutoff,
                                 const ConvergenceOptions& options = {},
                                 const TruncationGuard& guard = {});

/// Best single global phase between two element lists.
struct PhaseAlignment {
  cplx ratio{1.0, 0.0};      ///< least-squares c minimising Σ|oracle − c·value|²
  cplx phase{1.0, 0.0};      ///< ratio / |ratio|
  double max_deviation = 0;  ///< max |oracle − phase·value|
};

/// Aligns `values` to `oracle` with one global phase. Lists must have equal
/// length; if every value vanishes the ratio is taken as 1.
PhaseAlignment align_global_phase(std::span<const cplx> values, std::span<const cplx> oracle);

}  // namespace bogofock
