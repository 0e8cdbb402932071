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

#include "bogofock/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "bogofock/errors.hpp"

namespace bogofock {

namespace {

std::size_t checked_dimension(std::size_t n_modes, std::size_t cutoff, std::size_t cap) {
  std::size_t dim = 1;
  for (std::size_t j = 0; j < n_modes; ++j) {
    if (dim > cap / cutoff) {
      throw ResourceError("truncated dimension " + std::to_string(cutoff) + "^" +
                          std::to_string(n_modes) + " exceeds the cap of " +
                          std::to_string(cap));
    }
    dim *= cutoff;
  }
  return dim;
}

// Single-mode truncated annihilation operator.
CMatrix single_ladder(std::size_t cutoff) {
  const auto d = static_cast<Eigen::Index>(cutoff);
  CMatrix a = CMatrix::Zero(d, d);
  for (Eigen::Index k = 1; k < d; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

// One elementary factor in structured form. Displacement and squeezing are
// sums of commuting single-mode generators, so their exponential is the
// tensor product of single-mode exponentials. A rotation conserves the
// total photon number, so its exponential is block diagonal over sectors
// of equal Σn.
struct Factor {
  std::vector<CMatrix> per_mode;
  std::vector<std::vector<std::size_t>> sectors;
  std::vector<CMatrix> sector_exp;
};

std::vector<int> decode(std::size_t index, std::size_t n_modes, std::size_t cutoff) {
  std::vector<int> occ(n_modes);
  for (std::size_t j = n_modes; j-- > 0;) {
    occ[j] = static_cast<int>(index % cutoff);
    index /= cutoff;
  }
  return occ;
}

std::size_t encode(const std::vector<int>& occ, std::size_t cutoff) {
  std::size_t index = 0;
  for (int o : occ) index = index * cutoff + static_cast<std::size_t>(o);
  return index;
}

CMatrix log_unitary(const CMatrix& u) {
  Eigen::ComplexSchur<CMatrix> schur(u);
  const CMatrix& t = schur.matrixT();
  const CMatrix& z = schur.matrixU();
  CVector logs(t.rows());
  for (Eigen::Index j = 0; j < t.rows(); ++j) logs[j] = std::log(t(j, j));
  return z * logs.asDiagonal() * z.adjoint();
}

Factor build_factor(const ElementaryOp& op, std::size_t cutoff) {
  const std::size_t n_modes = op_modes(op);
  const CMatrix a = single_ladder(cutoff);
  const CMatrix ad = a.adjoint();
  Factor f;
  if (const auto* d = std::get_if<Displacement>(&op)) {
    for (Eigen::Index j = 0; j < d->t.size(); ++j) {
      const CMatrix g = d->t[j] * ad - std::conj(d->t[j]) * a;
      f.per_mode.push_back(g.exp());
    }
    return f;
  }
  if (const auto* s = std::get_if<Squeezing>(&op)) {
    for (Eigen::Index j = 0; j < s->sigma.size(); ++j) {
      const CMatrix g = 0.5 * s->sigma[j] * (ad * ad - a * a);
      f.per_mode.push_back(g.exp());
    }
    return f;
  }
  const auto& rot = std::get<Rotation>(op);
  elementary_transform(op);  // unitarity check
  const CMatrix log_u = log_unitary(rot.u);
  const std::size_t dim = checked_dimension(n_modes, cutoff, SIZE_MAX);

  // Sector bookkeeping: position of each basis state inside its Σn block.
  std::vector<std::size_t> slot(dim);
  const std::size_t max_total = n_modes * (cutoff - 1);
  f.sectors.assign(max_total + 1, {});
  for (std::size_t i = 0; i < dim; ++i) {
    const auto occ = decode(i, n_modes, cutoff);
    std::size_t total = 0;
    for (int o : occ) total += static_cast<std::size_t>(o);
    slot[i] = f.sectors[total].size();
    f.sectors[total].push_back(i);
  }
  // Generator Σ_jk (ln U)_jk â_j† â_k on each sector.
  for (const auto& sector : f.sectors) {
    const auto len = static_cast<Eigen::Index>(sector.size());
    CMatrix g = CMatrix::Zero(len, len);
    for (Eigen::Index col = 0; col < len; ++col) {
      const auto occ = decode(sector[static_cast<std::size_t>(col)], n_modes, cutoff);
      for (std::size_t k = 0; k < n_modes; ++k) {
        if (occ[k] == 0) continue;
        auto lowered = occ;
        --lowered[k];
        const double amp_k = std::sqrt(static_cast<double>(occ[k]));
        for (std::size_t j = 0; j < n_modes; ++j) {
          if (lowered[j] + 1 >= static_cast<int>(cutoff)) continue;
          auto raised = lowered;
          ++raised[j];
          const double amp = amp_k * std::sqrt(static_cast<double>(raised[j]));
          const auto row = static_cast<Eigen::Index>(slot[encode(raised, cutoff)]);
          g(row, col) += log_u(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) * amp;
        }
      }
    }
    f.sector_exp.push_back(g.exp());
  }
  return f;
}

// x ← F x for a block of column vectors.
void apply_factor(const Factor& f, std::size_t n_modes, std::size_t cutoff, CMatrix& x) {
  const auto d = static_cast<Eigen::Index>(cutoff);
  if (!f.per_mode.empty()) {
    const auto dim = x.rows();
    for (std::size_t j = 0; j < n_modes; ++j) {
      Eigen::Index inner = 1;
      for (std::size_t k = j + 1; k < n_modes; ++k) inner *= d;
      const Eigen::Index outer = dim / (d * inner);
      const CMatrix at = f.per_mode[j].transpose();
      for (Eigen::Index c = 0; c < x.cols(); ++c) {
        for (Eigen::Index o = 0; o < outer; ++o) {
          Eigen::Map<CMatrix> slab(x.col(c).data() + o * d * inner, inner, d);
          const CMatrix updated = slab * at;
          slab = updated;
        }
      }
    }
    return;
  }
  for (std::size_t s = 0; s < f.sectors.size(); ++s) {
    const auto& idx = f.sectors[s];
    const auto len = static_cast<Eigen::Index>(idx.size());
    CMatrix sub(len, x.cols());
    for (Eigen::Index i = 0; i < len; ++i) sub.row(i) = x.row(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(i)]));
    const CMatrix out = f.sector_exp[s] * sub;
    for (Eigen::Index i = 0; i < len; ++i) x.row(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(i)])) = out.row(i);
  }
}

void validate_ops(std::span<const ElementaryOp> ops, std::size_t n_modes) {
  for (const auto& op : ops) {
    if (op_modes(op) != n_modes) {
      throw ShapeError("elementary op acts on " + std::to_string(op_modes(op)) +
                       " modes, expected " + std::to_string(n_modes));
    }
  }
}

// x ← ops[0]·ops[1]·…·x
void apply_ops(std::span<const ElementaryOp> ops, std::size_t n_modes, std::size_t cutoff,
               CMatrix& x) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    apply_factor(build_factor(*it, cutoff), n_modes, cutoff, x);
  }
}

}  // namespace

void check_truncation_guard(double sigma_max, std::size_t n_modes, std::size_t cutoff,
                            const TruncationGuard& guard) {
  if (cutoff < 2) throw DomainError("Fock cutoff must be at least 2");
  checked_dimension(n_modes, cutoff, guard.max_dimension);
  const double tail = std::pow(std::tanh(std::abs(sigma_max)), 0.5 * static_cast<double>(cutoff));
  if (tail > guard.tail_tolerance) {
    throw TruncationRiskError("cutoff " + std::to_string(cutoff) +
                              " is too small for squeezing " + std::to_string(sigma_max) +
                              " (tail amplitude " + std::to_string(tail) + ")");
  }
}

TruncatedOperator::TruncatedOperator(std::size_t n_modes, std::size_t cutoff, CMatrix matrix)
    : TruncatedOperator(n_modes, cutoff, std::move(matrix), {}) {}

TruncatedOperator::TruncatedOperator(std::size_t n_modes, std::size_t cutoff, CMatrix matrix,
                                     std::vector<std::size_t> columns)
    : n_modes_(n_modes),
      cutoff_(cutoff),
      dimension_(checked_dimension(n_modes, cutoff, SIZE_MAX)),
      matrix_(std::move(matrix)),
      columns_(std::move(columns)) {
  const auto dim = static_cast<Eigen::Index>(dimension_);
  const auto expected_cols = columns_.empty() ? dim : static_cast<Eigen::Index>(columns_.size());
  if (matrix_.rows() != dim || matrix_.cols() != expected_cols) {
    throw ShapeError("TruncatedOperator: matrix shape does not match cutoff^n_modes");
  }
  if (!columns_.empty()) {
    column_slot_.assign(dimension_, -1);
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (columns_[i] >= dimension_) throw OutOfRangeError("column index outside the space");
      column_slot_[columns_[i]] = static_cast<long>(i);
    }
  }
}

std::size_t TruncatedOperator::index_of(const MultiIndex& occupation) const {
  if (occupation.size() != n_modes_) {
    throw ShapeError("occupation has " + std::to_string(occupation.size()) +
                     " modes, expected " + std::to_string(n_modes_));
  }
  std::size_t index = 0;
  for (std::size_t j = 0; j < n_modes_; ++j) {
    if (static_cast<std::size_t>(occupation[j]) >= cutoff_) {
      throw OutOfRangeError("occupation " + occupation.to_string() + " exceeds cutoff " +
                            std::to_string(cutoff_));
    }
    index = index * cutoff_ + static_cast<std::size_t>(occupation[j]);
  }
  return index;
}

MultiIndex TruncatedOperator::occupation_of(std::size_t index) const {
  return MultiIndex(decode(index, n_modes_, cutoff_));
}

bool TruncatedOperator::has_column(std::size_t basis_index) const {
  if (basis_index >= dimension_) return false;
  return columns_.empty() || column_slot_[basis_index] >= 0;
}

cplx TruncatedOperator::entry(std::size_t row, std::size_t col) const {
  if (row >= dimension_ || !has_column(col)) {
    throw OutOfRangeError("entry (" + std::to_string(row) + ", " + std::to_string(col) +
                          ") not available");
  }
  const auto c = columns_.empty() ? static_cast<Eigen::Index>(col)
                                  : static_cast<Eigen::Index>(column_slot_[col]);
  return matrix_(static_cast<Eigen::Index>(row), c);
}

double TruncatedOperator::column_leakage(int max_total) const {
  double worst = 0.0;
  for (Eigen::Index c = 0; c < matrix_.cols(); ++c) {
    const std::size_t basis = columns_.empty() ? static_cast<std::size_t>(c)
                                               : columns_[static_cast<std::size_t>(c)];
    if (occupation_of(basis).total() > max_total) continue;
    worst = std::max(worst, std::abs(matrix_.col(c).norm() - 1.0));
  }
  return worst;
}

std::vector<CMatrix> ladder_matrices(std::size_t n_modes, std::size_t cutoff) {
  if (cutoff < 2) throw DomainError("Fock cutoff must be at least 2");
  if (n_modes == 0) throw DomainError("ladder_matrices needs at least one mode");
  const CMatrix a = single_ladder(cutoff);
  std::vector<CMatrix> out;
  for (std::size_t j = 0; j < n_modes; ++j) {
    CMatrix m = CMatrix::Identity(1, 1);
    for (std::size_t k = 0; k < n_modes; ++k) {
      const CMatrix factor =
          k == j ? a : CMatrix::Identity(static_cast<Eigen::Index>(cutoff), static_cast<Eigen::Index>(cutoff));
      CMatrix next(m.rows() * factor.rows(), m.cols() * factor.cols());
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
          next.block(r * factor.rows(), c * factor.cols(), factor.rows(), factor.cols()) =
              m(r, c) * factor;
        }
      }
      m = std::move(next);
    }
    out.push_back(std::move(m));
  }
  return out;
}

TruncatedOperator elementary_matrix(const ElementaryOp& op, std::size_t cutoff,
                                    const TruncationGuard& guard) {
  const std::size_t n_modes = op_modes(op);
  const std::array<ElementaryOp, 1> single{op};
  check_truncation_guard(max_squeeze(single), n_modes, cutoff, guard);
  const auto dim = static_cast<Eigen::Index>(checked_dimension(n_modes, cutoff, guard.max_dimension));
  CMatrix x = CMatrix::Identity(dim, dim);
  apply_factor(build_factor(op, cutoff), n_modes, cutoff, x);
  return {n_modes, cutoff, std::move(x)};
}

TruncatedOperator transform_matrix(std::span<const ElementaryOp> ops, std::size_t n_modes,
                                   std::size_t cutoff, const TruncationGuard& guard) {
  validate_ops(ops, n_modes);
  check_truncation_guard(max_squeeze(ops), n_modes, cutoff, guard);
  const auto dim = static_cast<Eigen::Index>(checked_dimension(n_modes, cutoff, guard.max_dimension));
  CMatrix product = CMatrix::Identity(dim, dim);
  for (const auto& op : ops) {
    CMatrix factor = CMatrix::Identity(dim, dim);
    apply_factor(build_factor(op, cutoff), n_modes, cutoff, factor);
    product = product * factor;
  }
  return {n_modes, cutoff, std::move(product)};
}

TruncatedOperator transform_columns(std::span<const ElementaryOp> ops, std::size_t n_modes,
                                    std::size_t cutoff, int max_column_total,
                                    const TruncationGuard& guard) {
  validate_ops(ops, n_modes);
  check_truncation_guard(max_squeeze(ops), n_modes, cutoff, guard);
  const std::size_t dim = checked_dimension(n_modes, cutoff, guard.max_dimension);
  std::vector<std::size_t> columns;
  for (std::size_t i = 0; i < dim; ++i) {
    const auto occ = decode(i, n_modes, cutoff);
    int total = 0;
    for (int o : occ) total += o;
    if (total <= max_column_total) columns.push_back(i);
  }
  CMatrix x = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    x(static_cast<Eigen::Index>(columns[c]), static_cast<Eigen::Index>(c)) = 1.0;
  }
  apply_ops(ops, n_modes, cutoff, x);
  return {n_modes, cutoff, std::move(x), std::move(columns)};
}

cplx oracle_element(const TruncatedOperator& op, const MultiIndex& m, const MultiIndex& n) {
  return op.entry(op.index_of(m), op.index_of(n));
}

cplx oracle_quadrature_element(const TruncatedOperator& op, const MultiIndex& m,
                               const MultiIndex& n, const MultiIndex& k, QuadratureKind kind) {
  const std::size_t n_modes = op.n_modes();
  const std::size_t cutoff = op.cutoff();
  if (m.size() != n_modes || n.size() != n_modes || k.size() != n_modes) {
    throw ShapeError("oracle_quadrature_element: index lengths must equal n_modes");
  }
  for (std::size_t j = 0; j < n_modes; ++j) {
    if (static_cast<std::size_t>(n[j] + k[j]) + 1 >= cutoff) {
      throw OutOfRangeError("n_j + k_j must stay below cutoff − 1");
    }
  }
  // Sparse state ∏ X̂_j^{k_j}|n⟩ as (basis index → amplitude).
  std::vector<std::pair<std::vector<int>, cplx>> state{{std::vector<int>(n.entries().begin(), n.entries().end()), cplx{1.0, 0.0}}};
  const double r2 = std::numbers::sqrt2 / 2.0;
  const cplx c_lower = kind == QuadratureKind::position ? cplx{r2, 0.0} : cplx{0.0, -r2};
  const cplx c_raise = kind == QuadratureKind::position ? cplx{r2, 0.0} : cplx{0.0, r2};
  for (std::size_t j = 0; j < n_modes; ++j) {
    for (int rep = 0; rep < k[j]; ++rep) {
      std::vector<std::pair<std::vector<int>, cplx>> next;
      for (const auto& [occ, amp] : state) {
        if (occ[j] > 0) {
          auto lowered = occ;
          --lowered[j];
          next.emplace_back(lowered, amp * c_lower * std::sqrt(static_cast<double>(occ[j])));
        }
        if (static_cast<std::size_t>(occ[j]) + 1 < cutoff) {
          auto raised = occ;
          ++raised[j];
          next.emplace_back(raised, amp * c_raise * std::sqrt(static_cast<double>(raised[j])));
        }
      }
      state = std::move(next);
    }
  }
  const std::size_t row = op.index_of(m);
  cplx sum{0.0, 0.0};
  for (const auto& [occ, amp] : state) {
    sum += amp * op.entry(row, encode(occ, cutoff));
  }
  return sum;
}

ConvergedOracle converged_oracle(std::span<const ElementaryOp> ops, std::size_t n_modes,
                                 std::size_t start_cutoff, const ConvergenceOptions& options,
                                 const TruncationGuard& guard) {
  check_truncation_guard(max_squeeze(ops), n_modes, start_cutoff, guard);
  const auto rows = enumerate_simplex(n_modes, options.max_row_total);
  const auto cols = enumerate_simplex(n_modes, options.max_column_total);
  auto fits = [&](std::size_t cutoff) {
    std::size_t dim = 1;
    for (std::size_t j = 0; j < n_modes; ++j) {
      if (dim > guard.max_dimension / cutoff) return false;
      dim *= cutoff;
    }
    return true;
  };

  std::size_t cutoff = start_cutoff;
  TruncatedOperator current = transform_columns(ops, n_modes, cutoff, options.max_column_total, guard);
  ConvergedOracle out{current, cutoff, 0.0, false};
  while (fits(cutoff + options.step)) {
    const std::size_t next_cutoff = cutoff + options.step;
    TruncatedOperator next =
        transform_columns(ops, n_modes, next_cutoff, options.max_column_total, guard);
    double change = 0.0;
    for (const auto& m : rows) {
      if (static_cast<std::size_t>(m.max_entry()) >= cutoff) continue;
      for (const auto& n : cols) {
        if (static_cast<std::size_t>(n.max_entry()) >= cutoff) continue;
        change = std::max(change, std::abs(oracle_element(next, m, n) - oracle_element(current, m, n)));
      }
    }
    out = ConvergedOracle{next, next_cutoff, change, change <= options.tolerance};
    if (out.converged) return out;
    current = std::move(next);
    cutoff = next_cutoff;
  }
  return out;
}

PhaseAlignment align_global_phase(std::span<const cplx> values, std::span<const cplx> oracle) {
  if (values.size() != oracle.size()) throw ShapeError("align_global_phase: length mismatch");
  cplx cross{0.0, 0.0};
  double norm = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    cross += std::conj(values[i]) * oracle[i];
    norm += std::norm(values[i]);
  }
  PhaseAlignment out;
  if (norm > 0.0 && std::abs(cross) > 0.0) {
    out.ratio = cross / norm;
    out.phase = out.ratio / std::abs(out.ratio);
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.max_deviation = std::max(out.max_deviation, std::abs(oracle[i] - out.phase * values[i]));
  }
  return out;
}

}  // namespace bogofock
