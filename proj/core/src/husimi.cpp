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

#include "bogofock/husimi.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <string>

#include "bogofock/errors.hpp"
#include "bogofock/parallel.hpp"

namespace bogofock {

namespace {

constexpr double kConditionWarning = 1e8;

struct SInverse {
  CMatrix s_inv;
  double abs_det;
};

SInverse invert_s(const CMatrix& s) {
  Eigen::PartialPivLU<CMatrix> lu(s);
  const double rcond = lu.rcond();
  if (!(rcond > 0.0)) throw InversionError("S is singular");
  if (1.0 / rcond > kConditionWarning) {
    std::cerr << "bogofock: warning: S is ill-conditioned (condition estimate "
              << 1.0 / rcond << ")\n";
  }
  return {lu.inverse(), std::abs(lu.determinant())};
}

void check_modes(std::size_t n_modes, const MultiIndex& a, const char* what) {
  if (a.size() != n_modes) {
    throw ShapeError(std::string(what) + " has length " + std::to_string(a.size()) +
                     ", expected " + std::to_string(n_modes));
  }
}

// ∏_j (n_j! m_j!)^{−1/2}
double fock_normalisation(const MultiIndex& n, const MultiIndex& m) {
  double log_sum = 0.0;
  for (std::size_t j = 0; j < n.size(); ++j) {
    log_sum += std::lgamma(n[j] + 1.0) + std::lgamma(m[j] + 1.0);
  }
  return std::exp(-0.5 * log_sum);
}

// c0 · H_{(n,m,…)} / √(∏ n_j! m_j!). The recursion engine carries the
// factorial scaling through the lattice; the direct sum applies it at the end.
cplx evaluate(cplx c0, const MultiIndex& n, const MultiIndex& m, const MultiIndex& v,
              const CVector& mu, const CMatrix& w, HermiteEngine engine) {
  if (engine == HermiteEngine::recursion) {
    return c0 * mhp_recursion_normalized(v, mu, w, n.size() + m.size());
  }
  return c0 * (mhp_direct(v, mu, w) * fock_normalisation(n, m));
}

}  // namespace

WMatrix w_matrix(const BogoliubovTransform& transform) {
  const CMatrix& s = transform.s();
  const CMatrix& r = transform.r();
  const auto n = s.rows();
  const SInverse inv = invert_s(s);
  const CMatrix st_inv = inv.s_inv.transpose();
  const CMatrix sc_inv = inv.s_inv.conjugate();
  WMatrix out;
  out.w.resize(2 * n, 2 * n);
  out.w.topLeftCorner(n, n) = -s.transpose() * r.conjugate();
  out.w.topRightCorner(n, n) = s.transpose() * s.conjugate();
  out.w.bottomLeftCorner(n, n) = s.adjoint() * s;
  out.w.bottomRightCorner(n, n) = -r.transpose() * s.conjugate();
  out.w_inv.resize(2 * n, 2 * n);
  out.w_inv.topLeftCorner(n, n) = r.transpose() * st_inv;
  out.w_inv.topRightCorner(n, n) = CMatrix::Identity(n, n);
  out.w_inv.bottomLeftCorner(n, n) = CMatrix::Identity(n, n);
  out.w_inv.bottomRightCorner(n, n) = sc_inv * r.conjugate();
  return out;
}

HusimiGaussian gaussian_qfunction(const BogoliubovTransform& transform, double tolerance) {
  require_symplectic(transform, tolerance);
  const CMatrix& s = transform.s();
  const CMatrix& r = transform.r();
  const auto n = s.rows();
  const SInverse inv = invert_s(s);
  const CMatrix sdag_inv = inv.s_inv.adjoint();    // (S†)⁻¹
  const CMatrix sconj_inv = inv.s_inv.conjugate(); // (S*)⁻¹
  const CMatrix sdag_inv_rt = sdag_inv * r.transpose();

  HusimiGaussian h;
  h.n_modes = transform.n_modes();
  h.v_matrix.resize(2 * n, 2 * n);
  h.v_matrix.topLeftCorner(n, n) = -r.adjoint() * sdag_inv;
  h.v_matrix.topRightCorner(n, n) = -sconj_inv;
  h.v_matrix.bottomLeftCorner(n, n) = -sdag_inv;
  h.v_matrix.bottomRightCorner(n, n) = sdag_inv_rt;

  const CVector l = transform.l_vector();
  CMatrix lin = CMatrix::Zero(2 * n, 2 * n);
  lin.topRightCorner(n, n) = CMatrix::Identity(n, n);
  lin.bottomLeftCorner(n, n) = -sdag_inv;
  lin.bottomRightCorner(n, n) = sdag_inv_rt;
  h.mu = lin.transpose() * l;

  CMatrix quad = CMatrix::Zero(2 * n, 2 * n);
  quad.bottomLeftCorner(n, n) = CMatrix::Identity(n, n);
  quad.bottomRightCorner(n, n) = sdag_inv_rt;
  const cplx exponent = -0.5 * l.cwiseProduct(quad * l).sum();
  h.c0 = std::exp(exponent) / std::sqrt(inv.abs_det);
  return h;
}

QuadratureHusimi quadrature_qfunction(const BogoliubovTransform& transform,
                                      QuadratureKind kind, double tolerance) {
  const HusimiGaussian h = gaussian_qfunction(transform, tolerance);
  const auto n = static_cast<Eigen::Index>(h.n_modes);
  // exp(λᵀX̂) = e^{λᵀλ/4} exp(c_b λᵀâ†) exp(c_g λᵀâ), so the λ-dependence
  // enters as e^{λᵀλ/4 + c_g λᵀα} times the Q-function at α + c_b λ.
  const double r2 = std::numbers::sqrt2 / 2.0;
  const cplx c_create = kind == QuadratureKind::position ? cplx{r2, 0.0} : cplx{0.0, r2};
  const cplx c_annihilate = kind == QuadratureKind::position ? cplx{r2, 0.0} : cplx{0.0, -r2};

  const CMatrix v11 = h.v_matrix.topLeftCorner(n, n);
  const CMatrix v21 = h.v_matrix.bottomLeftCorner(n, n);
  const CMatrix eye = CMatrix::Identity(n, n);

  QuadratureHusimi q;
  q.n_modes = h.n_modes;
  q.kind = kind;
  q.c0 = h.c0;
  q.vbar = CMatrix::Zero(3 * n, 3 * n);
  q.vbar.topLeftCorner(2 * n, 2 * n) = h.v_matrix;
  const CMatrix alpha_lambda = c_create * v11 - c_annihilate * eye;
  const CMatrix conj_lambda = c_create * v21;
  q.vbar.block(0, 2 * n, n, n) = alpha_lambda;
  q.vbar.block(n, 2 * n, n, n) = conj_lambda;
  q.vbar.block(2 * n, 0, n, n) = alpha_lambda.transpose();
  q.vbar.block(2 * n, n, n, n) = conj_lambda.transpose();
  q.vbar.block(2 * n, 2 * n, n, n) = c_create * c_create * v11 - 0.5 * eye;

  q.mubar.resize(3 * n);
  q.mubar.head(2 * n) = h.mu;
  q.mubar.tail(n) = c_create * h.mu.head(n);
  return q;
}

cplx matrix_element(const HusimiGaussian& h, const MultiIndex& m, const MultiIndex& n,
                    HermiteEngine engine) {
  check_modes(h.n_modes, m, "m");
  check_modes(h.n_modes, n, "n");
  return evaluate(h.c0, n, m, n.concat(m), h.mu, h.v_matrix, engine);
}

cplx quadrature_element(const QuadratureHusimi& q, const MultiIndex& m,
                        const MultiIndex& n, const MultiIndex& k, HermiteEngine engine) {
  check_modes(q.n_modes, m, "m");
  check_modes(q.n_modes, n, "n");
  check_modes(q.n_modes, k, "k");
  return evaluate(q.c0, n, m, n.concat(m).concat(k), q.mubar, q.vbar, engine);
}

double ElementBlock::column_norm_squared(std::size_t col) const {
  return values_.col(static_cast<Eigen::Index>(col)).squaredNorm();
}

ElementBlock element_block(const HusimiGaussian& h, const MultiIndex& max_m,
                           const MultiIndex& max_n, const BlockOptions& opts) {
  check_modes(h.n_modes, max_m, "max_m");
  check_modes(h.n_modes, max_n, "max_n");
  const std::size_t threads = opts.threads == 0 ? default_worker_count() : opts.threads;
  const HermiteLattice lattice(max_n.concat(max_m), h.mu, h.v_matrix, threads,
                               opts.max_entries, 2 * h.n_modes);
  std::vector<MultiIndex> rows = enumerate_box(max_m);
  std::vector<MultiIndex> cols = enumerate_box(max_n);
  CMatrix values(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  parallel_for(0, rows.size(), threads, [&](std::size_t r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          h.c0 * lattice.at(cols[c].concat(rows[r]));
    }
  });
  return {std::move(rows), std::move(cols), std::move(values)};
}

MultiIndex truncation_bounds(const BogoliubovTransform& transform, const MultiIndex& column) {
  if (!column.empty()) check_modes(transform.n_modes(), column, "column");
  const BlochMessiah bm = bloch_messiah(transform);
  const double sigma_max = bm.sigma.size() ? bm.sigma.maxCoeff() : 0.0;
  const double sh2 = std::pow(std::sinh(sigma_max), 2);
  const double photons = column.empty() ? 0.0 : static_cast<double>(column.total());
  std::vector<int> bounds(transform.n_modes());
  for (std::size_t j = 0; j < bounds.size(); ++j) {
    const double t2 = std::norm(transform.t()[static_cast<Eigen::Index>(j)]);
    bounds[j] = static_cast<int>(
        std::ceil(10.0 + 20.0 * sh2 + 4.0 * t2 + 3.0 * (1.0 + 2.0 * sh2) * photons));
  }
  return MultiIndex(std::move(bounds));
}

}  // namespace bogofock
