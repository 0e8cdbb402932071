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

#include <cmath>
#include <vector>

#include <Eigen/SVD>

#include "bogofock/bogoliubov.hpp"
#include "bogofock/errors.hpp"

namespace bogofock {

namespace {

constexpr double kClusterTolerance = 1e-8;
constexpr double kNoSqueezeTolerance = 1e-12;

// Index ranges [first, last) of consecutive values that agree within a
// relative tolerance. `values` must be sorted.
std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters(const Eigen::VectorXd& values,
                                                           double tol) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= values.size(); ++i) {
    if (i == values.size() ||
        std::abs(values[i] - values[i - 1]) > tol * std::max(1.0, std::abs(values[i - 1]))) {
      out.emplace_back(start, i);
      start = i;
    }
  }
  return out;
}

// Y = Q Qᵀ for a complex symmetric unitary Y. Re Y and Im Y are commuting
// real symmetric matrices; a common orthogonal eigenbasis O gives
// Y = O diag(e^{iθ}) Oᵀ and Q = O diag(e^{iθ/2}).
CMatrix symmetric_unitary_sqrt(const CMatrix& y) {
  const CMatrix ys = 0.5 * (y + y.transpose());
  const Eigen::MatrixXd a = ys.real();
  const Eigen::MatrixXd b = ys.imag();
  const Eigen::Index n = y.rows();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig_a(a);
  Eigen::MatrixXd basis = eig_a.eigenvectors();
  for (auto [lo, hi] : clusters(eig_a.eigenvalues(), 1e-9)) {
    if (hi - lo < 2) continue;
    const Eigen::MatrixXd sub = basis.middleCols(lo, hi - lo);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig_b(sub.transpose() * b * sub);
    basis.middleCols(lo, hi - lo) = sub * eig_b.eigenvectors();
  }
  const CMatrix o = basis.cast<cplx>();
  const CMatrix d = o.transpose() * ys * o;
  CMatrix q = o;
  for (Eigen::Index j = 0; j < n; ++j) {
    q.col(j) *= std::exp(cplx{0.0, 0.5 * std::arg(d(j, j))});
  }
  return q;
}

}  // namespace

CMatrix BlochMessiah::s_matrix() const {
  const RVector c = sigma.array().cosh();
  return u_left * c.cast<cplx>().asDiagonal() * u_right.adjoint();
}

CMatrix BlochMessiah::r_matrix() const {
  const RVector s = sigma.array().sinh();
  return -(u_left * s.cast<cplx>().asDiagonal() * u_right.transpose());
}

std::vector<ElementaryOp> BlochMessiah::to_ops(const CVector& t) const {
  return {Displacement{t}, Rotation{u_left}, Squeezing{sigma}, Rotation{u_right.adjoint()}};
}

BlochMessiah bloch_messiah(const BogoliubovTransform& transform, double tolerance) {
  require_symplectic(transform, tolerance);
  const CMatrix& s = transform.s();
  const CMatrix& r = transform.r();
  const Eigen::Index n = s.rows();

  Eigen::JacobiSVD<CMatrix> svd(s, Eigen::ComputeFullU | Eigen::ComputeFullV);
  CMatrix u = svd.matrixU();
  CMatrix v = svd.matrixV();
  const Eigen::VectorXd c = svd.singularValues();

  // X = U†R V* is block diagonal over clusters of equal singular values and
  // each block is s·(symmetric unitary); rotate each block to −s·I.
  const CMatrix x = u.adjoint() * r * v.conjugate();
  for (auto [lo, hi] : clusters(c, kClusterTolerance)) {
    const Eigen::Index len = hi - lo;
    const double c_mean = c.segment(lo, len).mean();
    const double sinh_b = std::sqrt(std::max(0.0, c_mean * c_mean - 1.0));
    if (sinh_b <= kNoSqueezeTolerance * c_mean) continue;
    // With −X/s = QQᵀ the substitution U → UQ, V → VQ turns X into −s·I.
    const CMatrix q = symmetric_unitary_sqrt(-x.block(lo, lo, len, len) / sinh_b);
    u.middleCols(lo, len) = u.middleCols(lo, len) * q;
    v.middleCols(lo, len) = v.middleCols(lo, len) * q;
  }

  const CMatrix x_fixed = u.adjoint() * r * v.conjugate();
  BlochMessiah out;
  out.u_left = std::move(u);
  out.u_right = std::move(v);
  out.sigma.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out.sigma[j] = std::asinh(std::abs(x_fixed(j, j)));
  }
  return out;
}

double reconstruction_residual(const BlochMessiah& bm, const BogoliubovTransform& transform) {
  return std::max(max_abs(bm.s_matrix() - transform.s()),
                  max_abs(bm.r_matrix() - transform.r()));
}

}  // namespace bogofock
