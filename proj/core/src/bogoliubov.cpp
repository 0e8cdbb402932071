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

#include "bogofock/bogoliubov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "bogofock/errors.hpp"

namespace bogofock {

namespace {

CMatrix identity(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  return CMatrix::Identity(m, m);
}

CMatrix zeros(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  return CMatrix::Zero(m, m);
}

CMatrix unitary_from_gaussian(std::size_t n, std::mt19937_64& rng) {
  const auto m = static_cast<Eigen::Index>(n);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  CMatrix z(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) z(i, j) = cplx(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(m, m);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < m; ++j) {
    const double a = std::abs(r(j, j));
    const cplx phase = a > 0.0 ? r(j, j) / a : cplx{1.0, 0.0};
    q.col(j) *= phase;
  }
  return q;
}

}  // namespace

BogoliubovTransform::BogoliubovTransform(CMatrix s, CMatrix r, CVector t)
    : s_(std::move(s)), r_(std::move(r)), t_(std::move(t)) {
  const auto n = t_.size();
  if (n == 0) throw ShapeError("BogoliubovTransform: n_modes must be positive");
  if (s_.rows() != n || s_.cols() != n || r_.rows() != n || r_.cols() != n) {
    throw ShapeError("BogoliubovTransform: S and R must be " + std::to_string(n) +
                     "x" + std::to_string(n) + " to match t");
  }
}

BogoliubovTransform BogoliubovTransform::identity(std::size_t n_modes) {
  if (n_modes == 0) throw DomainError("identity transform needs n_modes > 0");
  return {bogofock::identity(n_modes), zeros(n_modes),
          CVector::Zero(static_cast<Eigen::Index>(n_modes))};
}

BogoliubovTransform BogoliubovTransform::checked(CMatrix s, CMatrix r, CVector t,
                                                 double tolerance) {
  BogoliubovTransform out(std::move(s), std::move(r), std::move(t));
  require_symplectic(out, tolerance);
  return out;
}

CMatrix BogoliubovTransform::k_matrix() const {
  const auto n = static_cast<Eigen::Index>(n_modes());
  CMatrix k(2 * n, 2 * n);
  k.topLeftCorner(n, n) = s_;
  k.topRightCorner(n, n) = -r_;
  k.bottomLeftCorner(n, n) = -r_.conjugate();
  k.bottomRightCorner(n, n) = s_.conjugate();
  return k;
}

CVector BogoliubovTransform::l_vector() const {
  const auto n = t_.size();
  CVector l(2 * n);
  l.head(n) = t_;
  l.tail(n) = t_.conjugate();
  return l;
}

BogoliubovTransform BogoliubovTransform::from_k_l(const CMatrix& k, const CVector& l) {
  if (k.rows() != k.cols() || k.rows() % 2 != 0 || l.size() != k.rows()) {
    throw ShapeError("from_k_l: K must be 2N x 2N and l of length 2N");
  }
  const auto n = k.rows() / 2;
  return {k.topLeftCorner(n, n), -k.topRightCorner(n, n), l.head(n)};
}

double SymplecticReport::max_residual() const {
  return std::max({ss_minus_rr, sr_symmetry, s_s_minus_rr, rs_symmetry});
}

SymplecticReport validate_symplectic(const BogoliubovTransform& transform,
                                     double tolerance) {
  const CMatrix& s = transform.s();
  const CMatrix& r = transform.r();
  const CMatrix eye = identity(transform.n_modes());
  SymplecticReport rep;
  rep.tolerance = tolerance;
  rep.ss_minus_rr = max_abs(s * s.adjoint() - r * r.adjoint() - eye);
  rep.sr_symmetry = max_abs(s * r.transpose() - r * s.transpose());
  rep.s_s_minus_rr = max_abs(s.adjoint() * s - r.transpose() * r.conjugate() - eye);
  rep.rs_symmetry = max_abs(r.adjoint() * s - s.transpose() * r.conjugate());
  rep.pass = rep.max_residual() <= tolerance;
  return rep;
}

void require_symplectic(const BogoliubovTransform& transform, double tolerance) {
  const SymplecticReport rep = validate_symplectic(transform, tolerance);
  if (!rep.pass) {
    throw InvalidTransformError("transform violates the symplectic identities (max residual " +
                                std::to_string(rep.max_residual()) + " > " +
                                std::to_string(tolerance) + ")");
  }
}

std::size_t op_modes(const ElementaryOp& op) {
  return std::visit(
      [](const auto& o) -> std::size_t {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Displacement>) {
          return static_cast<std::size_t>(o.t.size());
        } else if constexpr (std::is_same_v<T, Rotation>) {
          return static_cast<std::size_t>(o.u.rows());
        } else {
          return static_cast<std::size_t>(o.sigma.size());
        }
      },
      op);
}

BogoliubovTransform elementary_transform(const ElementaryOp& op,
                                         double unitary_tolerance) {
  const std::size_t n = op_modes(op);
  if (n == 0) throw ShapeError("elementary op acts on zero modes");
  const auto m = static_cast<Eigen::Index>(n);
  return std::visit(
      [&](const auto& o) -> BogoliubovTransform {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Displacement>) {
          return {identity(n), zeros(n), o.t};
        } else if constexpr (std::is_same_v<T, Rotation>) {
          if (o.u.rows() != o.u.cols()) throw ShapeError("rotation matrix must be square");
          const double err = max_abs(o.u * o.u.adjoint() - identity(n));
          if (err > unitary_tolerance) {
            throw InvalidTransformError("rotation matrix is not unitary (residual " +
                                        std::to_string(err) + ")");
          }
          return {o.u, zeros(n), CVector::Zero(m)};
        } else {
          CMatrix s = zeros(n);
          CMatrix r = zeros(n);
          for (Eigen::Index j = 0; j < m; ++j) {
            if (!std::isfinite(o.sigma[j])) throw DomainError("squeezing parameter is not finite");
            s(j, j) = std::cosh(o.sigma[j]);
            r(j, j) = -std::sinh(o.sigma[j]);
          }
          return {s, r, CVector::Zero(m)};
        }
      },
      op);
}

BogoliubovTransform compose(const BogoliubovTransform& a, const BogoliubovTransform& b) {
  if (a.n_modes() != b.n_modes()) throw ShapeError("compose: mode counts differ");
  const CMatrix ka = a.k_matrix();
  return BogoliubovTransform::from_k_l(ka * b.k_matrix(), ka * b.l_vector() + a.l_vector());
}

BogoliubovTransform from_elementary(std::span<const ElementaryOp> ops,
                                    std::size_t n_modes, double unitary_tolerance) {
  BogoliubovTransform acc = BogoliubovTransform::identity(n_modes);
  for (const auto& op : ops) {
    if (op_modes(op) != n_modes) {
      throw ShapeError("elementary op acts on " + std::to_string(op_modes(op)) +
                       " modes, expected " + std::to_string(n_modes));
    }
    acc = compose(acc, elementary_transform(op, unitary_tolerance));
  }
  return acc;
}

BogoliubovTransform inverse(const BogoliubovTransform& transform) {
  const CMatrix& s = transform.s();
  const CMatrix& r = transform.r();
  CMatrix s_inv = s.adjoint();
  CMatrix r_inv = -r.transpose();
  CVector t_inv = -(s.adjoint() * transform.t() + r.transpose() * transform.t().conjugate());
  return {std::move(s_inv), std::move(r_inv), std::move(t_inv)};
}

double max_squeeze(std::span<const ElementaryOp> ops) {
  double out = 0.0;
  for (const auto& op : ops) {
    if (const auto* sq = std::get_if<Squeezing>(&op); sq && sq->sigma.size() > 0) {
      out = std::max(out, sq->sigma.cwiseAbs().maxCoeff());
    }
  }
  return out;
}

CMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return unitary_from_gaussian(n, rng);
}

std::vector<ElementaryOp> random_ops(std::size_t n_modes, double max_squeeze,
                                     double max_displacement, std::uint64_t seed) {
  if (n_modes == 0) throw DomainError("random_ops: n_modes must be positive");
  if (!(max_squeeze >= 0.0) || !(max_displacement >= 0.0)) {
    throw DomainError("random_ops: bounds must be non-negative");
  }
  const auto m = static_cast<Eigen::Index>(n_modes);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  CVector t(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const double radius = max_displacement * std::sqrt(unit(rng));
    const double angle = 2.0 * std::numbers::pi * unit(rng);
    t[j] = std::polar(radius, angle);
  }
  CMatrix u_left = unitary_from_gaussian(n_modes, rng);
  RVector sigma(m);
  for (Eigen::Index j = 0; j < m; ++j) sigma[j] = max_squeeze * unit(rng);
  CMatrix u_right = unitary_from_gaussian(n_modes, rng);

  return {Displacement{t}, Rotation{u_left}, Squeezing{sigma},
          Rotation{u_right.adjoint()}};
}

BogoliubovTransform random_transform(std::size_t n_modes, double max_squeeze,
                                     double max_displacement, std::uint64_t seed) {
  const auto ops = random_ops(n_modes, max_squeeze, max_displacement, seed);
  return from_elementary(ops, n_modes);
}

}  // namespace bogofock
