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

#include "bogofock/hermite.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bogofock/errors.hpp"
#include "bogofock/parallel.hpp"

namespace bogofock {

namespace {

constexpr double kSymmetryTolerance = 1e-12;
constexpr double kInverseTolerance = 1e-10;

bool is_symmetric(const CMatrix& m) {
  const double scale = std::max(1.0, max_abs(m));
  return max_abs(m - m.transpose()) <= kSymmetryTolerance * scale;
}

// i^n for integer n.
cplx i_pow(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void check_shapes(const MultiIndex& v, const CVector& vec, const CMatrix& mat) {
  const auto m = static_cast<Eigen::Index>(v.size());
  if (vec.size() != m || mat.rows() != m || mat.cols() != m) {
    throw ShapeError("index of length " + std::to_string(v.size()) +
                     " does not match vector/matrix dimensions");
  }
}

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Shared nested sum of the moment and Hermite direct formulas:
//   Σ_l (−1)^{Σl} ∏ C(v_j, l_j) Σ_s σ_s (hᵀQh/2)^s (hᵀc)^{ṽ−2s} / (s!(ṽ−2s)!)
// with h = v/2 − l and σ_s = (−1)^s when `alternate_s`, else 1.
cplx kan_sum(const MultiIndex& v, const CVector& linear, const CMatrix& quad,
             bool alternate_s, const SummationLimits& limits) {
  check_shapes(v, linear, quad);
  const int total = v.total();
  if (limits.max_total && total > *limits.max_total) {
    throw DomainError("total degree " + std::to_string(total) +
                      " exceeds the summation cap " +
                      std::to_string(*limits.max_total));
  }
  const std::size_t dim = v.size();
  const int s_max = total / 2;

  std::vector<double> s_weight(static_cast<std::size_t>(s_max) + 1);
  for (int s = 0; s <= s_max; ++s) {
    double w = std::exp(-std::lgamma(s + 1.0) - std::lgamma(total - 2.0 * s + 1.0));
    s_weight[static_cast<std::size_t>(s)] = (alternate_s && (s % 2)) ? -w : w;
  }

  std::vector<int> l(dim, 0);
  Eigen::VectorXd h(static_cast<Eigen::Index>(dim));
  std::vector<cplx> p_pow(static_cast<std::size_t>(total) + 1);
  std::vector<cplx> q_pow(static_cast<std::size_t>(s_max) + 1);
  const CMatrix quad_half = 0.5 * quad;

  cplx sum{0.0, 0.0};
  while (true) {
    int l_total = 0;
    double log_binom = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      h[static_cast<Eigen::Index>(j)] = 0.5 * v[j] - l[j];
      l_total += l[j];
      log_binom += log_binomial(v[j], l[j]);
    }
    const cplx p = h.cast<cplx>().dot(linear);
    const cplx q = h.cast<cplx>().dot(quad_half * h.cast<cplx>());
    p_pow[0] = 1.0;
    for (int e = 1; e <= total; ++e) p_pow[e] = p_pow[e - 1] * p;
    q_pow[0] = 1.0;
    for (int e = 1; e <= s_max; ++e) q_pow[e] = q_pow[e - 1] * q;

    cplx inner{0.0, 0.0};
    for (int s = 0; s <= s_max; ++s) {
      inner += s_weight[static_cast<std::size_t>(s)] * q_pow[s] * p_pow[total - 2 * s];
    }
    const double outer = std::exp(log_binom);
    sum += (l_total % 2 ? -outer : outer) * inner;

    std::size_t pos = dim;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (l[pos] < v[pos]) {
        ++l[pos];
        for (std::size_t j = pos + 1; j < dim; ++j) l[j] = 0;
        done = false;
        break;
      }
    }
    if (done) break;
  }
  return sum;
}

}  // namespace

HermiteParams::HermiteParams(CMatrix lambda, CVector x,
                             bool require_positive_real_part)
    : lambda_(std::move(lambda)), x_(std::move(x)) {
  if (lambda_.rows() != lambda_.cols() || lambda_.rows() != x_.size()) {
    throw ShapeError("HermiteParams: Λ must be square and match x");
  }
  if (!is_symmetric(lambda_)) {
    throw ShapeError("HermiteParams: Λ is not symmetric");
  }
  if (require_positive_real_part) {
    Eigen::MatrixXd re = lambda_.real();
    Eigen::LLT<Eigen::MatrixXd> llt(0.5 * (re + re.transpose()));
    if (llt.info() != Eigen::Success) {
      throw DomainError("HermiteParams: real part of Λ is not positive definite");
    }
  }
  Eigen::FullPivLU<CMatrix> lu(lambda_);
  if (!lu.isInvertible()) throw InversionError("HermiteParams: Λ is singular");
  lambda_inv_ = lu.inverse();
  const auto n = lambda_.rows();
  if (max_abs(lambda_ * lambda_inv_ - CMatrix::Identity(n, n)) > kInverseTolerance) {
    throw InversionError("HermiteParams: Λ is too ill-conditioned to invert");
  }
}

GaussianMomentParams::GaussianMomentParams(CVector mean, CMatrix covariance)
    : mean_(std::move(mean)), covariance_(std::move(covariance)) {
  if (covariance_.rows() != covariance_.cols() ||
      covariance_.rows() != mean_.size()) {
    throw ShapeError("GaussianMomentParams: covariance must be square and match the mean");
  }
  if (!is_symmetric(covariance_)) {
    throw ShapeError("GaussianMomentParams: covariance is not symmetric");
  }
}

std::size_t lattice_size(const MultiIndex& bound) {
  std::size_t n = 1;
  for (std::size_t j = 0; j < bound.size(); ++j) {
    const auto f = static_cast<std::size_t>(bound[j]) + 1;
    if (n > std::numeric_limits<std::size_t>::max() / f) {
      return std::numeric_limits<std::size_t>::max();
    }
    n *= f;
  }
  return n;
}

HermiteLattice::HermiteLattice(MultiIndex bound, const CVector& mu,
                               const CMatrix& w, std::size_t threads,
                               std::size_t max_entries, std::size_t normalized_prefix)
    : bound_(std::move(bound)) {
  check_shapes(bound_, mu, w);
  if (normalized_prefix > bound_.size()) {
    throw ShapeError("normalized prefix longer than the index");
  }
  const std::size_t n = lattice_size(bound_);
  if (n > max_entries) {
    throw ResourceError("Hermite lattice of " + std::to_string(n) +
                        " entries exceeds the cap of " + std::to_string(max_entries));
  }
  const std::size_t dim = bound_.size();
  strides_.assign(dim, 1);
  for (std::size_t j = dim; j-- > 1;) {
    strides_[j - 1] = strides_[j] * (static_cast<std::size_t>(bound_[j]) + 1);
  }
  values_.assign(n, cplx{0.0, 0.0});
  values_[0] = 1.0;

  // Lowers the largest position k (first among ties): u = w + e_k, then
  //   H_u = μ_k H_w − Σ_j W_kj w_j H_{w−e_j}
  // or its scaled form on the first normalized_prefix positions.
  auto fill = [&](std::size_t offset) {
    std::size_t rem = offset;
    std::size_t k = dim;
    std::vector<int> u(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      u[j] = static_cast<int>(rem / strides_[j]);
      rem %= strides_[j];
      if (u[j] > 0 && (k == dim || u[j] > u[k])) k = j;
    }
    const std::size_t wo = offset - strides_[k];
    --u[k];
    const auto kk = static_cast<Eigen::Index>(k);
    cplx value = mu[kk] * values_[wo];
    for (std::size_t j = 0; j < dim; ++j) {
      if (u[j] > 0) {
        const double c = j < normalized_prefix ? std::sqrt(static_cast<double>(u[j]))
                                               : static_cast<double>(u[j]);
        value -= w(kk, static_cast<Eigen::Index>(j)) * c * values_[wo - strides_[j]];
      }
    }
    if (k < normalized_prefix) value /= std::sqrt(static_cast<double>(u[k] + 1));
    values_[offset] = value;
  };

  if (threads == 0) threads = default_worker_count();
  if (threads <= 1 || n < 4096) {
    for (std::size_t o = 1; o < n; ++o) fill(o);
    return;
  }
  // Entries of equal total degree only depend on lower degrees.
  std::vector<std::vector<std::size_t>> levels(static_cast<std::size_t>(bound_.total()) + 1);
  for (std::size_t o = 1; o < n; ++o) {
    std::size_t rem = o;
    std::size_t deg = 0;
    for (std::size_t j = 0; j < dim; ++j) {
      deg += rem / strides_[j];
      rem %= strides_[j];
    }
    levels[deg].push_back(o);
  }
  for (const auto& level : levels) {
    parallel_for(0, level.size(), threads, [&](std::size_t i) { fill(level[i]); });
  }
}

std::size_t HermiteLattice::offset_of(const MultiIndex& u) const {
  if (!u.dominated_by(bound_)) {
    throw OutOfRangeError("index " + u.to_string() + " outside lattice bound " +
                          bound_.to_string());
  }
  std::size_t o = 0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    o += static_cast<std::size_t>(u[j]) * strides_[j];
  }
  return o;
}

cplx HermiteLattice::at(const MultiIndex& u) const {
  return values_[offset_of(u)];
}

cplx mhp_recursion(const MultiIndex& v, const CVector& mu, const CMatrix& w) {
  check_shapes(v, mu, w);
  return HermiteLattice(v, mu, w, 1).at(v);
}

cplx mhp_recursion_normalized(const MultiIndex& v, const CVector& mu, const CMatrix& w,
                              std::size_t normalized_prefix) {
  check_shapes(v, mu, w);
  return HermiteLattice(v, mu, w, 1, HermiteLattice::kDefaultMaxEntries, normalized_prefix).at(v);
}

cplx mhp_recursion(const MultiIndex& v, const HermiteParams& params) {
  const CVector mu = params.lambda_inv() * params.x();
  return mhp_recursion(v, mu, params.lambda_inv());
}

cplx mhp_direct(const MultiIndex& v, const CVector& mu, const CMatrix& w,
                const SummationLimits& limits) {
  return kan_sum(v, mu, w, /*alternate_s=*/true, limits);
}

cplx mgm_direct(const MultiIndex& v, const GaussianMomentParams& params,
                const SummationLimits& limits) {
  return kan_sum(v, params.mean(), params.covariance(), /*alternate_s=*/false, limits);
}

cplx mgm_to_mhp(const MultiIndex& v, const GaussianMomentParams& params) {
  // With Λ = covariance⁻¹ and x = iΛy_m the recursion inputs are
  // Λ⁻¹x = i·y_m and Λ⁻¹ = covariance, so no inversion is needed.
  const CVector mu = cplx{0.0, 1.0} * params.mean();
  return i_pow(-v.total()) * mhp_recursion(v, mu, params.covariance());
}

cplx mhp_to_mgm(const MultiIndex& v, const HermiteParams& params,
                const SummationLimits& limits) {
  const CVector mean = cplx{0.0, -1.0} * (params.lambda_inv() * params.x());
  const GaussianMomentParams moments(mean, params.lambda_inv());
  return i_pow(v.total()) * mgm_direct(v, moments, limits);
}

}  // namespace bogofock
