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
#include <optional>
#include <vector>

#include "bogofock/multi_index.hpp"
#include "bogofock/types.hpp"

namespace bogofock {

/// Parameters of H_v(x; Λ) with Λ complex symmetric. The inverse is
/// computed once at construction.
class HermiteParams {
 public:
  /// Throws ShapeError on inconsistent sizes or non-symmetric Λ, and
  /// InversionError when Λ is singular. With `require_positive_real_part`
  /// the symmetric real part of Λ must also be positive definite.
  HermiteParams(CMatrix lambda, CVector x,
                bool require_positive_real_part = false);

  std::size_t dimension() const { return static_cast<std::size_t>(x_.size()); }
  const CMatrix& lambda() const { return lambda_; }
  const CMatrix& lambda_inv() const { return lambda_inv_; }
  const CVector& x() const { return x_; }

 private:
  CMatrix lambda_;
  CMatrix lambda_inv_;
  CVector x_;
};

/// Normal distribution N(mean, covariance) with a complex symmetric
/// covariance (Λ⁻¹ in the Hermite notation).
class GaussianMomentParams {
 public:
  GaussianMomentParams(CVector mean, CMatrix covariance);

  std::size_t dimension() const {
    return static_cast<std::size_t>(mean_.size());
  }
  const CVector& mean() const { return mean_; }
  const CMatrix& covariance() const { return covariance_; }

 private:
  CVector mean_;
  CMatrix covariance_;
};

/// Guard on the total degree for the direct summation engines. Set
/// `max_total` to std::nullopt to lift the cap.
struct SummationLimits {
  std::optional<int> max_total = 40;
};

/// H_v(x; Λ) by the raising recursion
///   H_{v+e_k} = (Λ⁻¹x)_k H_v − Σ_j (Λ⁻¹)_{kj} v_j H_{v−e_j},
/// memoised over the lattice of sub-indices of v.
cplx mhp_recursion(const MultiIndex& v, const HermiteParams& params);

/// H_v(W⁻¹μ; W⁻¹) / √(v_0! ⋯ v_{p−1}!) by the scaled recursion of
/// HermiteLattice with normalized_prefix = p.
cplx mhp_recursion_normalized(const MultiIndex& v, const CVector& mu, const CMatrix& w,
                              std::size_t normalized_prefix);

/// Same recursion expressed through (μ, W) = (Λ⁻¹x, Λ⁻¹), i.e. the value
/// H_v(W⁻¹μ; W⁻¹) without inverting W. This is the v-th derivative at the
/// origin of exp(−½zᵀWz + μᵀz).
cplx mhp_recursion(const MultiIndex& v, const CVector& mu, const CMatrix& w);

/// H_v(W⁻¹μ; W⁻¹) by the direct nested sum over l ≤ v and s ≤ ⌊ṽ/2⌋ with
/// h = v/2 − l. No matrix inversion is performed.
cplx mhp_direct(const MultiIndex& v, const CVector& mu, const CMatrix& w,
                const SummationLimits& limits = {});

/// E[∏ y_k^{v_k}] for y ~ N(mean, covariance) by direct summation.
cplx mgm_direct(const MultiIndex& v, const GaussianMomentParams& params,
                const SummationLimits& limits = {});

/// The moment E[∏ y^v] obtained through the Hermite recursion:
/// i^{−ṽ} H_v(iΛ y_m; Λ) with Λ = covariance⁻¹.
cplx mgm_to_mhp(const MultiIndex& v, const GaussianMomentParams& params);

/// H_v(x; Λ) obtained through the moment summation:
/// i^{ṽ} E[∏ y^v] for y ~ N(−iΛ⁻¹x, Λ⁻¹).
cplx mhp_to_mgm(const MultiIndex& v, const HermiteParams& params,
                const SummationLimits& limits = {});

/// Dense table of H_u(W⁻¹μ; W⁻¹) for every u ≤ bound, filled by the same
/// recursion as mhp_recursion. Entries are bit-identical to single calls
/// because each entry is always derived from the same predecessor
/// (the largest position, first among ties, is always lowered).
///
/// With `normalized_prefix` = p the table instead holds
/// H_u / √(u_0! ⋯ u_{p−1}!), filled by the equivalent recursion
///   G_{w+e_k} = (μ_k G_w − Σ_j W_kj c_j G_{w−e_j}) / √f_k
/// with c_j = √w_j, f_k = w_k + 1 on scaled positions and c_j = w_j,
/// f_k = 1 elsewhere. For Fock amplitudes this keeps every entry of order
/// one, where the unscaled values grow like √(u!) and lose digits to
/// cancellation at high photon numbers.
class HermiteLattice {
 public:
  /// Default cap on the number of lattice entries.
  static constexpr std::size_t kDefaultMaxEntries = std::size_t{1} << 22;

  /// `threads` = 0 means "use the default worker count" (see
  /// default_worker_count()). Throws ResourceError if the lattice would hold
  /// more than `max_entries` values.
  HermiteLattice(MultiIndex bound, const CVector& mu, const CMatrix& w,
                 std::size_t threads = 1,
                 std::size_t max_entries = kDefaultMaxEntries,
                 std::size_t normalized_prefix = 0);

  const MultiIndex& bound() const { return bound_; }
  std::size_t size() const { return values_.size(); }

  /// Value at u; throws OutOfRangeError if u is not dominated by bound().
  cplx at(const MultiIndex& u) const;
  cplx at_offset(std::size_t offset) const { return values_[offset]; }
  std::size_t offset_of(const MultiIndex& u) const;

 private:
  MultiIndex bound_;
  std::vector<std::size_t> strides_;
  std::vector<cplx> values_;
};

/// Number of lattice entries ∏(b_j + 1); saturates at SIZE_MAX.
std::size_t lattice_size(const MultiIndex& bound);

}  // namespace bogofock
