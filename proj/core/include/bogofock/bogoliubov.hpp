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
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "bogofock/types.hpp"

namespace bogofock {

/// Default max-abs tolerance for the symplectic identities.
inline constexpr double kSymplecticTolerance = 1e-10;

/// Default max-abs tolerance for UU† = I on rotation factors.
inline constexpr double kUnitaryTolerance = 1e-10;

/// Multimode Bogoliubov transformation
///   Ô†âÔ = S â − R â† + t,
/// i.e. Ô†ξ̂Ô = Kξ̂ + l with K = [[S, −R], [−R*, S*]] and l = (t, t*).
///
/// The constructor only checks shapes; use validate_symplectic() for a
/// report or checked() to reject non-symplectic input.
class BogoliubovTransform {
 public:
  BogoliubovTransform(CMatrix s, CMatrix r, CVector t);

  static BogoliubovTransform identity(std::size_t n_modes);

  /// As the constructor, but throws InvalidTransformError when any of the
  /// four symplectic residuals exceeds `tolerance`.
  static BogoliubovTransform checked(CMatrix s, CMatrix r, CVector t,
                                     double tolerance = kSymplecticTolerance);

  std::size_t n_modes() const { return static_cast<std::size_t>(t_.size()); }
  const CMatrix& s() const { return s_; }
  const CMatrix& r() const { return r_; }
  const CVector& t() const { return t_; }

  /// 2N×2N matrix K.
  CMatrix k_matrix() const;
  /// Length-2N vector l = (t, t*).
  CVector l_vector() const;

  /// Rebuilds a transform from (K, l); only the top blocks are read.
  static BogoliubovTransform from_k_l(const CMatrix& k, const CVector& l);

 private:
  CMatrix s_;
  CMatrix r_;
  CVector t_;
};

/// Max-abs residuals of
///   SS† − RR† − I,  SRᵀ − RSᵀ,  S†S − RᵀR* − I,  R†S − SᵀR*.
struct SymplecticReport {
  double ss_minus_rr = 0.0;
  double sr_symmetry = 0.0;
  double s_s_minus_rr = 0.0;
  double rs_symmetry = 0.0;
  double tolerance = kSymplecticTolerance;
  bool pass = true;

  double max_residual() const;
};

SymplecticReport validate_symplectic(const BogoliubovTransform& transform,
                                     double tolerance = kSymplecticTolerance);

/// Throws InvalidTransformError unless validate_symplectic passes.
void require_symplectic(const BogoliubovTransform& transform,
                        double tolerance = kSymplecticTolerance);

/// D(t) = exp(tᵀâ† − t†â): S = I, R = 0, shift t.
struct Displacement {
  CVector t;
};

/// R(U) = exp(â†ᵀ (ln U) â): S = U, R = 0.
struct Rotation {
  CMatrix u;
};

/// S(Σ) = exp(½(â†ᵀΣâ† − âᵀΣâ)) with Σ real diagonal: S = cosh Σ, R = −sinh Σ.
struct Squeezing {
  RVector sigma;
};

using ElementaryOp = std::variant<Displacement, Rotation, Squeezing>;

std::size_t op_modes(const ElementaryOp& op);

/// Bogoliubov data of a single elementary factor. Throws
/// InvalidTransformError for a non-unitary rotation.
BogoliubovTransform elementary_transform(const ElementaryOp& op,
                                         double unitary_tolerance = kUnitaryTolerance);

/// Transform of the operator product Ô_A Ô_B: K = K_A K_B, l = K_A l_B + l_A.
BogoliubovTransform compose(const BogoliubovTransform& a,
                            const BogoliubovTransform& b);

/// Transform of the ordered product ops[0]·ops[1]·… acting on n_modes.
/// An empty list yields the identity.
BogoliubovTransform from_elementary(std::span<const ElementaryOp> ops,
                                    std::size_t n_modes,
                                    double unitary_tolerance = kUnitaryTolerance);

/// Transform of Ô⁻¹ = Ô†: K⁻¹ = ZK†Z, l' = −K⁻¹l.
BogoliubovTransform inverse(const BogoliubovTransform& transform);

/// Largest squeezing parameter among the squeezing factors of a list.
double max_squeeze(std::span<const ElementaryOp> ops);

/// S = U_L cosh(Σ) U_R†, R = −U_L sinh(Σ) U_Rᵀ with descending Σ.
struct BlochMessiah {
  CMatrix u_left;
  RVector sigma;
  CMatrix u_right;

  /// Factor list D(t) R(U_L) S(Σ) R(U_R†) reproducing the transform.
  std::vector<ElementaryOp> to_ops(const CVector& t) const;
  CMatrix s_matrix() const;
  CMatrix r_matrix() const;
};

/// Throws InvalidTransformError if the transform is not symplectic.
BlochMessiah bloch_messiah(const BogoliubovTransform& transform,
                           double tolerance = kSymplecticTolerance);

/// Max-abs reconstruction residual of a factorization against (S, R).
double reconstruction_residual(const BlochMessiah& bm,
                               const BogoliubovTransform& transform);

/// Haar-random unitary: QR of a complex Gaussian matrix with the phases of
/// R's diagonal moved into Q.
CMatrix random_unitary(std::size_t n, std::uint64_t seed);

/// Random factor list D(t) R(U_L) S(Σ) R(U_R†) with Σ_j ~ U[0, max_squeeze]
/// and t_j uniform in the disk of radius max_displacement. Deterministic in
/// the seed.
std::vector<ElementaryOp> random_ops(std::size_t n_modes, double max_squeeze,
                                     double max_displacement,
                                     std::uint64_t seed);

/// from_elementary(random_ops(...)).
BogoliubovTransform random_transform(std::size_t n_modes, double max_squeeze,
                                     double max_displacement,
                                     std::uint64_t seed);

}  // namespace bogofock
