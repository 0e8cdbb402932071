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

// Acceptance runner: one pass/fail line per criterion. With no arguments
// every criterion runs; otherwise only the listed numbers.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bogofock/hermite.hpp"
#include "bogofock/husimi.hpp"
#include "bogofock/oracle.hpp"

namespace bogofock::acceptance {
namespace {

const cplx I{0.0, 1.0};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;
  std::function<void(Outcome&)> body;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

MultiIndex random_index(std::size_t m, int max_total, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(m) - 1);
  std::uniform_int_distribution<int> total(0, max_total);
  std::vector<int> e(m, 0);
  const int t = total(rng);
  for (int i = 0; i < t; ++i) ++e[static_cast<std::size_t>(pick(rng))];
  return MultiIndex(e);
}

CMatrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 0.3);
  const auto k = static_cast<Eigen::Index>(n);
  CMatrix a(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) a(i, j) = {g(rng), g(rng)};
  }
  CMatrix w = 0.5 * (a + a.transpose());
  w.diagonal().array() += 1.0;
  return w;
}

CVector random_vector(std::size_t n, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> g(0.0, scale);
  CVector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = {g(rng), g(rng)};
  return v;
}

// 1. Direct sum against recursion on (μ, W) taken from Q-functions of random
// symplectic transforms.
void dual_path(Outcome& o) {
  std::mt19937_64 rng(1001);
  double worst_rel = 0.0;
  int failures = 0;
  for (int c = 0; c < 200; ++c) {
    const std::size_t m = 1 + static_cast<std::size_t>(c % 6);
    const std::size_t n_modes = (m + 1) / 2;
    const auto h = gaussian_qfunction(random_transform(n_modes, 0.8, 1.0, 5000 + static_cast<std::uint64_t>(c)));
    const auto k = static_cast<Eigen::Index>(m);
    const CMatrix w = h.v_matrix.topLeftCorner(k, k);
    const CVector mu = h.mu.head(k);
    const MultiIndex v = random_index(m, 10, rng);
    const cplx rec = mhp_recursion(v, mu, w);
    const cplx dir = mhp_direct(v, mu, w);
    const double diff = std::abs(dir - rec);
    const bool ok = diff <= 1e-12 || diff <= 1e-9 * std::abs(rec);
    if (std::abs(rec) > 1e-12) worst_rel = std::max(worst_rel, diff / std::abs(rec));
    if (!ok) ++failures;
  }
  o.pass = failures == 0;
  o.detail << "cases=200 max_rel=" << sci(worst_rel) << " failures=" << failures;
}

// 2. Moments by direct summation against the Hermite identity, plus Wick
// pairings.
void triangle(Outcome& o) {
  std::mt19937_64 rng(2002);
  double worst_rel = 0.0;
  int failures = 0;
  for (int c = 0; c < 100; ++c) {
    const std::size_t m = 1 + static_cast<std::size_t>(c % 4);
    const CMatrix cov = random_symmetric(m, rng);
    const CVector mean = random_vector(m, rng, 0.5);
    const MultiIndex v = random_index(m, 8, rng);
    const cplx moment = mgm_direct(v, GaussianMomentParams(mean, cov));
    const CMatrix lambda = cov.inverse();
    const cplx hermite = mhp_recursion(v, HermiteParams(lambda, I * (lambda * mean)));
    const cplx via = std::pow(I, -v.total()) * hermite;
    const double diff = std::abs(moment - via);
    if (std::abs(via) > 1e-12) worst_rel = std::max(worst_rel, diff / std::abs(via));
    if (diff > 1e-10 * std::max(std::abs(via), 1e-2)) ++failures;
  }
  const double rho = 0.37, sigma2 = 1.9;
  CMatrix cov2(2, 2);
  cov2 << 1.0, rho, rho, 1.0;
  const double wick_pair = std::abs(mgm_direct(MultiIndex{1, 1}, GaussianMomentParams(CVector::Zero(2), cov2)) - rho);
  const double wick_four = std::abs(mgm_direct(MultiIndex{4}, GaussianMomentParams(CVector::Zero(1), CMatrix::Constant(1, 1, sigma2))) -
                                    3.0 * sigma2 * sigma2);
  o.pass = failures == 0 && wick_pair <= 1e-12 && wick_four <= 1e-12;
  o.detail << "cases=100 max_rel=" << sci(worst_rel) << " failures=" << failures
           << " |E[y1y2]-rho|=" << sci(wick_pair) << " |E[y^4]-3s^4|=" << sci(wick_four);
}

struct OracleCase {
  std::size_t n_modes;
  std::vector<ElementaryOp> ops;
  BogoliubovTransform transform;
};

std::vector<OracleCase> oracle_cases() {
  std::vector<OracleCase> out;
  for (std::uint64_t c = 0; c < 20; ++c) {
    const std::size_t n = 1 + c % 2;
    auto ops = random_ops(n, 0.8, 1.0, 3000 + c);
    auto t = from_elementary(ops, n);
    out.push_back({n, std::move(ops), std::move(t)});
  }
  return out;
}

// Phase of the Gaussian elements against the oracle, as in criterion 3.
struct GaussianCheck {
  PhaseAlignment aligned;
  ConvergedOracle oracle;
};

GaussianCheck gaussian_check(const OracleCase& c) {
  auto oracle = converged_oracle(c.ops, c.n_modes, 16);
  const auto h = gaussian_qfunction(c.transform);
  std::vector<cplx> values, reference;
  for (const auto& m : enumerate_simplex(c.n_modes, 6)) {
    for (const auto& n : enumerate_simplex(c.n_modes, 6 - m.total())) {
      values.push_back(matrix_element(h, m, n));
      reference.push_back(oracle_element(oracle.op, m, n));
    }
  }
  return {align_global_phase(values, reference), std::move(oracle)};
}

// 3. Gaussian elements against the converged truncated-Fock oracle.
void oracle_gaussian(Outcome& o) {
  double worst_dev = 0.0, worst_mod = 0.0, worst_phase_angle = 0.0;
  std::size_t max_cutoff = 0;
  bool all_converged = true;
  for (const auto& c : oracle_cases()) {
    const auto check = gaussian_check(c);
    worst_dev = std::max(worst_dev, check.aligned.max_deviation);
    worst_mod = std::max(worst_mod, std::abs(std::abs(check.aligned.ratio) - 1.0));
    worst_phase_angle = std::max(worst_phase_angle, std::abs(std::arg(check.aligned.phase)));
    max_cutoff = std::max(max_cutoff, check.oracle.cutoff);
    all_converged = all_converged && check.oracle.converged;
  }
  o.pass = all_converged && worst_dev <= 1e-7 && worst_mod <= 1e-7;
  o.detail << "transforms=20 max_dev=" << sci(worst_dev) << " max||ratio|-1|=" << sci(worst_mod)
           << " max|arg(phase)|=" << sci(worst_phase_angle) << " max_cutoff=" << max_cutoff
           << " converged=" << (all_converged ? "yes" : "no");
}

// 4. Quadrature elements against the oracle with the criterion-3 phase.
void oracle_quadrature(Outcome& o) {
  double worst_dev = 0.0;
  std::size_t count = 0;
  bool all_converged = true;
  for (const auto& c : oracle_cases()) {
    const auto phase = gaussian_check(c).aligned.phase;
    ConvergenceOptions opts;
    opts.max_column_total = 9;
    const auto oracle = converged_oracle(c.ops, c.n_modes, 16, opts);
    all_converged = all_converged && oracle.converged;
    for (auto kind : {QuadratureKind::position, QuadratureKind::momentum}) {
      const auto q = quadrature_qfunction(c.transform, kind);
      for (const auto& k : enumerate_simplex(c.n_modes, 3)) {
        for (const auto& m : enumerate_simplex(c.n_modes, 6)) {
          for (const auto& n : enumerate_simplex(c.n_modes, 6 - m.total())) {
            const cplx value = quadrature_element(q, m, n, k);
            const cplx ref = oracle_quadrature_element(oracle.op, m, n, k, kind);
            worst_dev = std::max(worst_dev, std::abs(ref - phase * value));
            ++count;
          }
        }
      }
    }
  }
  o.pass = all_converged && worst_dev <= 1e-6;
  o.detail << "elements=" << count << " max_dev=" << sci(worst_dev)
           << " converged=" << (all_converged ? "yes" : "no");
}

// 5. Closed-form anchors, with the two-photon squeezed amplitude taken
// exactly as stated: −(cosh r)^{−1/2} tanh(r)/√2.
void anchors(Outcome& o) {
  double disp = 0.0;
  for (cplx t : {cplx{1.0, 0.0}, cplx{0.3, -0.4}, std::polar(1.0, 2.2), cplx{0.0, 0.05}}) {
    const auto h = gaussian_qfunction(BogoliubovTransform(CMatrix::Identity(1, 1), CMatrix::Zero(1, 1),
                                                          CVector::Constant(1, t)));
    double factorial = 1.0;
    for (int k = 0; k <= 8; ++k) {
      if (k > 0) factorial *= k;
      const cplx expected = std::exp(-0.5 * std::norm(t)) * std::pow(t, k) / std::sqrt(factorial);
      disp = std::max(disp, std::abs(matrix_element(h, MultiIndex{k}, MultiIndex{0}) - expected));
    }
  }
  double odd = 0.0, two = 0.0;
  std::ostringstream two_values;
  for (double r : {0.1, 0.5, 1.0}) {
    const auto h = gaussian_qfunction(BogoliubovTransform(CMatrix::Constant(1, 1, std::cosh(r)),
                                                          CMatrix::Constant(1, 1, -std::sinh(r)),
                                                          CVector::Zero(1)));
    for (int k = 1; k <= 9; k += 2) odd = std::max(odd, std::abs(matrix_element(h, MultiIndex{k}, MultiIndex{0})));
    const double expected = -std::tanh(r) / (std::sqrt(2.0) * std::sqrt(std::cosh(r)));
    const cplx got = matrix_element(h, MultiIndex{2}, MultiIndex{0});
    two = std::max(two, std::abs(got - expected));
    two_values << " r=" << r << ":" << got.real() << "(want " << expected << ")";
  }
  const auto q = quadrature_qfunction(BogoliubovTransform::identity(1), QuadratureKind::position);
  const auto p = quadrature_qfunction(BogoliubovTransform::identity(1), QuadratureKind::momentum);
  const MultiIndex z{0};
  const double q1 = std::abs(quadrature_element(q, z, z, MultiIndex{1}));
  const double q2 = std::abs(quadrature_element(q, z, z, MultiIndex{2}) - 0.5);
  const double p2 = std::abs(quadrature_element(p, z, z, MultiIndex{2}) - 0.5);
  const bool disp_ok = disp <= 1e-10, odd_ok = odd < 1e-12, two_ok = two <= 1e-10;
  const bool quad_ok = q1 <= 1e-10 && q2 <= 1e-10 && p2 <= 1e-10;
  o.pass = disp_ok && odd_ok && two_ok && quad_ok;
  o.detail << "displacement max_err=" << sci(disp) << (disp_ok ? "" : "!")
           << " squeezed odd max=" << sci(odd) << (odd_ok ? "" : "!")
           << " <2|S|0> max_err=" << sci(two) << (two_ok ? "" : "!") << two_values.str()
           << " vacuum <Q>,<Q^2>-1/2,<P^2>-1/2=" << sci(q1) << "," << sci(q2) << "," << sci(p2);
}

// 6. Column norm of |0⟩ over the heuristic photon box.
void normalization(Outcome& o) {
  double lo = 1.0, hi = 0.0;
  for (std::uint64_t c = 0; c < 10; ++c) {
    const auto t = random_transform(2, 0.6, 1.0, 6000 + c);
    const auto block = element_block(gaussian_qfunction(t), truncation_bounds(t), MultiIndex{0, 0});
    const double norm = block.column_norm_squared(0);
    lo = std::min(lo, norm);
    hi = std::max(hi, norm);
  }
  o.pass = lo >= 1.0 - 1e-4 && hi <= 1.0 + 1e-9;
  o.detail << "transforms=10 max_deficit=" << sci(1.0 - lo) << " max_excess=" << sci(hi - 1.0);
}

// 7. Structural identities over random instances.
void structure(Outcome& o) {
  double v_sym = 0.0, w_inv = 0.0, det_rel = 0.0, bm = 0.0, parity = 0.0;
  std::mt19937_64 rng(7007);
  for (std::uint64_t c = 0; c < 50; ++c) {
    const std::size_t n = 1 + c % 4;
    const auto t = random_transform(n, 1.5, 1.0, 7000 + c);
    const auto h = gaussian_qfunction(t);
    v_sym = std::max(v_sym, max_abs(h.v_matrix - h.v_matrix.transpose()));
    const auto w = w_matrix(t);
    const auto dim = static_cast<Eigen::Index>(2 * n);
    w_inv = std::max(w_inv, max_abs(w.w * w.w_inv - CMatrix::Identity(dim, dim)));
    const cplx det_w = (n % 2 == 0 ? 1.0 : -1.0) * w.w.determinant();
    const double det_s2 = std::norm(t.s().determinant());
    det_rel = std::max(det_rel, std::abs(det_w - det_s2) / det_s2);
    bm = std::max(bm, reconstruction_residual(bloch_messiah(t), t));

    const std::size_t m = 1 + c % 6;
    const CMatrix lambda = random_symmetric(m, rng);
    const CVector x = random_vector(m, rng, 1.0);
    const MultiIndex v = random_index(m, 10, rng);
    const cplx plus = mhp_recursion(v, HermiteParams(lambda, x));
    const cplx minus = mhp_recursion(v, HermiteParams(lambda, -x));
    const double sign = v.total() % 2 == 0 ? 1.0 : -1.0;
    parity = std::max(parity, std::abs(minus - sign * plus) / std::max(1.0, std::abs(plus)));
  }
  o.pass = v_sym <= 1e-10 && w_inv <= 1e-10 && det_rel <= 1e-8 && bm <= 1e-10 && parity <= 1e-12;
  o.detail << "instances=50 V_sym=" << sci(v_sym) << " WWinv=" << sci(w_inv) << " det_rel=" << sci(det_rel)
           << " BM=" << sci(bm) << " parity=" << sci(parity);
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "dual-path Hermite equivalence", 30.0, dual_path},
      {2, "moment-Hermite triangle", 10.0, triangle},
      {3, "oracle equivalence, Gaussian elements", 180.0, oracle_gaussian},
      {4, "oracle equivalence, quadrature elements", 180.0, oracle_quadrature},
      {5, "closed-form anchors", 60.0, anchors},
      {6, "normalization", 120.0, normalization},
      {7, "structural identities", 30.0, structure},
  };
  return all;
}

}  // namespace
}  // namespace bogofock::acceptance

int main(int argc, char** argv) {
  using namespace bogofock::acceptance;
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed <= c.time_limit_s;
    const bool pass = o.pass && in_time;
    all_pass = all_pass && pass;
    std::printf("[%s] criterion %d (%s): %s; time=%.2fs (limit %.0fs)%s\n", pass ? "PASS" : "FAIL", c.id,
                c.title, o.detail.str().c_str(), elapsed, c.time_limit_s, in_time ? "" : " TOO SLOW");
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
