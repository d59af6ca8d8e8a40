// Copyright 2026 The alphaneg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ALPHANEG_DIVERGENCE_HPP
#define ALPHANEG_DIVERGENCE_HPP

#include <cmath>
#include <span>
#include <string>

#include "alphaneg/bipartite_state.hpp"
#include "alphaneg/linalg.hpp"

namespace alphaneg {

/// Order parameter alpha in [1, inf].
class Alpha {
 public:
  explicit Alpha(double value) : value_(value) {
    if (!(value >= 1.0)) {
      throw Error(ErrorKind::kAlphaOutOfRange,
                  "alpha must lie in [1, inf], got " + std::to_string(value));
    }
  }
  static Alpha infinity() { return Alpha(kInf); }

  double value() const { return value_; }
  bool is_one() const { return value_ == 1.0; }
  bool is_infinite() const { return std::isinf(value_); }
  /// Exponent (1 - alpha) / (2 alpha) of the sandwiching powers.
  double sandwich_exponent() const {
    return is_infinite() ? -0.5 : (1.0 - value_) / (2.0 * value_);
  }

  friend bool operator==(const Alpha&, const Alpha&) = default;

 private:
  double value_;
};

/// A real number or +inf. +inf is a legitimate value (support violation), not
/// an error.
class ExtendedReal {
 public:
  explicit ExtendedReal(double v) : v_(v) {}
  static ExtendedReal infinity() { return ExtendedReal(kInf); }

  bool is_infinite() const { return std::isinf(v_) && v_ > 0; }
  double value() const { return v_; }

 private:
  double v_;
};

struct Tolerances {
  double support = kSupportTol;
  double hermitian = kHermitianTol;
};

namespace detail {

inline void require_nonzero(const ComplexMatrix& m, const char* name) {
  if (m.norm() == 0.0) {
    throw Error(ErrorKind::kZeroOperator, std::string(name) + " is zero");
  }
}

inline HermitianEig checked_pd_eig(const ComplexMatrix& sigma) {
  HermitianEig es = hermitian_eig(sigma);
  if (es.eigenvalues.minCoeff() <= 0.0) {
    throw Error(ErrorKind::kNotPositiveDefinite, "sigma is not positive definite");
  }
  return es;
}

}  // namespace detail

/// ||sigma^{(1-a)/2a} X sigma^{(1-a)/2a}||_a with generalized powers on the
/// support of sigma; +inf when supp(X) is not inside supp(sigma).
inline ExtendedReal mu_alpha(const ComplexMatrix& x, const ComplexMatrix& sigma,
                             Alpha alpha, const Tolerances& tol = {}) {
  detail::require_nonzero(x, "X");
  detail::require_nonzero(sigma, "sigma");
  if (x.rows() != sigma.rows()) {
    throw Error(ErrorKind::kDimensionMismatch, "mu_alpha: X and sigma differ in size");
  }
  check_hermitian(x, tol.hermitian);
  const HermitianEig se = hermitian_eig(sigma, tol.hermitian);
  const double lmax = se.eigenvalues.maxCoeff();
  if (se.eigenvalues.minCoeff() < -tol.support * lmax) {
    throw Error(ErrorKind::kNegativeSpectrum, "sigma is not positive semidefinite");
  }
  if (!support_leq(x, sigma, tol.support)) return ExtendedReal::infinity();

  const ComplexMatrix xh = hermitian_part(x);
  if (alpha.is_one()) {
    const ComplexMatrix proj = support_projector(se, tol.support);
    return ExtendedReal(schatten_norm(proj * xh * proj, 1.0));
  }
  const ComplexMatrix s = power_from_eig(se, alpha.sandwich_exponent(), tol.support);
  const ComplexMatrix m = hermitian_part(s * xh * s);
  return ExtendedReal(schatten_norm(m, alpha.value()));
}

inline ExtendedReal nu_alpha(const ComplexMatrix& x, const ComplexMatrix& sigma,
                             Alpha alpha, const Tolerances& tol = {}) {
  const ExtendedReal mu = mu_alpha(x, sigma, alpha, tol);
  if (mu.is_infinite()) return mu;
  return ExtendedReal(std::log2(mu.value()));
}

/// log2 ||sigma^{-1/2} X sigma^{-1/2}||_inf on supp(sigma).
inline ExtendedReal d_max(const ComplexMatrix& x, const ComplexMatrix& sigma,
                          const Tolerances& tol = {}) {
  return nu_alpha(x, sigma, Alpha::infinity(), tol);
}

inline ExtendedReal sandwiched_renyi(const ComplexMatrix& x,
                                     const ComplexMatrix& sigma, double alpha,
                                     const Tolerances& tol = {}) {
  if (!(alpha > 1.0)) {
    throw Error(ErrorKind::kAlphaOutOfRange,
                "sandwiched Renyi prefactor alpha/(alpha-1) needs alpha > 1");
  }
  const ExtendedReal nu = nu_alpha(x, sigma, Alpha(alpha), tol);
  if (nu.is_infinite()) return nu;
  if (std::isinf(alpha)) return nu;
  return ExtendedReal(alpha / (alpha - 1.0) * nu.value());
}

/// ||sigma^{1/2p} X sigma^{1/2p}||_p for positive definite sigma.
inline double weighted_norm(const ComplexMatrix& x, const ComplexMatrix& sigma,
                            double p) {
  if (!(p >= 1.0)) {
    throw Error(ErrorKind::kAlphaOutOfRange, "weighted norm needs p >= 1");
  }
  const HermitianEig se = detail::checked_pd_eig(sigma);
  if (std::isinf(p)) return schatten_norm(x, kInf);
  const ComplexMatrix s = power_from_eig(se, 1.0 / (2.0 * p), 0.0);
  return schatten_norm(s * x * s, p);
}

/// Gamma_sigma(X) = sigma^{1/2} X sigma^{1/2}, or its inverse.
inline ComplexMatrix gamma_conjugate(const ComplexMatrix& x,
                                     const ComplexMatrix& sigma, bool inverse) {
  const HermitianEig se = detail::checked_pd_eig(sigma);
  const ComplexMatrix s = power_from_eig(se, inverse ? -0.5 : 0.5, 0.0);
  return s * x * s;
}

inline double classical_relative_entropy(std::span<const double> p,
                                         std::span<const double> q) {
  if (p.size() != q.size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "relative entropy: distributions differ in length");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(q[i] > 0.0)) {
      throw Error(ErrorKind::kInvalidArgument, "relative entropy: q must be > 0");
    }
    if (p[i] < 0.0) {
      throw Error(ErrorKind::kInvalidArgument, "relative entropy: p must be >= 0");
    }
    if (p[i] > 0.0) acc += p[i] * std::log2(p[i] / q[i]);
  }
  return acc;
}

/// log2 ||T_B(rho)||_1.
inline double log_negativity(const BipartiteState& rho) {
  const double n = schatten_norm(hermitian_part(partial_transpose(rho)), 1.0);
  return std::max(0.0, std::log2(n));
}

/// True iff T_B(|T_B(rho)|) >= -tol.
inline bool binegativity_psd(const BipartiteState& rho, double tol = 1e-9) {
  const ComplexMatrix abs_pt = abs_hermitian(partial_transpose(rho));
  const ComplexMatrix bineg = partial_transpose(abs_pt, rho.dims());
  return eig_symmetrized(bineg).eigenvalues.minCoeff() >= -tol;
}

}  // namespace alphaneg

#endif  // ALPHANEG_DIVERGENCE_HPP
