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

// Dense complex Hermitian kernel shared by every other module.
//
// Composite index convention for a bipartite space C^dA (x) C^dB is
// i = a * dB + b everywhere in the library.

#ifndef ALPHANEG_LINALG_HPP
#define ALPHANEG_LINALG_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "alphaneg/errors.hpp"

namespace alphaneg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kSupportTol = 1e-10;
inline constexpr double kHermitianTol = 1e-9;

enum class Subsystem { kA, kB };

struct BipartitionDims {
  int dA = 1;
  int dB = 1;

  BipartitionDims() = default;
  BipartitionDims(int a, int b) : dA(a), dB(b) {
    if (a < 1 || b < 1) {
      throw Error(ErrorKind::kInvalidArgument,
                  "bipartition dimensions must be positive");
    }
  }

  int total() const { return dA * dB; }
  friend bool operator==(const BipartitionDims&, const BipartitionDims&) = default;
};

struct HermitianEig {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors; // columns

  ComplexMatrix reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() *
           eigenvectors.adjoint();
  }
  double max_abs() const { return eigenvalues.cwiseAbs().maxCoeff(); }
};

inline void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::kDimensionMismatch,
                std::string(who) + ": matrix is not square");
  }
}

inline void require_dims(const ComplexMatrix& m, const BipartitionDims& dims,
                         const char* who) {
  require_square(m, who);
  if (m.rows() != dims.total()) {
    throw Error(ErrorKind::kDimensionMismatch,
                std::string(who) + ": side " + std::to_string(m.rows()) +
                    " does not match dA*dB = " + std::to_string(dims.total()));
  }
}

inline bool all_finite(const ComplexMatrix& m) {
  return m.real().allFinite() && m.imag().allFinite();
}

inline ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return (m + m.adjoint()) / 2.0;
}

inline ComplexMatrix identity(int d) { return ComplexMatrix::Identity(d, d); }

inline Complex trace(const ComplexMatrix& m) { return m.trace(); }

/// Re Tr[a b], the real Hilbert-Schmidt pairing on Hermitian operators.
inline double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.array() * b.transpose().array()).sum().real();
}

inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

/// Entry ((a,b),(a',b')) -> ((a,b'),(a',b)) for subsystem B, and the mirror
/// image for subsystem A.
inline ComplexMatrix partial_transpose(const ComplexMatrix& m,
                                       const BipartitionDims& dims,
                                       Subsystem which = Subsystem::kB) {
  require_dims(m, dims, "partial_transpose");
  const int dA = dims.dA, dB = dims.dB;
  ComplexMatrix out(m.rows(), m.cols());
  for (int a = 0; a < dA; ++a)
    for (int b = 0; b < dB; ++b)
      for (int ap = 0; ap < dA; ++ap)
        for (int bp = 0; bp < dB; ++bp) {
          const Complex v = m(a * dB + b, ap * dB + bp);
          if (which == Subsystem::kB) {
            out(a * dB + bp, ap * dB + b) = v;
          } else {
            out(ap * dB + b, a * dB + bp) = v;
          }
        }
  return out;
}

inline ComplexMatrix partial_trace(const ComplexMatrix& m,
                                   const BipartitionDims& dims,
                                   Subsystem which = Subsystem::kB) {
  require_dims(m, dims, "partial_trace");
  const int dA = dims.dA, dB = dims.dB;
  if (which == Subsystem::kB) {
    ComplexMatrix out = ComplexMatrix::Zero(dA, dA);
    for (int a = 0; a < dA; ++a)
      for (int ap = 0; ap < dA; ++ap)
        for (int b = 0; b < dB; ++b) out(a, ap) += m(a * dB + b, ap * dB + b);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dB, dB);
  for (int b = 0; b < dB; ++b)
    for (int bp = 0; bp < dB; ++bp)
      for (int a = 0; a < dA; ++a) out(b, bp) += m(a * dB + b, a * dB + bp);
  return out;
}

/// Operator norm of an anti-Hermitian or Hermitian matrix via its spectrum.
inline double hermitian_operator_norm(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

/// Eigendecomposition of (h + h^dagger)/2 with no Hermiticity check. Used on
/// hot paths where the argument is Hermitian by construction.
inline HermitianEig eig_symmetrized(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(h));
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::kNotConverged, "Hermitian eigensolver failed");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

/// Throws NonHermitian unless ||h - h^dagger||_inf <= tol * ||h||_inf.
inline void check_hermitian(const ComplexMatrix& h, double tol,
                            double scale_hint = -1.0) {
  require_square(h, "check_hermitian");
  if (!all_finite(h)) {
    throw Error(ErrorKind::kInvalidArgument, "matrix has non-finite entries");
  }
  const ComplexMatrix skew = h - h.adjoint();
  const double skew_fro = skew.norm();
  if (skew_fro == 0.0) return;
  const double scale =
      scale_hint >= 0.0 ? scale_hint : hermitian_operator_norm(hermitian_part(h));
  // Frobenius bounds the operator norm, so the exact norm is only needed when
  // the cheap bound is inconclusive.
  if (skew_fro <= tol * scale) return;
  const ComplexMatrix i_skew = Complex(0.0, 1.0) * skew;
  if (hermitian_operator_norm(i_skew) > tol * scale) {
    throw Error(ErrorKind::kNonHermitian,
                "operator deviates from Hermitian beyond tolerance");
  }
}

inline HermitianEig hermitian_eig(const ComplexMatrix& h,
                                  double tol = kHermitianTol) {
  require_square(h, "hermitian_eig");
  HermitianEig eig = eig_symmetrized(h);
  check_hermitian(h, tol, eig.eigenvalues.size() ? eig.max_abs() : 0.0);
  return eig;
}

inline RealVector singular_values(const ComplexMatrix& m) {
  if (m.rows() == m.cols() && (m - m.adjoint()).norm() <= 1e-14 * m.norm()) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(m),
                                                    Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs();
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues();
}

/// (sum s_i^alpha)^(1/alpha) evaluated with the largest value factored out so
/// that large alpha does not overflow.
inline double schatten_from_values(const RealVector& s, double alpha) {
  if (s.size() == 0) return 0.0;
  const double smax = s.cwiseAbs().maxCoeff();
  if (smax == 0.0) return 0.0;
  if (std::isinf(alpha)) return smax;
  if (alpha == 1.0) return s.cwiseAbs().sum();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    acc += std::pow(std::abs(s(i)) / smax, alpha);
  }
  return smax * std::pow(acc, 1.0 / alpha);
}

inline double schatten_norm(const ComplexMatrix& m, double alpha) {
  if (!(alpha >= 1.0)) {
    throw Error(ErrorKind::kAlphaOutOfRange, "Schatten norm needs alpha >= 1");
  }
  if (!all_finite(m)) {
    throw Error(ErrorKind::kInvalidArgument, "matrix has non-finite entries");
  }
  return schatten_from_values(singular_values(m), alpha);
}

/// f(H) on the spectrum, with f applied only where |lambda| exceeds the
/// support threshold; other eigenvalues map to zero.
template <class F>
ComplexMatrix spectral_apply(const HermitianEig& eig, F&& f, double cutoff) {
  RealVector mapped(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < mapped.size(); ++i) {
    const double l = eig.eigenvalues(i);
    mapped(i) = std::abs(l) > cutoff ? f(l) : 0.0;
  }
  return eig.eigenvectors * mapped.cast<Complex>().asDiagonal() *
         eig.eigenvectors.adjoint();
}

inline double support_cutoff(const HermitianEig& eig, double tol) {
  return eig.eigenvalues.size() ? tol * eig.max_abs() : 0.0;
}

/// Generalized power on the support of a PSD eigendecomposition.
inline ComplexMatrix power_from_eig(const HermitianEig& eig, double p,
                                    double tol = kSupportTol) {
  const double lmax = eig.eigenvalues.size() ? eig.eigenvalues.maxCoeff() : 0.0;
  if (eig.eigenvalues.size() && eig.eigenvalues.minCoeff() < -tol * lmax) {
    throw Error(ErrorKind::kNegativeSpectrum,
                "generalized power of an operator with negative spectrum");
  }
  const double cutoff = tol * lmax;
  RealVector mapped(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < mapped.size(); ++i) {
    const double l = eig.eigenvalues(i);
    mapped(i) = l > cutoff ? std::pow(l, p) : 0.0;
  }
  return eig.eigenvectors * mapped.cast<Complex>().asDiagonal() *
         eig.eigenvectors.adjoint();
}

inline ComplexMatrix matrix_power_support(const ComplexMatrix& h, double p,
                                          double tol = kSupportTol) {
  return power_from_eig(hermitian_eig(h), p, tol);
}

/// Orthogonal projector onto eigenvectors with eigenvalue above tol * lmax.
inline ComplexMatrix support_projector(const HermitianEig& eig,
                                       double tol = kSupportTol) {
  return power_from_eig(eig, 0.0, tol);
}

inline bool support_leq(const ComplexMatrix& x, const ComplexMatrix& sigma,
                        double tol = kSupportTol) {
  check_hermitian(x, kHermitianTol);
  const HermitianEig es = hermitian_eig(sigma);
  const int d = static_cast<int>(sigma.rows());
  const ComplexMatrix outside = identity(d) - support_projector(es, tol);
  const ComplexMatrix leak = outside * x;
  const double scale = std::max(1.0, hermitian_operator_norm(hermitian_part(x)));
  const double corner = hermitian_operator_norm(hermitian_part(leak * outside));
  const double off = leak.norm() == 0.0 ? 0.0 : singular_values(leak).maxCoeff();
  return corner <= tol * scale && off <= tol * scale;
}

inline ComplexMatrix psd_project_eig(const HermitianEig& eig) {
  RealVector clipped = eig.eigenvalues.cwiseMax(0.0);
  return eig.eigenvectors * clipped.cast<Complex>().asDiagonal() *
         eig.eigenvectors.adjoint();
}

inline ComplexMatrix psd_project(const ComplexMatrix& h) {
  return psd_project_eig(hermitian_eig(h));
}

inline ComplexMatrix abs_hermitian(const ComplexMatrix& h) {
  const HermitianEig es = hermitian_eig(h);
  RealVector a = es.eigenvalues.cwiseAbs();
  return es.eigenvectors * a.cast<Complex>().asDiagonal() *
         es.eigenvectors.adjoint();
}

/// First divided difference of x -> x^p at (x, y), both positive.
inline double power_divided_difference(double x, double y, double p) {
  if (x == y) return p * std::pow(x, p - 1.0);
  const double r = std::log(x / y);
  return std::pow(y, p - 1.0) * std::expm1(p * r) / std::expm1(r);
}

/// Adjoint of the Frechet derivative of sigma -> sigma^p applied to the
/// weight: returns G with Tr[W dsigma^p[Delta]] = Tr[G Delta] for Hermitian
/// Delta (Daleckii-Krein formula in the eigenbasis of sigma).
inline ComplexMatrix power_gradient(const HermitianEig& sigma_eig, double p,
                                    const ComplexMatrix& weight) {
  const RealVector& l = sigma_eig.eigenvalues;
  if (l.size() == 0 || l.minCoeff() <= 0.0) {
    throw Error(ErrorKind::kNotPositiveDefinite,
                "power_gradient needs a positive definite sigma");
  }
  const ComplexMatrix& u = sigma_eig.eigenvectors;
  ComplexMatrix w = u.adjoint() * hermitian_part(weight) * u;
  for (Eigen::Index i = 0; i < l.size(); ++i)
    for (Eigen::Index j = 0; j < l.size(); ++j)
      w(i, j) *= power_divided_difference(l(i), l(j), p);
  return hermitian_part(u * w * u.adjoint());
}

inline ComplexMatrix power_gradient(const ComplexMatrix& sigma, double p,
                                    const ComplexMatrix& weight) {
  return power_gradient(hermitian_eig(sigma), p, weight);
}

}  // namespace alphaneg

#endif  // ALPHANEG_LINALG_HPP
