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

#include <gtest/gtest.h>

#include <cmath>

#include "alphaneg/linalg.hpp"
#include "alphaneg/states.hpp"
#include "test_util.hpp"

namespace alphaneg {
namespace {

using testing::diag;

// Reference Kronecker product written as a plain quadruple loop.
ComplexMatrix kron_loop(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

TEST(Tensor, IdentityAndIndexConvention) {
  EXPECT_MATRIX_NEAR(tensor(identity(2), identity(2)), identity(4), 0.0);
  EXPECT_MATRIX_NEAR(tensor(diag({1, 0}), diag({0, 1})), diag({0, 1, 0, 0}), 0.0);
}

TEST(Tensor, MatchesLoopOracle) {
  Rng rng(11);
  const ComplexMatrix a = ginibre(2, 2, rng);
  const ComplexMatrix b = ginibre(2, 2, rng);
  EXPECT_MATRIX_NEAR(tensor(a, b), kron_loop(a, b), 1e-15);
  const ComplexMatrix c = ginibre(3, 2, rng);
  EXPECT_MATRIX_NEAR(tensor(c, a), kron_loop(c, a), 1e-15);
}

TEST(PartialTranspose, InvolutionAndProductRule) {
  Rng rng(3);
  const BipartitionDims dims{2, 3};
  const ComplexMatrix m = ginibre(6, 6, rng);
  EXPECT_MATRIX_NEAR(partial_transpose(partial_transpose(m, dims), dims), m, 0.0);
  const ComplexMatrix a = ginibre(2, 2, rng);
  const ComplexMatrix b = ginibre(3, 3, rng);
  EXPECT_MATRIX_NEAR(partial_transpose(tensor(a, b), dims),
                     tensor(a, ComplexMatrix(b.transpose())), 1e-15);
  EXPECT_MATRIX_NEAR(partial_transpose(tensor(a, b), dims, Subsystem::kA),
                     tensor(ComplexMatrix(a.transpose()), b), 1e-15);
}

TEST(PartialTranspose, MaxEntangledGivesHalfSwap) {
  const ComplexMatrix pt = partial_transpose(max_entangled(2).matrix(), {2, 2});
  EXPECT_MATRIX_NEAR(pt, swap_operator(2) / 2.0, 1e-15);
  const HermitianEig es = hermitian_eig(pt);
  EXPECT_NEAR(es.eigenvalues(0), -0.5, 1e-14);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(es.eigenvalues(i), 0.5, 1e-14);
}

TEST(PartialTranspose, IsometryAndTracePreservingProperty) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int da = 1 + trial % 3, db = 1 + (trial / 3) % 3;
    const ComplexMatrix m = ginibre(da * db, da * db, rng);
    const ComplexMatrix pt = partial_transpose(m, {da, db});
    EXPECT_NEAR(pt.norm(), m.norm(), 1e-12);
    EXPECT_LE(std::abs(pt.trace() - m.trace()), 1e-12);
  }
}

TEST(PartialTranspose, DimensionMismatchThrows) {
  EXPECT_THROW(partial_transpose(identity(5), {2, 2}), Error);
}

TEST(PartialTrace, ProductAndMaxEntangled) {
  Rng rng(9);
  const ComplexMatrix a = ginibre(2, 2, rng);
  const ComplexMatrix b = ginibre(3, 3, rng);
  EXPECT_MATRIX_NEAR(partial_trace(tensor(a, b), {2, 3}), b.trace() * a, 1e-13);
  EXPECT_MATRIX_NEAR(partial_trace(tensor(a, b), {2, 3}, Subsystem::kA),
                     a.trace() * b, 1e-13);
  for (int d = 2; d <= 4; ++d) {
    EXPECT_MATRIX_NEAR(partial_trace(max_entangled(d).matrix(), {d, d}),
                       identity(d) / static_cast<double>(d), 1e-15);
  }
}

TEST(PartialTrace, MatchesIndexLoopOracle) {
  Rng rng(21);
  const ComplexMatrix m = ginibre(4, 4, rng);
  ComplexMatrix ref = ComplexMatrix::Zero(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int ap = 0; ap < 2; ++ap) ref(a, ap) = m(2 * a, 2 * ap) + m(2 * a + 1, 2 * ap + 1);
  EXPECT_MATRIX_NEAR(partial_trace(m, {2, 2}), ref, 1e-15);
  EXPECT_LE(std::abs(partial_trace(m, {2, 2}).trace() - m.trace()), 1e-12);
}

TEST(HermitianEig, DiagonalAndPauliX) {
  const HermitianEig d = hermitian_eig(diag({3, 1, 2}));
  EXPECT_NEAR(d.eigenvalues(0), 1.0, 1e-15);
  EXPECT_NEAR(d.eigenvalues(1), 2.0, 1e-15);
  EXPECT_NEAR(d.eigenvalues(2), 3.0, 1e-15);

  ComplexMatrix x(2, 2);
  x << 0, 1, 1, 0;
  const HermitianEig e = hermitian_eig(x);
  EXPECT_NEAR(e.eigenvalues(0), -1.0, 1e-15);
  EXPECT_NEAR(e.eigenvalues(1), 1.0, 1e-15);
  // Eigenvectors up to phase: |<v|(|0> -+ |1>)/sqrt2>| = 1.
  ComplexVector minus(2), plus(2);
  minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(e.eigenvectors.col(0).dot(minus)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(e.eigenvectors.col(1).dot(plus)), 1.0, 1e-14);
}

TEST(HermitianEig, ReconstructionResidual) {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix h = random_hermitian(8, rng);
    const HermitianEig e = hermitian_eig(h);
    const double scale = e.max_abs();
    EXPECT_LE(hermitian_operator_norm(hermitian_part(e.reconstruct() - h)), 1e-10 * scale);
    EXPECT_LE((e.eigenvectors.adjoint() * e.eigenvectors - identity(8)).norm(), 1e-10);
  }
}

TEST(HermitianEig, RejectsNonHermitian) {
  ComplexMatrix m(2, 2);
  m << 1, 2, 0, 1;
  EXPECT_THROW(
      {
        try {
          hermitian_eig(m);
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::kNonHermitian);
          throw;
        }
      },
      Error);
}

TEST(SchattenNorm, Examples) {
  EXPECT_NEAR(schatten_norm(diag({0.5, -0.5}), 1.0), 1.0, 1e-15);
  for (int d = 1; d <= 5; ++d) {
    for (double a : {1.0, 1.5, 2.0, 7.0}) {
      EXPECT_NEAR(schatten_norm(identity(d), a), std::pow(d, 1.0 / a), 1e-13);
    }
    EXPECT_NEAR(schatten_norm(identity(d), kInf), 1.0, 1e-15);
  }
  Rng rng(4);
  const ComplexMatrix x = ginibre(3, 3, rng);
  EXPECT_NEAR(schatten_norm(x, 2.0), std::sqrt((x.adjoint() * x).trace().real()), 1e-12);
  EXPECT_THROW(schatten_norm(x, 0.5), Error);
}

TEST(SchattenNorm, NonIncreasingInAlpha) {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const ComplexMatrix x = ginibre(4, 4, rng);
    double prev = schatten_norm(x, 1.0);
    for (double a : {1.2, 1.5, 2.0, 3.0, 10.0, 100.0, kInf}) {
      const double n = schatten_norm(x, a);
      EXPECT_LE(n, prev * (1.0 + 1e-12));
      prev = n;
    }
  }
}

TEST(MatrixPower, GeneralizedOnSupport) {
  EXPECT_MATRIX_NEAR(matrix_power_support(identity(3), -0.7), identity(3), 1e-14);
  EXPECT_MATRIX_NEAR(matrix_power_support(diag({4, 0}), -0.5), diag({0.5, 0}), 1e-15);
  Rng rng(2);
  // Rank-3 PSD operator in 4 dimensions.
  const ComplexMatrix g = ginibre(4, 3, rng);
  const ComplexMatrix sigma = g * g.adjoint();
  const ComplexMatrix half = matrix_power_support(sigma, 0.5);
  const ComplexMatrix back = matrix_power_support(half, 2.0);
  EXPECT_MATRIX_NEAR(back, sigma, 1e-12);
  const ComplexMatrix proj = matrix_power_support(matrix_power_support(sigma, 0.5), 0.0);
  EXPECT_MATRIX_NEAR(proj * proj, proj, 1e-12);
  EXPECT_NEAR(proj.trace().real(), 3.0, 1e-12);
  // p = 1 gives the operator restricted to its support.
  EXPECT_MATRIX_NEAR(matrix_power_support(sigma, 1.0), sigma, 1e-12);
}

TEST(MatrixPower, NegativeSpectrumThrows) {
  EXPECT_THROW(matrix_power_support(diag({1, -0.5}), 0.5), Error);
}

TEST(SupportLeq, Examples) {
  Rng rng(6);
  const ComplexMatrix x = random_hermitian(3, rng);
  EXPECT_TRUE(support_leq(x, identity(3)));
  EXPECT_FALSE(support_leq(diag({1, -1}), diag({1, 0})));
  const ComplexMatrix g = ginibre(4, 3, rng);
  const ComplexMatrix sigma = g * g.adjoint();
  const ComplexMatrix proj = matrix_power_support(sigma, 0.0);
  const ComplexMatrix h = ginibre(4, 2, rng);
  const ComplexMatrix inside = proj * (h * h.adjoint()) * proj;
  EXPECT_TRUE(support_leq(inside, sigma));
  EXPECT_FALSE(support_leq(random_hermitian(4, rng), sigma));
}

TEST(PsdProject, FixedPointAndClipping) {
  Rng rng(12);
  const ComplexMatrix g = ginibre(3, 3, rng);
  const ComplexMatrix psd = g * g.adjoint();
  EXPECT_MATRIX_NEAR(psd_project(psd), psd, 1e-12);
  EXPECT_MATRIX_NEAR(psd_project(diag({1, -1})), diag({1, 0}), 0.0);
}

TEST(PsdProject, BeatsRandomCandidates) {
  Rng rng(13);
  const ComplexMatrix h = random_hermitian(3, rng);
  const double best = (psd_project(h) - h).norm();
  for (int i = 0; i < 1000; ++i) {
    const ComplexMatrix g = ginibre(3, 1 + i % 3, rng) * (0.2 + (i % 7) * 0.2);
    const ComplexMatrix cand = g * g.adjoint();
    EXPECT_LE(best, (cand - h).norm() + 1e-12);
  }
}

TEST(PowerGradient, IdentityAndLinearCases) {
  Rng rng(14);
  const ComplexMatrix w = ginibre(3, 3, rng);
  for (double p : {-0.25, 0.5, 2.0}) {
    EXPECT_MATRIX_NEAR(power_gradient(identity(3), p, w), p * hermitian_part(w), 1e-13);
  }
  const ComplexMatrix sigma = random_pd(3, rng);
  EXPECT_MATRIX_NEAR(power_gradient(sigma, 1.0, w), hermitian_part(w), 1e-12);
}

// Central finite difference of Tr[W sigma^p] along Delta.
double fd_directional(const ComplexMatrix& sigma, double p, const ComplexMatrix& w,
                      const ComplexMatrix& delta, double h) {
  auto f = [&](const ComplexMatrix& s) {
    const HermitianEig e = eig_symmetrized(s);
    RealVector v = e.eigenvalues.array().pow(p);
    const ComplexMatrix sp = e.eigenvectors * v.cast<Complex>().asDiagonal() *
                             e.eigenvectors.adjoint();
    return (w * sp).trace().real();
  };
  return (f(sigma + h * delta) - f(sigma - h * delta)) / (2.0 * h);
}

TEST(PowerGradient, MatchesFiniteDifferences) {
  Rng rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + trial % 7;
    const double p = trial == 0 ? -0.25 : (trial % 2 ? -0.25 : -0.4 + 0.01 * trial);
    const ComplexMatrix sigma = random_pd(d, rng, 0.3);
    const ComplexMatrix w = random_hermitian(d, rng);
    const ComplexMatrix delta = random_hermitian(d, rng);
    const double analytic = hs_inner(power_gradient(sigma, p, w), delta);
    const double numeric = fd_directional(sigma, p, w, delta, 1e-5 / d);
    EXPECT_LE(std::abs(analytic - numeric), 1e-5 * std::max(1.0, std::abs(numeric)))
        << "trial " << trial << " d=" << d;
  }
}

TEST(PowerGradient, RequiresPositiveDefinite) {
  EXPECT_THROW(power_gradient(diag({1, 0}), -0.25, identity(2)), Error);
}

}  // namespace
}  // namespace alphaneg
