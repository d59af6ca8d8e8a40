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
#include <vector>

#include "alphaneg/divergence.hpp"
#include "alphaneg/solver.hpp"
#include "alphaneg/states.hpp"
#include "test_util.hpp"

namespace alphaneg {
namespace {

double min_eig(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  return es.eigenvalues().minCoeff();
}

// First non-binegative state drawn from rank-2 3x3 states.
BipartiteState non_binegative_state(std::uint64_t seed) {
  Rng rng(seed);
  while (true) {
    BipartiteState r = random_state({3, 3}, 2, rng);
    if (!binegativity_psd(r)) return r;
  }
}

void expect_ppt_certificate(const BipartiteState& s, double tol) {
  EXPECT_NEAR(s.matrix().trace().real(), 1.0, tol);
  EXPECT_GE(min_eig(s.matrix()), -tol);
  EXPECT_GE(min_eig(partial_transpose(s)), -tol);
}

TEST(Objective, GradientMatchesFiniteDifferences) {
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    const BipartitionDims dims(2, 2 + i % 2);
    const int d = dims.total();
    const ComplexMatrix x = partial_transpose(random_state(dims, d, rng));
    const ComplexMatrix sigma = random_pd(d, rng);
    const ComplexMatrix dir = random_hermitian(d, rng);
    const double alpha = 1.2 + 0.4 * i;
    const auto [f, g] = objective_and_gradient(x, sigma, alpha);
    const double h = 1e-6;
    const double fp = objective_and_gradient(x, sigma + h * dir, alpha).first;
    const double fm = objective_and_gradient(x, sigma - h * dir, alpha).first;
    const double fd = (fp - fm) / (2.0 * h);
    EXPECT_NEAR(hs_inner(g, dir), fd, 1e-5 * std::max(1.0, std::abs(fd)));
    EXPECT_NEAR(f, std::pow(mu_alpha(x, sigma, Alpha(alpha)).value(), alpha), 1e-9 * f);
  }
}

TEST(Objective, RejectsOutOfDomain) {
  const ComplexMatrix x = partial_transpose(max_entangled(2));
  EXPECT_THROW(objective_and_gradient(x, identity(4) / 4.0, 1.0), Error);
  EXPECT_THROW(objective_and_gradient(x, identity(4) / 4.0, kInf), Error);
  EXPECT_THROW(objective_and_gradient(x, testing::diag({1.0, 0.0, 0.0, 0.0}), 2.0), Error);
  EXPECT_THROW(objective_and_gradient(ComplexMatrix::Zero(4, 4), identity(4), 2.0), Error);
}

TEST(EAlpha, MaximallyEntangledIsLogDimension) {
  for (int d : {2, 3}) {
    for (double a : {1.0, 1.5, 2.0, 5.0, kInf}) {
      const MeasureResult r = e_alpha(max_entangled(d), Alpha(a));
      EXPECT_TRUE(r.converged) << r.diagnostic;
      EXPECT_NEAR(r.value_bits, std::log2(d), 1e-4) << "d=" << d << " alpha=" << a;
    }
  }
}

TEST(EAlpha, PptStatesAreZero) {
  for (double a : {1.0, 2.0, kInf}) {
    EXPECT_NEAR(e_alpha(werner_state(3, 0.3), Alpha(a)).value_bits, 0.0, 1e-9);
    EXPECT_NEAR(e_alpha(werner_state(2, 0.5), Alpha(a)).value_bits, 0.0, 1e-9);
  }
}

TEST(EAlpha, TwoQubitStatesCollapseToLogNegativity) {
  Rng rng(2);
  for (int i = 0; i < 5; ++i) {
    const BipartiteState rho = random_state({2, 2}, 1 + i % 4, rng);
    const double en = log_negativity(rho);
    for (double a : {2.0, kInf}) {
      const MeasureResult r = e_alpha(rho, Alpha(a));
      EXPECT_TRUE(r.converged) << r.diagnostic;
      EXPECT_NEAR(r.value_bits, en, 1e-4);
    }
  }
}

TEST(EAlpha, LocallyRankDeficientStates) {
  // Schmidt rank 2 inside 2x3, embedded through a random isometry on B.
  Rng rng(7);
  const ComplexMatrix vb = random_unitary(3, rng).leftCols(2);
  const BipartiteState small = random_state({2, 2}, 1, rng);
  const ComplexMatrix w = tensor(identity(2), vb);
  const BipartiteState rho({2, 3}, w * small.matrix() * w.adjoint());
  const ComplexMatrix x = partial_transpose(rho);
  const double en = log_negativity(rho);
  for (double a : {2.0, 5.0, 20.0, kInf}) {
    const MeasureResult r = e_alpha(rho, Alpha(a));
    EXPECT_TRUE(r.converged) << r.diagnostic;
    EXPECT_NEAR(r.value_bits, en, 1e-6) << "alpha=" << a;
    EXPECT_NEAR(r.value_bits, e_alpha(small, Alpha(a)).value_bits, 1e-6);
    EXPECT_EQ(r.certificate.dims(), rho.dims());
    expect_ppt_certificate(r.certificate, 1e-8);
    if (!std::isinf(a)) {
      EXPECT_NEAR(nu_alpha(x, r.certificate.matrix(), Alpha(a)).value(), r.value_bits, 1e-6);
    }
  }
}

TEST(EAlpha, CertificateIsFeasibleAndAttainsValue) {
  const BipartiteState rho = non_binegative_state(3);
  const ComplexMatrix x = partial_transpose(rho);
  for (double a : {1.5, 2.0, 5.0}) {
    const MeasureResult r = e_alpha(rho, Alpha(a));
    ASSERT_TRUE(r.converged) << r.diagnostic;
    expect_ppt_certificate(r.certificate, 1e-8);
    const double attained = nu_alpha(x, r.certificate.matrix(), Alpha(a)).value();
    EXPECT_GE(attained, r.value_bits - 1e-9);
    EXPECT_NEAR(attained, r.value_bits, 1e-4);
  }
}

TEST(EAlpha, OrderedBetweenBracketEnds) {
  const BipartiteState rho = non_binegative_state(4);
  const double en = log_negativity(rho);
  const double ek = e_kappa(rho).value_bits;
  EXPECT_GT(ek, en + 1e-3);
  double prev = en;
  for (double a : {1.5, 2.0, 5.0, 20.0}) {
    const MeasureResult r = e_alpha(rho, Alpha(a));
    EXPECT_GE(r.value_bits, prev - 2e-4);
    EXPECT_LE(r.value_bits, ek + 1e-4);
    EXPECT_GE(r.bracket.e_n_lower, en - 1e-12);
    prev = r.value_bits;
  }
}

TEST(EKappa, CertificateSatisfiesConstraints) {
  const BipartiteState rho = non_binegative_state(5);
  const MeasureResult r = e_kappa(rho);
  ASSERT_TRUE(r.converged) << r.diagnostic;
  const ComplexMatrix s = std::exp2(r.value_bits) * r.certificate.matrix();
  const ComplexMatrix ps = partial_transpose(s, rho.dims());
  const ComplexMatrix x = partial_transpose(rho);
  EXPECT_GE(min_eig(s), -1e-7);
  EXPECT_GE(min_eig(ps - x), -1e-7);
  EXPECT_GE(min_eig(ps + x), -1e-7);
  EXPECT_GE(r.value_bits, log_negativity(rho) - 1e-9);
}

TEST(EKappa, Examples) {
  EXPECT_NEAR(e_kappa(max_entangled(3)).value_bits, std::log2(3.0), 1e-6);
  EXPECT_EQ(e_kappa(werner_state(2, 0.2)).value_bits, 0.0);
}

TEST(Bracket, FlagsOutOfRangeValues) {
  const BipartiteState rho = max_entangled(2);
  MeasureResult r = e_alpha(rho, Alpha(2.0));
  const Bracket b = bracket(rho, r);
  EXPECT_NEAR(b.e_n_lower, 1.0, 1e-12);
  EXPECT_NEAR(b.e_kappa_upper, 1.0, 1e-6);
  EXPECT_TRUE(r.converged);
  r.value_bits = 1.5;
  bracket(rho, r);
  EXPECT_FALSE(r.converged);
  EXPECT_FALSE(r.diagnostic.empty());
}

TEST(Sweep, MonotoneAndValidated) {
  const BipartiteState rho = non_binegative_state(6);
  const SweepResult s = alpha_sweep(rho, {1.0, 1.5, 2.0, 4.0, kInf});
  ASSERT_EQ(s.points.size(), 5u);
  EXPECT_TRUE(s.monotonicity_violations.empty());
  EXPECT_NEAR(s.points.front().value_bits, log_negativity(rho), 1e-12);
  EXPECT_THROW(alpha_sweep(rho, {2.0, 1.5}), Error);
  EXPECT_THROW(alpha_sweep(rho, {0.5, 2.0}), Error);
}

TEST(SolverConfig, Validation) {
  SolverConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.armijo.shrink = 1.5;
  EXPECT_THROW(e_alpha(max_entangled(2), Alpha(2.0), cfg), Error);
  cfg = {};
  cfg.barrier.growth = 1.0;
  EXPECT_THROW(cfg.validate(), Error);
}

}  // namespace
}  // namespace alphaneg
