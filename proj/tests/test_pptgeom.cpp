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

#include "alphaneg/pptgeom.hpp"
#include "alphaneg/states.hpp"
#include "test_util.hpp"

namespace alphaneg {
namespace {

double min_eig(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  return es.eigenvalues().minCoeff();
}

// Random separable state: a convex mixture of product pure states.
ComplexMatrix random_separable(const BipartitionDims& dims, int terms, Rng& rng) {
  ComplexMatrix out = ComplexMatrix::Zero(dims.total(), dims.total());
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double total = 0.0;
  for (int k = 0; k < terms; ++k) {
    ComplexVector a = ginibre(dims.dA, 1, rng).col(0).normalized();
    ComplexVector b = ginibre(dims.dB, 1, rng).col(0).normalized();
    const ComplexVector v = tensor(a, b);
    const double w = u(rng);
    out += w * v * v.adjoint();
    total += w;
  }
  return out / total;
}

void expect_in_ppt_set(const ComplexMatrix& s, const BipartitionDims& dims) {
  EXPECT_NEAR(s.trace().real(), 1.0, 1e-9);
  EXPECT_GE(min_eig(s), -1e-9);
  EXPECT_GE(min_eig(partial_transpose(s, dims)), -1e-9);
}

TEST(ProjectPpt, MaximallyEntangledQubits) {
  const ComplexMatrix phi = max_entangled(2).matrix();
  const ComplexMatrix expected = 0.5 * phi + (identity(4) - phi) / 6.0;
  EXPECT_MATRIX_NEAR(project_ppt(phi, {2, 2}).matrix(), expected, 1e-8);
}

TEST(ProjectPpt, FixesPptStates) {
  const BipartiteState w = werner_state(3, 0.4);
  EXPECT_MATRIX_NEAR(project_ppt(w.matrix(), w.dims()).matrix(), w.matrix(), 1e-8);
}

TEST(ProjectPpt, OutputFeasibleAndIdempotent) {
  Rng rng(1);
  for (int i = 0; i < 10; ++i) {
    const BipartitionDims dims(2, 2 + i % 2);
    const ComplexMatrix m = random_hermitian(dims.total(), rng);
    const ComplexMatrix p = project_ppt(m, dims).matrix();
    expect_in_ppt_set(p, dims);
    EXPECT_MATRIX_NEAR(project_ppt(p, dims).matrix(), p, 1e-7);
  }
}

TEST(ProjectPpt, NearestAmongSeparableCandidates) {
  Rng rng(2);
  const BipartitionDims dims(2, 3);
  for (int i = 0; i < 5; ++i) {
    const ComplexMatrix m = random_state(dims, 1, rng).matrix();
    const ComplexMatrix p = project_ppt(m, dims).matrix();
    const double dist = (m - p).norm();
    for (int k = 0; k < 50; ++k) {
      const ComplexMatrix s = random_separable(dims, 1 + k % 4, rng);
      EXPECT_LE(dist, (m - s).norm() + 1e-9);
      // Variational inequality of a convex projection.
      EXPECT_LE(hs_inner(m - p, s - p), 1e-7);
    }
  }
}

TEST(ProjectPpt, NonExpansive) {
  Rng rng(3);
  const BipartitionDims dims(2, 2);
  for (int i = 0; i < 10; ++i) {
    const ComplexMatrix a = random_hermitian(4, rng);
    const ComplexMatrix b = random_hermitian(4, rng);
    const double lhs = (project_ppt(a, dims).matrix() - project_ppt(b, dims).matrix()).norm();
    EXPECT_LE(lhs, (a - b).norm() + 1e-8);
  }
}

TEST(ProjectPpt, ReportsNonConvergence) {
  DykstraConfig cfg;
  cfg.max_cycles = 1;
  try {
    project_ppt(max_entangled(3).matrix(), {3, 3}, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotConverged);
  }
  cfg.residual_tol = -1.0;
  EXPECT_THROW(project_ppt(identity(4) / 4.0, {2, 2}, cfg), Error);
}

TEST(Dykstra, WarmStartReproducesColdResult) {
  Rng rng(4);
  const BipartitionDims dims(2, 2);
  const ComplexMatrix m = random_hermitian(4, rng);
  DykstraCorrections corr;
  const ProjectionResult cold = dykstra_project(m, PartialTransposeMap{dims}, {}, corr);
  ASSERT_TRUE(cold.converged);
  const ProjectionResult warm = dykstra_project(m, PartialTransposeMap{dims}, {}, corr);
  ASSERT_TRUE(warm.converged);
  EXPECT_LT(warm.cycles, cold.cycles);
  EXPECT_MATRIX_NEAR(warm.point, cold.point, 1e-8);
}

TEST(Regularize, InteriorAndValidation) {
  const BipartitionDims dims(2, 2);
  EXPECT_TRUE(is_ppt_inv(interior_point(dims)));
  EXPECT_FALSE(is_ppt_inv(werner_state(2, 0.5)));
  const BipartiteState r = regularize(werner_state(2, 0.5), 0.1);
  EXPECT_TRUE(is_ppt_inv(r));
  EXPECT_NEAR(r.matrix().trace().real(), 1.0, 1e-14);
  EXPECT_THROW(regularize(identity(4), 0.0), Error);
  EXPECT_THROW(regularize(identity(4), 1.0), Error);
}

}  // namespace
}  // namespace alphaneg
