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

// State constructors, validators and the fixed example states.

#ifndef ALPHANEG_STATES_HPP
#define ALPHANEG_STATES_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <tuple>
#include <vector>

#include "alphaneg/bipartite_state.hpp"
#include "alphaneg/divergence.hpp"
#include "alphaneg/linalg.hpp"

namespace alphaneg {

using Rng = std::mt19937_64;

/// Unit vector with an attached factorization of its dimension. Two factors
/// for bipartite vectors, three for the tripartite monogamy fixture.
struct PureState {
  ComplexVector amplitudes;
  std::vector<int> factors;

  PureState(ComplexVector amps, std::vector<int> dims)
      : amplitudes(std::move(amps)), factors(std::move(dims)) {
    long total = 1;
    for (int f : factors) total *= f;
    if (total != amplitudes.size()) {
      throw Error(ErrorKind::kDimensionMismatch, "PureState: factor product mismatch");
    }
    if (std::abs(amplitudes.norm() - 1.0) > 1e-10) {
      throw Error(ErrorKind::kInvalidState, "PureState: amplitudes not normalized");
    }
  }

  ComplexMatrix density() const { return amplitudes * amplitudes.adjoint(); }
};

inline ComplexMatrix swap_operator(int d) {
  ComplexMatrix f = ComplexMatrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) f(a * d + b, b * d + a) = 1.0;
  return f;
}

inline BipartiteState max_entangled(int d) {
  if (d < 2) throw Error(ErrorKind::kInvalidArgument, "max_entangled needs d >= 2");
  ComplexMatrix m = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i * d + i, j * d + j) = 1.0 / d;
  return BipartiteState({d, d}, m);
}

/// (1-p) * 2/(d(d+1)) Pi_S + p * 2/(d(d-1)) Pi_A.
inline BipartiteState werner_state(int d, double p) {
  if (d < 2) throw Error(ErrorKind::kInvalidArgument, "werner_state needs d >= 2");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "werner_state needs p in [0,1]");
  }
  const ComplexMatrix id = identity(d * d);
  const ComplexMatrix f = swap_operator(d);
  const ComplexMatrix sym = (id + f) / 2.0;
  const ComplexMatrix anti = (id - f) / 2.0;
  const double dd = d;
  const ComplexMatrix m = (1.0 - p) * 2.0 / (dd * (dd + 1.0)) * sym +
                          p * 2.0 / (dd * (dd - 1.0)) * anti;
  return BipartiteState({d, d}, m);
}

inline ComplexMatrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

/// G G^dagger / Tr[G G^dagger] with G a D x rank complex Gaussian matrix.
inline BipartiteState random_state(BipartitionDims dims, int rank, Rng& rng) {
  const int d = dims.total();
  if (rank < 1 || rank > d) {
    throw Error(ErrorKind::kInvalidArgument, "random_state: rank out of range");
  }
  const ComplexMatrix g = ginibre(d, rank, rng);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return BipartiteState(dims, hermitian_part(m));
}

inline BipartiteState random_state(BipartitionDims dims, int rank,
                                   std::uint64_t seed) {
  Rng rng(seed);
  return random_state(dims, rank, rng);
}

/// Random Hermitian matrix with Gaussian entries (GUE-like, unnormalized).
inline ComplexMatrix random_hermitian(int d, Rng& rng) {
  return hermitian_part(ginibre(d, d, rng));
}

/// Random positive definite matrix G G^dagger + shift * I, unit trace.
inline ComplexMatrix random_pd(int d, Rng& rng, double shift = 0.05) {
  const ComplexMatrix g = ginibre(d, d, rng);
  ComplexMatrix m = g * g.adjoint() / static_cast<double>(d) + shift * identity(d);
  m /= m.trace().real();
  return hermitian_part(m);
}

/// Haar-random unitary from the QR decomposition of a Ginibre matrix, with
/// the phases of R's diagonal absorbed.
inline ComplexMatrix random_unitary(int d, Rng& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return q;
}

inline bool ppt_membership(const BipartiteState& rho, double tol = kSupportTol) {
  return eig_symmetrized(partial_transpose(rho)).eigenvalues.minCoeff() >= -tol;
}

struct NoConvexityFixture {
  BipartiteState rho1;
  BipartiteState rho2;
  BipartiteState mixture;
};

/// Phi^2, the classically correlated state (|00><00| + |11><11|)/2, and
/// their equal mixture.
inline NoConvexityFixture no_convexity_fixture() {
  const BipartiteState phi = max_entangled(2);
  ComplexMatrix cc = ComplexMatrix::Zero(4, 4);
  cc(0, 0) = 0.5;
  cc(3, 3) = 0.5;
  const BipartiteState rho2({2, 2}, cc);
  const BipartiteState mix({2, 2}, (phi.matrix() + cc) / 2.0);
  return {phi, rho2, mix};
}

/// (|000> + |011> + sqrt(2)|110>)/2 on three qubits, index 4a + 2b + c.
inline PureState no_monogamy_fixture() {
  ComplexVector psi = ComplexVector::Zero(8);
  psi(0) = 0.5;
  psi(3) = 0.5;
  psi(6) = 1.0 / std::sqrt(2.0);
  return PureState(psi, {2, 2, 2});
}

/// The three bipartite cuts A:B, A:C and A:BC of a three-factor pure state.
struct TripartiteCuts {
  BipartiteState ab;
  BipartiteState ac;
  BipartiteState a_bc;
};

inline TripartiteCuts tripartite_cuts(const PureState& psi) {
  if (psi.factors.size() != 3) {
    throw Error(ErrorKind::kDimensionMismatch, "tripartite_cuts needs three factors");
  }
  const int da = psi.factors[0], db = psi.factors[1], dc = psi.factors[2];
  const ComplexMatrix full = psi.density();
  const BipartiteState a_bc({da, db * dc}, full);
  const BipartiteState ab({da, db},
                          partial_trace(full, {da * db, dc}, Subsystem::kB));
  // Reorder to a, c, b and trace out the trailing b factor.
  ComplexVector reordered(psi.amplitudes.size());
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b)
      for (int c = 0; c < dc; ++c)
        reordered(a * dc * db + c * db + b) = psi.amplitudes(a * db * dc + b * dc + c);
  const ComplexMatrix acb = reordered * reordered.adjoint();
  const BipartiteState ac({da, dc},
                          partial_trace(acb, {da * dc, db}, Subsystem::kB));
  return {ab, ac, a_bc};
}

/// rho (x) omega regrouped as (A1 A2) : (B1 B2).
inline BipartiteState tensor_states(const BipartiteState& rho, const BipartiteState& omega) {
  const int a1 = rho.dims().dA, b1 = rho.dims().dB;
  const int a2 = omega.dims().dA, b2 = omega.dims().dB;
  const ComplexMatrix t = tensor(rho.matrix(), omega.matrix());  // order A1 B1 A2 B2
  const int d = a1 * b1 * a2 * b2;
  // Composite index of (a1, a2, b1, b2) in the A1 B1 A2 B2 ordering.
  std::vector<int> perm(d);
  for (int i1 = 0; i1 < a1; ++i1)
    for (int i2 = 0; i2 < a2; ++i2)
      for (int j1 = 0; j1 < b1; ++j1)
        for (int j2 = 0; j2 < b2; ++j2) {
          const int target = ((i1 * a2 + i2) * b1 + j1) * b2 + j2;
          perm[target] = ((i1 * b1 + j1) * a2 + i2) * b2 + j2;
        }
  ComplexMatrix out(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) out(r, c) = t(perm[r], perm[c]);
  return BipartiteState::unchecked(BipartitionDims(a1 * a2, b1 * b2), out);
}

/// Block operator sum_x w(x) |x><x| (x) B^x together with its ingredients.
struct CqState {
  std::vector<double> probs;
  std::vector<double> weights;
  std::vector<ComplexMatrix> blocks;
};

/// Validates the classical-quantum ingredients. `probs` must be a probability
/// vector and `weights` strictly positive.
inline CqState make_cq(std::vector<double> probs, std::vector<double> weights,
                       std::vector<ComplexMatrix> blocks) {
  if (probs.size() != weights.size() || probs.size() != blocks.size() ||
      blocks.empty()) {
    throw Error(ErrorKind::kDimensionMismatch, "cq: inconsistent lengths");
  }
  double total = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw Error(ErrorKind::kInvalidArgument, "cq: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorKind::kInvalidArgument, "cq: probabilities do not sum to 1");
  }
  for (double q : weights) {
    if (!(q > 0.0)) throw Error(ErrorKind::kInvalidArgument, "cq: weights must be > 0");
  }
  const auto n = blocks.front().rows();
  for (const auto& b : blocks) {
    if (b.rows() != n || b.cols() != n) {
      throw Error(ErrorKind::kDimensionMismatch, "cq: blocks must be square, equal size");
    }
  }
  return {std::move(probs), std::move(weights), std::move(blocks)};
}

/// Assembles sum_x coeff(x) |x><x| (x) B^x using the given coefficients
/// (the probabilities for the Y operator, the weights for sigma).
inline ComplexMatrix cq_build(std::span<const double> coeffs,
                              const std::vector<ComplexMatrix>& blocks) {
  if (coeffs.size() != blocks.size() || blocks.empty()) {
    throw Error(ErrorKind::kDimensionMismatch, "cq_build: inconsistent lengths");
  }
  const auto n = blocks.front().rows();
  const auto k = static_cast<Eigen::Index>(blocks.size());
  ComplexMatrix out = ComplexMatrix::Zero(k * n, k * n);
  for (Eigen::Index x = 0; x < k; ++x) {
    if (blocks[x].rows() != n || blocks[x].cols() != n) {
      throw Error(ErrorKind::kDimensionMismatch, "cq_build: blocks differ in size");
    }
    out.block(x * n, x * n, n, n) = coeffs[x] * blocks[x];
  }
  return out;
}

}  // namespace alphaneg

#endif  // ALPHANEG_STATES_HPP
