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

#ifndef ALPHANEG_BIPARTITE_STATE_HPP
#define ALPHANEG_BIPARTITE_STATE_HPP

#include <cmath>
#include <string>
#include <utility>

#include "alphaneg/linalg.hpp"

namespace alphaneg {

inline constexpr double kStateTol = 1e-9;

/// Density operator on C^dA (x) C^dB. Construction validates Hermiticity,
/// positivity and unit trace, and stores the symmetrized matrix.
class BipartiteState {
 public:
  BipartiteState(BipartitionDims dims, const ComplexMatrix& matrix,
                 double tol = kStateTol)
      : dims_(dims) {
    require_dims(matrix, dims, "BipartiteState");
    if (!all_finite(matrix)) {
      throw Error(ErrorKind::kInvalidState, "state has non-finite entries");
    }
    if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > tol) {
      throw Error(ErrorKind::kInvalidState, "state is not Hermitian");
    }
    matrix_ = hermitian_part(matrix);
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > tol) {
      throw Error(ErrorKind::kInvalidState,
                  "state trace is " + std::to_string(tr) + ", expected 1");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(matrix_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol) {
      throw Error(ErrorKind::kInvalidState, "state has negative eigenvalues");
    }
  }

  /// Wraps a matrix without validation. For solver iterates that are states
  /// up to the solver's own tolerance.
  static BipartiteState unchecked(BipartitionDims dims, ComplexMatrix matrix) {
    return BipartiteState(dims, std::move(matrix), Unchecked{});
  }

  const BipartitionDims& dims() const { return dims_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  int dim() const { return dims_.total(); }

 private:
  struct Unchecked {};
  BipartiteState(BipartitionDims dims, ComplexMatrix matrix, Unchecked)
      : dims_(dims), matrix_(std::move(matrix)) {}

  BipartitionDims dims_;
  ComplexMatrix matrix_;
};

inline ComplexMatrix partial_transpose(const BipartiteState& rho,
                                       Subsystem which = Subsystem::kB) {
  return partial_transpose(rho.matrix(), rho.dims(), which);
}

}  // namespace alphaneg

#endif  // ALPHANEG_BIPARTITE_STATE_HPP
