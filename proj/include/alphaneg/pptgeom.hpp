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

// Geometry of free sets {sigma >= 0, P(sigma) >= 0, Tr sigma = 1} for a
// Hilbert-Schmidt isometric involution P. The PPT set is the case P = T_B.

#ifndef ALPHANEG_PPTGEOM_HPP
#define ALPHANEG_PPTGEOM_HPP

#include <concepts>
#include <string>

#include "alphaneg/bipartite_state.hpp"
#include "alphaneg/linalg.hpp"

namespace alphaneg {

template <class M>
concept HermitianMap = requires(const M& map, const ComplexMatrix& x) {
  { map(x) } -> std::convertible_to<ComplexMatrix>;
};

struct PartialTransposeMap {
  BipartitionDims dims;
  ComplexMatrix operator()(const ComplexMatrix& x) const {
    return partial_transpose(x, dims, Subsystem::kB);
  }
};

struct DykstraConfig {
  int max_cycles = 10000;
  double residual_tol = 1e-10;

  void validate() const {
    if (!(residual_tol > 0.0) || max_cycles < 1) {
      throw Error(ErrorKind::kInvalidArgument, "DykstraConfig: bad parameters");
    }
  }
};

/// Correction terms of Dykstra's algorithm, one per constraint set. Keeping
/// them between calls warm-starts the dual iteration; zero terms give the
/// textbook cold start.
struct DykstraCorrections {
  ComplexMatrix trace;
  ComplexMatrix mapped_psd;
  ComplexMatrix psd;

  bool empty() const { return psd.size() == 0; }
  void reset(int d) {
    trace = ComplexMatrix::Zero(d, d);
    mapped_psd = ComplexMatrix::Zero(d, d);
    psd = ComplexMatrix::Zero(d, d);
  }
};

struct ProjectionResult {
  ComplexMatrix point;
  int cycles = 0;
  double displacement = 0.0;
  bool converged = false;
};

/// Frobenius-nearest point of {sigma >= 0, map(sigma) >= 0, Tr sigma = 1}.
/// Cycles over the trace hyperplane, the mapped PSD cone
/// (map o psd_project o map) and the PSD cone, in that order, so the returned
/// point is exactly PSD. Does not throw on non-convergence.
template <HermitianMap Map>
ProjectionResult dykstra_project(const ComplexMatrix& m, const Map& map,
                                 const DykstraConfig& cfg,
                                 DykstraCorrections& corr) {
  const int d = static_cast<int>(m.rows());
  if (corr.empty() || corr.psd.rows() != d) corr.reset(d);
  const ComplexMatrix target = hermitian_part(m);
  ComplexMatrix x = target - corr.trace - corr.mapped_psd - corr.psd;

  ProjectionResult out;
  for (int cycle = 1; cycle <= cfg.max_cycles; ++cycle) {
    const ComplexMatrix start = x;
    double moved = 0.0;

    ComplexMatrix y = x + corr.trace;
    x = y;
    x.diagonal().array() += (1.0 - y.trace().real()) / d;
    moved += (y - x - corr.trace).norm();
    corr.trace = y - x;

    y = x + corr.mapped_psd;
    x = map(psd_project_eig(eig_symmetrized(map(y))));
    moved += (y - x - corr.mapped_psd).norm();
    corr.mapped_psd = y - x;

    y = x + corr.psd;
    x = psd_project_eig(eig_symmetrized(y));
    moved += (y - x - corr.psd).norm();
    corr.psd = y - x;

    // A cycle can return x to its start while the corrections still move
    // (warm starts make this common), so both must settle.
    out.displacement = (x - start).norm() + moved;
    out.cycles = cycle;
    if (out.displacement < cfg.residual_tol) {
      out.converged = true;
      break;
    }
  }
  out.point = hermitian_part(x);
  return out;
}

template <HermitianMap Map>
ComplexMatrix project_free_set(const ComplexMatrix& m, const Map& map,
                               const DykstraConfig& cfg = {}) {
  cfg.validate();
  check_hermitian(m, kHermitianTol);
  DykstraCorrections corr;
  ProjectionResult r = dykstra_project(m, map, cfg, corr);
  if (!r.converged) {
    throw NotConverged<ComplexMatrix>(
        "Dykstra projection did not reach residual " +
            std::to_string(cfg.residual_tol),
        r.point, r.displacement);
  }
  return r.point;
}

inline BipartiteState project_ppt(const ComplexMatrix& m,
                                  const BipartitionDims& dims,
                                  const DykstraConfig& cfg = {}) {
  require_dims(m, dims, "project_ppt");
  return BipartiteState::unchecked(
      dims, project_free_set(m, PartialTransposeMap{dims}, cfg));
}

/// I / D, strictly inside both cones.
inline BipartiteState interior_point(const BipartitionDims& dims) {
  const int d = dims.total();
  return BipartiteState::unchecked(dims, identity(d) / static_cast<double>(d));
}

/// (1 - eps) sigma + eps I / D.
inline ComplexMatrix regularize(const ComplexMatrix& sigma, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "regularize needs eps in (0,1)");
  }
  const int d = static_cast<int>(sigma.rows());
  ComplexMatrix out = (1.0 - eps) * sigma;
  out.diagonal().array() += eps / d;
  return out;
}

inline BipartiteState regularize(const BipartiteState& sigma, double eps) {
  return BipartiteState::unchecked(sigma.dims(), regularize(sigma.matrix(), eps));
}

inline bool is_ppt_inv(const BipartiteState& sigma, double tol = 1e-8) {
  const double lo = eig_symmetrized(sigma.matrix()).eigenvalues.minCoeff();
  const double lo_pt =
      eig_symmetrized(partial_transpose(sigma)).eigenvalues.minCoeff();
  return lo > tol && lo_pt > tol;
}

}  // namespace alphaneg

#endif  // ALPHANEG_PPTGEOM_HPP
