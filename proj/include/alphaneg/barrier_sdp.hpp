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

// Log-det barrier path following for
//
//   minimize Tr[S]  s.t.  P(S) - X >= 0,  P(S) + X >= 0,  S >= 0
//
// over Hermitian S, where P is a Hermiticity preserving linear map and X is
// Hermitian. With P = T_B and X = T_B(rho) the optimum is 2^{E_kappa(rho)}.

#ifndef ALPHANEG_BARRIER_SDP_HPP
#define ALPHANEG_BARRIER_SDP_HPP

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "alphaneg/linalg.hpp"
#include "alphaneg/pptgeom.hpp"

namespace alphaneg {

struct BarrierParams {
  double initial_t = 1.0;
  double growth = 8.0;
  double newton_tol = 1e-9;     // stop once the duality gap bound 3D/t is below
  double centering_tol = 1e-6; // half the squared Newton decrement
  int max_newton = 100;         // per centering stage

  void validate() const {
    if (!(initial_t > 0.0) || !(growth > 1.0) || !(newton_tol > 0.0) ||
        !(centering_tol > 0.0) || max_newton < 1) {
      throw Error(ErrorKind::kInvalidArgument, "BarrierParams: bad parameters");
    }
  }
};

struct SdpSolution {
  double trace = 0.0;        // Tr[S] at the last centered point
  ComplexMatrix s;           // the optimizing S
  double gap_bound = kInf;   // 3D / t at the last centered point
  double min_block_eig = 0.0;
  int newton_steps = 0;
  bool converged = false;
};

namespace detail {

/// Column-major vectorization, vec(X)[k + l D] = X(k, l).
inline ComplexVector vec(const ComplexMatrix& m) {
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

inline ComplexMatrix unvec(const ComplexVector& v, int d) {
  return Eigen::Map<const ComplexMatrix>(v.data(), d, d);
}

/// Orthonormal basis of the real space of D x D Hermitian matrices, stored as
/// sparse columns over the column-major vectorization.
class HermitianBasis {
 public:
  struct Entry {
    int index;
    Complex coeff;
  };

  explicit HermitianBasis(int d) : d_(d) {
    const double r = 1.0 / std::sqrt(2.0);
    for (int k = 0; k < d; ++k) {
      columns_.push_back({{k + k * d, 1.0}});
      trace_.push_back(1.0);
    }
    for (int k = 0; k < d; ++k)
      for (int l = k + 1; l < d; ++l) {
        columns_.push_back({{k + l * d, r}, {l + k * d, r}});
        trace_.push_back(0.0);
        columns_.push_back({{k + l * d, Complex(0.0, r)}, {l + k * d, Complex(0.0, -r)}});
        trace_.push_back(0.0);
      }
  }

  int size() const { return static_cast<int>(columns_.size()); }
  int dim() const { return d_; }
  const std::vector<Entry>& column(int i) const { return columns_[i]; }
  double trace_of(int i) const { return trace_[i]; }

  ComplexMatrix assemble(const RealVector& coords) const {
    ComplexMatrix m = ComplexMatrix::Zero(d_, d_);
    for (int i = 0; i < size(); ++i)
      for (const Entry& e : columns_[i]) m.data()[e.index] += coords(i) * e.coeff;
    return m;
  }

  /// Re <E_i, v> for a vectorized operator v, for every basis element.
  RealVector coords_of_vec(const ComplexVector& v) const {
    RealVector out(size());
    for (int i = 0; i < size(); ++i) {
      Complex acc = 0.0;
      for (const Entry& e : columns_[i]) acc += std::conj(e.coeff) * v(e.index);
      out(i) = acc.real();
    }
    return out;
  }

  /// Re(E^H Q E) for a D^2 x D^2 matrix Q.
  Eigen::MatrixXd sandwich(const ComplexMatrix& q) const {
    const int n = size();
    Eigen::MatrixXd h(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Complex acc = 0.0;
        for (const Entry& a : columns_[i])
          for (const Entry& b : columns_[j])
            acc += std::conj(a.coeff) * q(a.index, b.index) * b.coeff;
        h(i, j) = h(j, i) = acc.real();
      }
    return h;
  }

 private:
  int d_;
  std::vector<std::vector<Entry>> columns_;
  std::vector<double> trace_;
};

/// Matrix of a linear map on the column-major vectorization, with a fast path
/// for maps that merely permute matrix entries (partial transposes).
class LinearMapMatrix {
 public:
  template <HermitianMap Map>
  LinearMapMatrix(const Map& map, int d) : d_(d), matrix_(d * d, d * d) {
    for (int l = 0; l < d; ++l)
      for (int k = 0; k < d; ++k) {
        ComplexMatrix unit = ComplexMatrix::Zero(d, d);
        unit(k, l) = 1.0;
        matrix_.col(k + l * d) = vec(map(unit));
      }
    std::vector<int> perm(d * d, -1);
    bool is_perm = true;
    for (int c = 0; c < d * d && is_perm; ++c) {
      int hits = 0;
      for (int r = 0; r < d * d; ++r) {
        const Complex v = matrix_(r, c);
        if (v == Complex(1.0, 0.0)) {
          perm[c] = r;
          ++hits;
        } else if (v != Complex(0.0, 0.0)) {
          is_perm = false;
        }
      }
      if (hits != 1) is_perm = false;
    }
    if (is_perm) perm_ = std::move(perm);
  }

  /// L^H Q L.
  ComplexMatrix congruence(const ComplexMatrix& q) const {
    if (perm_) {
      const int n = d_ * d_;
      ComplexMatrix out(n, n);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) out(i, j) = q((*perm_)[i], (*perm_)[j]);
      return out;
    }
    return matrix_.adjoint() * q * matrix_;
  }

  /// L^H v.
  ComplexVector adjoint_apply(const ComplexVector& v) const {
    if (perm_) {
      ComplexVector out(v.size());
      for (int i = 0; i < v.size(); ++i) out(i) = v((*perm_)[i]);
      return out;
    }
    return matrix_.adjoint() * v;
  }

 private:
  int d_;
  ComplexMatrix matrix_;
  std::optional<std::vector<int>> perm_;
};

/// (B^T (x) B) in column-major vec ordering: vec(B Z B) = K vec(Z).
inline ComplexMatrix sandwich_kron(const ComplexMatrix& b) {
  const int d = static_cast<int>(b.rows());
  ComplexMatrix k(d * d, d * d);
  for (int lp = 0; lp < d; ++lp)
    for (int kp = 0; kp < d; ++kp)
      for (int l = 0; l < d; ++l)
        for (int kk = 0; kk < d; ++kk) k(kk + l * d, kp + lp * d) = b(lp, l) * b(kk, kp);
  return k;
}

/// Inverse of a Hermitian positive definite matrix and its log-determinant.
/// Empty when the matrix is not numerically positive definite.
inline std::optional<std::pair<ComplexMatrix, double>> pd_inverse_logdet(
    const ComplexMatrix& a) {
  Eigen::LLT<ComplexMatrix> llt(hermitian_part(a));
  if (llt.info() != Eigen::Success) return std::nullopt;
  const ComplexVector diag = llt.matrixLLT().diagonal();
  double logdet = 0.0;
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    const double v = diag(i).real();
    if (!(v > 0.0)) return std::nullopt;
    logdet += 2.0 * std::log(v);
  }
  const int d = static_cast<int>(a.rows());
  ComplexMatrix inv = llt.solve(ComplexMatrix::Identity(d, d));
  return std::make_pair(hermitian_part(inv), logdet);
}

}  // namespace detail

template <HermitianMap Map>
SdpSolution kappa_sdp(const ComplexMatrix& x, const Map& map,
                      const BarrierParams& params = {}) {
  params.validate();
  require_square(x, "kappa_sdp");
  const int d = static_cast<int>(x.rows());
  const ComplexMatrix xh = hermitian_part(x);
  const detail::HermitianBasis basis(d);
  const detail::LinearMapMatrix lmap(map, d);
  const int n = basis.size();

  // Strictly feasible start S = c P(I); P(S) = c P(P(I)) is c I for an
  // involution.
  const ComplexMatrix p_id = hermitian_part(map(identity(d)));
  const HermitianEig p_id_eig = eig_symmetrized(p_id);
  if (p_id_eig.eigenvalues.minCoeff() <= 0.0) {
    throw Error(ErrorKind::kUnsupportedMap,
                "barrier start needs P(I) to be positive definite");
  }
  const double xnorm = eig_symmetrized(xh).max_abs();
  const double pp_min = eig_symmetrized(hermitian_part(map(p_id))).eigenvalues.minCoeff();
  if (pp_min <= 0.0) {
    throw Error(ErrorKind::kUnsupportedMap,
                "barrier start needs P(P(I)) to be positive definite");
  }
  const double scale = std::max(xnorm / pp_min, 1.0);
  RealVector s = basis.coords_of_vec(detail::vec(ComplexMatrix(2.0 * scale * p_id)));

  struct Blocks {
    ComplexMatrix upper, lower, plain;  // P(S) - X, P(S) + X, S
  };
  auto blocks_of = [&](const RealVector& coords) {
    const ComplexMatrix sm = basis.assemble(coords);
    const ComplexMatrix ps = hermitian_part(map(sm));
    return Blocks{ps - xh, ps + xh, sm};
  };
  auto trace_of = [&](const RealVector& coords) {
    double t = 0.0;
    for (int i = 0; i < n; ++i) t += basis.trace_of(i) * coords(i);
    return t;
  };
  // Sum of log-determinants of the three blocks; nullopt outside the domain.
  auto logdet_sum = [&](const RealVector& coords) -> std::optional<double> {
    const Blocks b = blocks_of(coords);
    double value = 0.0;
    for (const ComplexMatrix* m : {&b.upper, &b.lower, &b.plain}) {
      auto inv = detail::pd_inverse_logdet(*m);
      if (!inv) return std::nullopt;
      value += inv->second;
    }
    return value;
  };

  SdpSolution sol;
  const double barrier_weight = 3.0 * d;
  double t = params.initial_t;
  RealVector cvec(n);
  for (int i = 0; i < n; ++i) cvec(i) = basis.trace_of(i);

  bool stalled = false;
  while (true) {
    bool centered = false;
    for (int it = 0; it < params.max_newton; ++it) {
      const Blocks b = blocks_of(s);
      auto up = detail::pd_inverse_logdet(b.upper);
      auto lo = detail::pd_inverse_logdet(b.lower);
      auto pl = detail::pd_inverse_logdet(b.plain);
      if (!up || !lo || !pl) {
        stalled = true;
        break;
      }
      const ComplexVector v_up = detail::vec(up->first);
      const ComplexVector v_lo = detail::vec(lo->first);
      RealVector grad = t * cvec;
      grad -= basis.coords_of_vec(lmap.adjoint_apply(v_up + v_lo));
      grad -= basis.coords_of_vec(detail::vec(pl->first));

      const ComplexMatrix q =
          lmap.congruence(detail::sandwich_kron(up->first) +
                          detail::sandwich_kron(lo->first)) +
          detail::sandwich_kron(pl->first);
      const Eigen::MatrixXd hess = basis.sandwich(q);

      // Jacobi scaling keeps the factorization usable when the blocks
      // approach singularity late in the path.
      const RealVector dscale = hess.diagonal().cwiseMax(1e-300).cwiseSqrt().cwiseInverse();
      const Eigen::MatrixXd scaled = dscale.asDiagonal() * hess * dscale.asDiagonal();
      const RealVector sgrad = dscale.cwiseProduct(grad);
      RealVector step;
      Eigen::LLT<Eigen::MatrixXd> llt(scaled);
      if (llt.info() == Eigen::Success) {
        step = -dscale.cwiseProduct(llt.solve(sgrad));
      } else {
        step = -dscale.cwiseProduct(scaled.ldlt().solve(sgrad));
      }
      const double decrement_sq = -grad.dot(step);
      ++sol.newton_steps;
      if (!(decrement_sq >= 0.0) || !std::isfinite(decrement_sq)) {
        stalled = true;
        break;
      }
      if (decrement_sq / 2.0 <= params.centering_tol) {
        centered = true;
        break;
      }
      // Barrier differences are formed term by term: t Tr[S] is large late in
      // the path and would swamp the log-det change in absolute terms.
      const auto ld0 = logdet_sum(s);
      if (!ld0) {
        stalled = true;
        break;
      }
      const double trace_slope = cvec.dot(step);
      double tau = 1.0;
      bool moved = false;
      for (int ls = 0; ls < 60; ++ls) {
        const RealVector trial = s + tau * step;
        const auto ld1 = logdet_sum(trial);
        if (ld1) {
          const double change = t * tau * trace_slope - (*ld1 - *ld0);
          if (change <= -0.25 * tau * decrement_sq) {
            s = trial;
            moved = true;
            break;
          }
        }
        tau *= 0.5;
      }
      if (!moved) {
        // Newton cannot improve further at working precision; treat the
        // point as centered if the decrement is already small.
        centered = decrement_sq < 1e-6;
        if (!centered) stalled = true;
        break;
      }
    }
    if (stalled) break;
    if (!centered) break;
    sol.gap_bound = barrier_weight / t;
    sol.s = basis.assemble(s);
    sol.trace = trace_of(s);
    if (sol.gap_bound < params.newton_tol) {
      sol.converged = true;
      break;
    }
    t *= params.growth;
  }

  if (sol.s.size() == 0) {
    sol.s = basis.assemble(s);
    sol.trace = trace_of(s);
  }
  const Blocks fin = blocks_of(basis.coords_of_vec(detail::vec(sol.s)));
  sol.min_block_eig = std::min({eig_symmetrized(fin.upper).eigenvalues.minCoeff(),
                                eig_symmetrized(fin.lower).eigenvalues.minCoeff(),
                                eig_symmetrized(fin.plain).eigenvalues.minCoeff()});
  return sol;
}

}  // namespace alphaneg

#endif  // ALPHANEG_BARRIER_SDP_HPP
