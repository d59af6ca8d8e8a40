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

// Measure computations. For 1 < alpha < inf the infimum over the free set of
// nu_alpha(P(rho) || sigma) is found by projected gradient descent on the
// (log of the) convex function sigma -> mu_alpha^alpha; alpha = inf goes
// through the barrier SDP and alpha = 1 is closed form.

#ifndef ALPHANEG_SOLVER_HPP
#define ALPHANEG_SOLVER_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "alphaneg/barrier_sdp.hpp"
#include "alphaneg/bipartite_state.hpp"
#include "alphaneg/divergence.hpp"
#include "alphaneg/linalg.hpp"
#include "alphaneg/pptgeom.hpp"

namespace alphaneg {

struct ArmijoParams {
  double initial_step = 1.0;
  double shrink = 0.5;
  double sufficient_decrease = 1e-4;
};

struct EpsSchedule {
  double initial = 1e-3;
  double decay = 0.5;
  double floor = 1e-10;

  double at(int k) const {
    return std::max(floor, initial * std::pow(decay, static_cast<double>(k)));
  }
};

struct SolverConfig {
  double value_tol = 1e-4;  // bits
  double grad_tol = 1e-12;  // Frobenius size of the projected step
  int max_iter = 5000;
  double rel_change_tol = 1e-9;
  int stall_window = 25;
  ArmijoParams armijo;
  EpsSchedule eps;
  std::uint64_t seed = 0;
  BarrierParams barrier;
  DykstraConfig dykstra;
  bool compute_bracket = true;
  int restarts = 20;          // channel-level searches
  int max_simplex_evals = 600;

  void validate() const {
    const bool ok = value_tol > 0.0 && grad_tol > 0.0 && max_iter > 0 &&
                    rel_change_tol > 0.0 && stall_window > 0 &&
                    armijo.initial_step > 0.0 && armijo.shrink > 0.0 &&
                    armijo.shrink < 1.0 && armijo.sufficient_decrease > 0.0 &&
                    armijo.sufficient_decrease < 1.0 && eps.initial > 0.0 &&
                    eps.initial < 1.0 && eps.decay > 0.0 && eps.decay < 1.0 &&
                    eps.floor > 0.0 && restarts >= 1 && max_simplex_evals > 0;
    if (!ok) throw Error(ErrorKind::kInvalidArgument, "SolverConfig: bad parameters");
    barrier.validate();
    dykstra.validate();
  }
};

struct Bracket {
  double e_n_lower = 0.0;
  double e_kappa_upper = kInf;
};

struct MeasureResult {
  double value_bits = 0.0;
  Alpha alpha{1.0};
  BipartiteState certificate = BipartiteState::unchecked({1, 1}, identity(1));
  int iterations = 0;
  bool converged = false;
  Bracket bracket;
  std::string diagnostic;
};

// ---------------------------------------------------------------------------
// Objective

/// nu_alpha(X || sigma) in bits and its Hermitian gradient with respect to
/// sigma, for positive definite sigma and 1 < alpha < inf.
struct LogObjective {
  double nu_bits;
  ComplexMatrix gradient;
};

namespace detail {

inline std::optional<HermitianEig> pd_eig(const ComplexMatrix& sigma) {
  HermitianEig e = eig_symmetrized(sigma);
  if (!(e.eigenvalues.minCoeff() > 0.0)) return std::nullopt;
  return e;
}

inline ComplexMatrix pow_from_pd_eig(const HermitianEig& e, double p) {
  RealVector v = e.eigenvalues.array().pow(p);
  return e.eigenvectors * v.cast<Complex>().asDiagonal() * e.eigenvectors.adjoint();
}

/// Sandwiched operator M = sigma^p X sigma^p and its spectrum.
struct Sandwich {
  HermitianEig sigma_eig;
  ComplexMatrix sigma_pow;
  HermitianEig m_eig;
  double smax = 0.0;
  double log_sum = 0.0;  // log2 sum (|m_i| / smax)^alpha
};

inline std::optional<Sandwich> sandwich(const ComplexMatrix& x,
                                        const ComplexMatrix& sigma, double alpha) {
  auto se = pd_eig(sigma);
  if (!se) return std::nullopt;
  Sandwich out;
  out.sigma_eig = std::move(*se);
  out.sigma_pow = pow_from_pd_eig(out.sigma_eig, (1.0 - alpha) / (2.0 * alpha));
  out.m_eig = eig_symmetrized(out.sigma_pow * x * out.sigma_pow);
  out.smax = out.m_eig.max_abs();
  if (!(out.smax > 0.0) || !std::isfinite(out.smax)) return std::nullopt;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < out.m_eig.eigenvalues.size(); ++i) {
    acc += std::pow(std::abs(out.m_eig.eigenvalues(i)) / out.smax, alpha);
  }
  out.log_sum = std::log2(acc);
  return out;
}

inline double nu_of(const Sandwich& s, double alpha) {
  return std::log2(s.smax) + s.log_sum / alpha;
}

inline ComplexMatrix log_gradient(const ComplexMatrix& x, const Sandwich& s,
                                  double alpha) {
  // d ln f / dM = alpha sgn(M) |M|^{alpha-1} / Tr|M|^alpha, scaled by smax.
  const RealVector& m = s.m_eig.eigenvalues;
  const double sum = std::exp2(s.log_sum);
  RealVector w(m.size());
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const double r = std::abs(m(i)) / s.smax;
    const double sg = m(i) > 0.0 ? 1.0 : (m(i) < 0.0 ? -1.0 : 0.0);
    w(i) = alpha / s.smax * sg * std::pow(r, alpha - 1.0) / sum;
  }
  const ComplexMatrix wm =
      s.m_eig.eigenvectors * w.cast<Complex>().asDiagonal() * s.m_eig.eigenvectors.adjoint();
  const ComplexMatrix a = x * s.sigma_pow * wm + wm * s.sigma_pow * x;
  const double p = (1.0 - alpha) / (2.0 * alpha);
  return power_gradient(s.sigma_eig, p, a) / (alpha * std::log(2.0));
}

}  // namespace detail

inline std::optional<LogObjective> log_objective(const ComplexMatrix& x,
                                                 const ComplexMatrix& sigma,
                                                 double alpha) {
  auto s = detail::sandwich(x, sigma, alpha);
  if (!s) return std::nullopt;
  return LogObjective{detail::nu_of(*s, alpha), detail::log_gradient(x, *s, alpha)};
}

/// f(sigma) = [mu_alpha(X || sigma)]^alpha and its gradient, for positive
/// definite sigma and 1 < alpha < inf. Here X is the mapped state, e.g.
/// T_B(rho).
inline std::pair<double, ComplexMatrix> objective_and_gradient(
    const ComplexMatrix& x, const ComplexMatrix& sigma, double alpha) {
  if (!(alpha > 1.0) || std::isinf(alpha)) {
    throw Error(ErrorKind::kAlphaOutOfRange, "objective needs 1 < alpha < inf");
  }
  if (x.norm() == 0.0) throw Error(ErrorKind::kZeroOperator, "X is zero");
  check_hermitian(x, kHermitianTol);
  if (!detail::pd_eig(hermitian_part(sigma))) {
    throw Error(ErrorKind::kNotPositiveDefinite, "sigma must be positive definite");
  }
  auto obj = log_objective(hermitian_part(x), hermitian_part(sigma), alpha);
  if (!obj) throw Error(ErrorKind::kNotPositiveDefinite, "objective undefined");
  const double f = std::exp2(alpha * obj->nu_bits);
  // grad f = f * alpha * ln 2 * grad nu.
  return {f, f * alpha * std::log(2.0) * obj->gradient};
}

// ---------------------------------------------------------------------------
// Generic minimization over {sigma >= 0, P(sigma) >= 0, Tr sigma = 1}

struct MinimizeOutcome {
  double value_bits = 0.0;
  ComplexMatrix sigma;
  int iterations = 0;
  bool converged = false;
  int unconverged_projections = 0;
};

template <HermitianMap Map>
MinimizeOutcome minimize_nu(const ComplexMatrix& x, const Map& map, double alpha,
                            const SolverConfig& cfg) {
  const int d = static_cast<int>(x.rows());
  MinimizeOutcome out;
  ComplexMatrix sigma = identity(d) / static_cast<double>(d);
  auto obj = log_objective(x, sigma, alpha);
  if (!obj) throw Error(ErrorKind::kNotPositiveDefinite, "objective undefined at I/D");

  out.value_bits = obj->nu_bits;
  out.sigma = sigma;

  DykstraCorrections corr;
  const double gnorm0 = obj->gradient.norm();
  double step = gnorm0 > 0.0 ? cfg.armijo.initial_step / gnorm0 : cfg.armijo.initial_step;
  int quiet = 0;

  for (int k = 0; k < cfg.max_iter; ++k) {
    out.iterations = k + 1;
    const ComplexMatrix trial_point = sigma - step * obj->gradient;
    ProjectionResult proj = dykstra_project(trial_point, map, cfg.dykstra, corr);
    if (!proj.converged || !(proj.point.trace().real() > 0.0)) {
      ++out.unconverged_projections;
      corr.reset(d);
      if (!(proj.point.trace().real() > 0.0)) {
        proj = dykstra_project(trial_point, map, cfg.dykstra, corr);
      }
    }
    ComplexMatrix target = proj.point / proj.point.trace().real();
    target = regularize(target, cfg.eps.at(k));
    const ComplexMatrix dir = target - sigma;
    const double slope = hs_inner(obj->gradient, dir);
    if (dir.norm() < cfg.grad_tol || slope >= 0.0) {
      out.converged = true;
      break;
    }

    double t = 1.0;
    std::optional<LogObjective> next;
    ComplexMatrix next_sigma;
    for (int ls = 0; ls < 60; ++ls) {
      next_sigma = sigma + t * dir;
      next = log_objective(x, next_sigma, alpha);
      if (next && next->nu_bits <= obj->nu_bits + cfg.armijo.sufficient_decrease * t * slope) {
        break;
      }
      next.reset();
      t *= cfg.armijo.shrink;
    }
    if (!next) {
      // No decrease along a descent direction at working precision.
      out.converged = true;
      break;
    }

    const ComplexMatrix ds = next_sigma - sigma;
    const ComplexMatrix dg = next->gradient - obj->gradient;
    const double curvature = hs_inner(ds, dg);
    const double ss = hs_inner(ds, ds);
    if (curvature > 0.0 && ss > 0.0) {
      step = std::clamp(ss / curvature, 1e-12, 1e12);
    } else {
      step = std::min(step * 2.0, 1e12);
    }

    const double change = std::abs(std::expm1(alpha * std::log(2.0) *
                                               (next->nu_bits - obj->nu_bits)));
    sigma = std::move(next_sigma);
    obj = std::move(next);
    if (obj->nu_bits < out.value_bits) {
      out.value_bits = obj->nu_bits;
      out.sigma = sigma;
    }
    quiet = change < cfg.rel_change_tol ? quiet + 1 : 0;
    if (quiet >= cfg.stall_window) {
      out.converged = true;
      break;
    }
  }
  return out;
}

/// Shared driver behind e_alpha and the generic resourcefulness: `mapped` is
/// P(rho) and the free set is {sigma >= 0, P(sigma) >= 0, Tr sigma = 1}.
template <HermitianMap Map>
MeasureResult mapped_measure(const ComplexMatrix& mapped, const Map& map,
                             BipartitionDims dims, Alpha alpha,
                             const SolverConfig& cfg);

template <HermitianMap Map>
MeasureResult mapped_kappa(const ComplexMatrix& mapped, const Map& map,
                           BipartitionDims dims, const SolverConfig& cfg) {
  cfg.validate();
  MeasureResult res;
  res.alpha = Alpha::infinity();
  const ComplexMatrix x = hermitian_part(mapped);
  const double lower = std::max(0.0, std::log2(schatten_norm(x, 1.0)));

  if (eig_symmetrized(x).eigenvalues.minCoeff() >= -kSupportTol) {
    // P(rho) >= 0: S = P(P(rho)) = rho is feasible with Tr S = 1.
    res.value_bits = 0.0;
    res.certificate = BipartiteState::unchecked(dims, hermitian_part(map(x)));
    res.converged = true;
    res.bracket = {lower, 0.0};
    return res;
  }
  const SdpSolution sol = kappa_sdp(x, map, cfg.barrier);
  res.value_bits = std::log2(sol.trace);
  res.certificate = BipartiteState::unchecked(dims, sol.s / sol.trace);
  res.iterations = sol.newton_steps;
  res.converged = sol.converged && sol.min_block_eig >= -1e-8;
  res.bracket = {lower, res.value_bits};
  std::ostringstream diag;
  diag << "barrier gap bound " << sol.gap_bound << ", min block eigenvalue "
       << sol.min_block_eig;
  res.diagnostic = diag.str();
  return res;
}

namespace detail {

inline void audit_bracket(MeasureResult& res, double tol) {
  const Bracket& b = res.bracket;
  if (res.value_bits < b.e_n_lower - tol || res.value_bits > b.e_kappa_upper + tol) {
    res.converged = false;
    std::ostringstream msg;
    msg << "value " << res.value_bits << " outside bracket [" << b.e_n_lower << ", "
        << b.e_kappa_upper << "]";
    res.diagnostic += res.diagnostic.empty() ? msg.str() : "; " + msg.str();
  }
}

}  // namespace detail

template <HermitianMap Map>
MeasureResult mapped_measure(const ComplexMatrix& mapped, const Map& map,
                             BipartitionDims dims, Alpha alpha,
                             const SolverConfig& cfg) {
  cfg.validate();
  require_dims(mapped, dims, "mapped_measure");
  const ComplexMatrix x = hermitian_part(mapped);
  const int d = dims.total();
  const double lower = std::max(0.0, std::log2(schatten_norm(x, 1.0)));

  if (alpha.is_infinite()) return mapped_kappa(x, map, dims, cfg);

  MeasureResult res;
  res.alpha = alpha;
  if (alpha.is_one()) {
    res.value_bits = lower;
    res.certificate = BipartiteState::unchecked(dims, identity(d) / static_cast<double>(d));
    res.converged = true;
    res.bracket = {lower, kInf};
    if (cfg.compute_bracket) {
      res.bracket.e_kappa_upper = mapped_kappa(x, map, dims, cfg).value_bits;
      detail::audit_bracket(res, cfg.value_tol);
    }
    return res;
  }

  if (eig_symmetrized(x).eigenvalues.minCoeff() >= -kSupportTol) {
    // Free input: sigma = P(rho) attains nu = 0.
    res.value_bits = 0.0;
    res.certificate = BipartiteState::unchecked(dims, regularize(x / x.trace().real(), cfg.eps.floor));
    res.converged = true;
    res.bracket = {lower, 0.0};
    return res;
  }

  const MinimizeOutcome m = minimize_nu(x, map, alpha.value(), cfg);
  res.value_bits = m.value_bits;
  res.certificate = BipartiteState::unchecked(dims, m.sigma);
  res.iterations = m.iterations;
  res.converged = m.converged;
  if (m.unconverged_projections > 0) {
    res.diagnostic = std::to_string(m.unconverged_projections) +
                     " projections stopped at the cycle limit";
  }
  res.bracket = {lower, kInf};
  if (cfg.compute_bracket) {
    res.bracket.e_kappa_upper = mapped_kappa(x, map, dims, cfg).value_bits;
    detail::audit_bracket(res, cfg.value_tol);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Entanglement measures

inline constexpr double kLocalRankTol = 1e-12;

namespace detail {

/// Restriction of a state to the supports of its two marginals. Both
/// measures are unchanged by it (the compression and the embedding are local
/// channels), and the optimizer otherwise sits on a degenerate face of the
/// PPT set where projected gradient crawls.
struct LocalSupport {
  ComplexMatrix va;  // dA x rA isometry onto supp(rho_A)
  ComplexMatrix vb;  // dB x rB isometry onto supp(rho_B)
  BipartitionDims full;

  BipartitionDims reduced() const {
    return {static_cast<int>(va.cols()), static_cast<int>(vb.cols())};
  }
  BipartiteState compress(const BipartiteState& rho) const {
    const ComplexMatrix w = tensor(va, vb);
    ComplexMatrix m = hermitian_part(w.adjoint() * rho.matrix() * w);
    m /= m.trace().real();
    return BipartiteState::unchecked(reduced(), m);
  }
  /// sigma' optimal for the compressed state becomes optimal for rho after
  /// conjugation with V_A (x) conj(V_B), the isometry carrying T_B(rho') to
  /// T_B(rho).
  void lift(MeasureResult& r) const {
    const ComplexMatrix u = tensor(va, ComplexMatrix(vb.conjugate()));
    r.certificate = BipartiteState::unchecked(
        full, hermitian_part(u * r.certificate.matrix() * u.adjoint()));
  }
};

inline ComplexMatrix support_isometry(const ComplexMatrix& marginal) {
  const HermitianEig e = eig_symmetrized(marginal);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < e.eigenvalues.size(); ++i) {
    if (e.eigenvalues(i) > kLocalRankTol) keep.push_back(i);
  }
  ComplexMatrix v(marginal.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) v.col(k) = e.eigenvectors.col(keep[k]);
  return v;
}

inline std::optional<LocalSupport> local_support(const BipartiteState& rho) {
  const BipartitionDims dims = rho.dims();
  LocalSupport ls{support_isometry(partial_trace(rho.matrix(), dims, Subsystem::kB)),
                  support_isometry(partial_trace(rho.matrix(), dims, Subsystem::kA)), dims};
  if (ls.va.cols() == 0 || ls.vb.cols() == 0) return std::nullopt;
  if (ls.va.cols() == dims.dA && ls.vb.cols() == dims.dB) return std::nullopt;
  return ls;
}

}  // namespace detail

inline MeasureResult e_kappa(const BipartiteState& rho, const SolverConfig& cfg = {}) {
  if (const auto ls = detail::local_support(rho)) {
    MeasureResult r = e_kappa(ls->compress(rho), cfg);
    ls->lift(r);
    return r;
  }
  return mapped_kappa(partial_transpose(rho), PartialTransposeMap{rho.dims()},
                      rho.dims(), cfg);
}

inline MeasureResult e_alpha(const BipartiteState& rho, Alpha alpha,
                             const SolverConfig& cfg = {}) {
  if (const auto ls = detail::local_support(rho)) {
    MeasureResult r = e_alpha(ls->compress(rho), alpha, cfg);
    ls->lift(r);
    return r;
  }
  return mapped_measure(partial_transpose(rho), PartialTransposeMap{rho.dims()},
                        rho.dims(), alpha, cfg);
}

/// (E_N, E_kappa) for rho; flags `result` unconverged when its value falls
/// outside the bracket by more than value_tol.
inline Bracket bracket(const BipartiteState& rho, MeasureResult& result,
                       const SolverConfig& cfg = {}) {
  SolverConfig inner = cfg;
  inner.compute_bracket = false;
  result.bracket = {log_negativity(rho), e_kappa(rho, inner).value_bits};
  detail::audit_bracket(result, cfg.value_tol);
  return result.bracket;
}

struct SweepResult {
  std::vector<MeasureResult> points;
  std::vector<std::size_t> monotonicity_violations;  // index i: value(i) > value(i+1) + 2 tol
};

inline SweepResult alpha_sweep(const BipartiteState& rho, const std::vector<double>& alphas,
                               const SolverConfig& cfg = {}) {
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    Alpha{alphas[i]};
    if (i > 0 && alphas[i] < alphas[i - 1]) {
      throw Error(ErrorKind::kInvalidArgument, "alpha_sweep: alphas must be ascending");
    }
  }
  SolverConfig inner = cfg;
  inner.compute_bracket = false;
  const Bracket shared{log_negativity(rho), e_kappa(rho, inner).value_bits};

  SweepResult out;
  for (double a : alphas) {
    MeasureResult r = e_alpha(rho, Alpha(a), inner);
    r.bracket = shared;
    if (cfg.compute_bracket) detail::audit_bracket(r, cfg.value_tol);
    out.points.push_back(std::move(r));
  }
  for (std::size_t i = 0; i + 1 < out.points.size(); ++i) {
    if (out.points[i].value_bits > out.points[i + 1].value_bits + 2.0 * cfg.value_tol) {
      out.monotonicity_violations.push_back(i);
    }
  }
  return out;
}

}  // namespace alphaneg

#endif  // ALPHANEG_SOLVER_HPP
