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

// Resource measures for free sets {sigma >= 0, P(sigma) >= 0, Tr sigma = 1}
// induced by a positive map P other than the partial transpose.

#ifndef ALPHANEG_RESOURCE_HPP
#define ALPHANEG_RESOURCE_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "alphaneg/channels.hpp"
#include "alphaneg/errors.hpp"
#include "alphaneg/linalg.hpp"
#include "alphaneg/solver.hpp"
#include "alphaneg/states.hpp"

namespace alphaneg {

inline constexpr int kMapChecks = 20;
inline constexpr double kMapTol = 1e-9;
inline constexpr double kCommutationTol = 1e-8;
inline constexpr std::uint64_t kMapCheckSeed = 0x9e3779b97f4a7c15ULL;

struct MapFlags {
  bool hs_involution = false;
  bool trace_preserving = false;
  bool hermiticity_preserving = false;
  // User declaration that P(sigma) free implies sigma free; cannot be checked
  // for a black-box map.
  bool free_preimage = false;
};

/// A Hermiticity-preserving map on operators of a bipartite system together
/// with property flags. Every flag declared true is checked on random
/// Hermitian inputs at construction.
class PositiveMapSpec {
 public:
  using Fn = std::function<ComplexMatrix(const ComplexMatrix&)>;

  PositiveMapSpec(std::string name, Fn apply, BipartitionDims dims, MapFlags flags)
      : name_(std::move(name)), apply_(std::move(apply)), dims_(dims), flags_(flags) {
    verify();
  }

  static PositiveMapSpec partial_transpose(BipartitionDims dims) {
    return PositiveMapSpec(
        "partial_transpose",
        [dims](const ComplexMatrix& x) { return alphaneg::partial_transpose(x, dims); }, dims,
        {true, true, true, false});
  }

  static PositiveMapSpec transpose(BipartitionDims dims) {
    return PositiveMapSpec(
        "transpose", [](const ComplexMatrix& x) { return ComplexMatrix(x.transpose()); },
        dims, {true, true, true, false});
  }

  /// X -> Tr_B(X) (x) I - X. Positive, but neither an involution nor trace
  /// preserving.
  static PositiveMapSpec reduction(BipartitionDims dims) {
    return PositiveMapSpec(
        "reduction",
        [dims](const ComplexMatrix& x) {
          return ComplexMatrix(tensor(partial_trace(x, dims), identity(dims.dB)) - x);
        },
        dims, {false, false, true, false});
  }

  static PositiveMapSpec by_name(const std::string& name, BipartitionDims dims) {
    if (name == "partial_transpose") return partial_transpose(dims);
    if (name == "transpose") return transpose(dims);
    if (name == "reduction") return reduction(dims);
    throw Error(ErrorKind::kInvalidArgument, "unknown map '" + name + "'");
  }

  ComplexMatrix operator()(const ComplexMatrix& x) const {
    require_dims(x, dims_, "PositiveMapSpec");
    return apply_(x);
  }

  const std::string& name() const { return name_; }
  const BipartitionDims& dims() const { return dims_; }
  const MapFlags& flags() const { return flags_; }

 private:
  void verify() const {
    Rng rng(kMapCheckSeed);
    const int d = dims_.total();
    for (int i = 0; i < kMapChecks; ++i) {
      const ComplexMatrix x = random_hermitian(d, rng);
      const ComplexMatrix y = apply_(x);
      if (y.rows() != d || y.cols() != d) {
        throw Error(ErrorKind::kDimensionMismatch, name_ + ": output shape differs from input");
      }
      const double scale = std::max(1.0, x.norm());
      auto fail = [&](const char* what) {
        throw Error(ErrorKind::kInvalidArgument, name_ + ": declared " + what + " fails");
      };
      if (flags_.hermiticity_preserving && (y - y.adjoint()).norm() > kMapTol * scale) {
        fail("Hermiticity preservation");
      }
      if (flags_.trace_preserving && std::abs(y.trace() - x.trace()) > kMapTol * scale) {
        fail("trace preservation");
      }
      if (flags_.hs_involution && ((apply_(y) - x).norm() > kMapTol * scale ||
                                   std::abs(y.norm() - x.norm()) > kMapTol * scale)) {
        fail("Hilbert-Schmidt involution");
      }
    }
  }

  std::string name_;
  Fn apply_;
  BipartitionDims dims_;
  MapFlags flags_;
};

inline bool free_membership(const ComplexMatrix& sigma, const PositiveMapSpec& p,
                            double tol = kSupportTol) {
  require_dims(sigma, p.dims(), "free_membership");
  const ComplexMatrix s = hermitian_part(sigma);
  return std::abs(s.trace().real() - 1.0) <= tol &&
         eig_symmetrized(s).eigenvalues.minCoeff() >= -tol &&
         eig_symmetrized(hermitian_part(p(s))).eigenvalues.minCoeff() >= -tol;
}

inline bool free_membership(const BipartiteState& sigma, const PositiveMapSpec& p,
                            double tol = kSupportTol) {
  return free_membership(sigma.matrix(), p, tol);
}

namespace detail {

inline void require_solvable(const PositiveMapSpec& p) {
  const MapFlags& f = p.flags();
  if (!f.hermiticity_preserving || !f.trace_preserving) {
    throw Error(ErrorKind::kUnsupportedMap,
                p.name() + ": map must be Hermiticity and trace preserving");
  }
  if (!f.hs_involution) {
    throw Error(ErrorKind::kUnsupportedMap,
                p.name() + ": exact projection onto {P(sigma) >= 0} is only available when "
                           "P is a Hilbert-Schmidt isometric involution");
  }
}

}  // namespace detail

/// inf over free sigma of nu_alpha(P(rho) || sigma), in bits.
inline MeasureResult r_alpha(const BipartiteState& rho, const PositiveMapSpec& p, Alpha alpha,
                             const SolverConfig& cfg = {}) {
  if (!(rho.dims() == p.dims())) {
    throw Error(ErrorKind::kDimensionMismatch, "r_alpha: state and map dims differ");
  }
  detail::require_solvable(p);
  return mapped_measure(p(rho.matrix()), p, rho.dims(), alpha, cfg);
}

/// For a map declared with `free_preimage`, a zero value certifies that rho
/// is free. Returns nullopt when no declaration was made.
inline std::optional<bool> zero_implies_free(const BipartiteState& rho,
                                             const PositiveMapSpec& p,
                                             const MeasureResult& r, double tol) {
  if (!p.flags().free_preimage) return std::nullopt;
  if (r.value_bits > tol) return false;
  return eig_symmetrized(hermitian_part(p(rho.matrix()))).eigenvalues.minCoeff() >= -tol;
}

/// Largest residual of F o P - P o F over random Hermitian inputs, scaled by
/// the input norm.
template <class Element>
double commutation_residual(const Element& f, const PositiveMapSpec& p) {
  Rng rng(kMapCheckSeed);
  double worst = 0.0;
  for (int i = 0; i < kMapChecks; ++i) {
    const ComplexMatrix x = random_hermitian(p.dims().total(), rng);
    const double r = (f(p(x)) - p(f(x))).norm() / std::max(1.0, x.norm());
    worst = std::max(worst, r);
  }
  return worst;
}

inline MonotonicityCheck free_instrument_monotonicity_check(const Instrument& instr,
                                                            const BipartiteState& rho,
                                                            const PositiveMapSpec& p,
                                                            Alpha alpha,
                                                            const SolverConfig& cfg = {}) {
  detail::require_solvable(p);
  if (!(instr.in_dims() == p.dims()) || !(instr.out_dims() == p.dims())) {
    throw Error(ErrorKind::kDimensionMismatch, "instrument and map dims differ");
  }
  for (const KrausChannel& e : instr.elements()) {
    const double r = commutation_residual(e, p);
    if (r > kCommutationTol) {
      throw Error(ErrorKind::kCommutationFailed,
                  "instrument element does not commute with " + p.name() +
                      " (residual " + std::to_string(r) + ")");
    }
  }
  SolverConfig inner = cfg;
  inner.compute_bracket = false;
  return average_over_outcomes(
      instr, rho, [&](const BipartiteState& s) { return r_alpha(s, p, alpha, inner); });
}

/// sup over input states rho = G G^dagger / Tr[G G^dagger] of
/// R_alpha(N(rho)). The first search starts from a maximally entangled pure
/// input across the channel's input bipartition.
template <class Channel>
InputSearchResult r_alpha_channel(const Channel& n, const PositiveMapSpec& p, Alpha alpha,
                                  const SolverConfig& cfg = {}) {
  cfg.validate();
  detail::require_solvable(p);
  const BipartitionDims in = n.in_dims();
  const int d = in.total();
  if (d > 4) throw Error(ErrorKind::kInvalidArgument, "r_alpha_channel: input dimension above 4");
  if (!(n.out_dims() == p.dims())) {
    throw Error(ErrorKind::kDimensionMismatch, "channel output and map dims differ");
  }
  SolverConfig inner = cfg;
  inner.compute_bracket = false;
  const auto value = [&](const Eigen::VectorXd& x) -> std::pair<double, bool> {
    const ComplexMatrix g = detail::unit_amplitudes(x, d, d);
    if (g.size() == 0) return {0.0, true};
    const ComplexMatrix out = hermitian_part(n(ComplexMatrix(g * g.adjoint())));
    const MeasureResult r = r_alpha(BipartiteState::unchecked(p.dims(), out), p, alpha, inner);
    return {r.value_bits, r.converged};
  };
  const int k = std::min(in.dA, in.dB);
  ComplexMatrix g0 = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < k; ++i) g0(i * in.dB + i, 0) = 1.0 / std::sqrt(static_cast<double>(k));
  return detail::restart_search(value, detail::parameters_of(g0), cfg);
}

}  // namespace alphaneg

#endif  // ALPHANEG_RESOURCE_HPP
