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

// Channels between bipartite systems, C-PPT-P checks for instruments, the
// channel-level measure and the closed-form channel families.
//
// Superoperators act on row-major vectorizations, vec(X)[i*d + j] = X(i,j),
// so X -> K X K^dagger has matrix K (x) conj(K). Choi matrices are
// unnormalized with the input factor first: C = sum_ij |i><j| (x) N(|i><j|).

#ifndef ALPHANEG_CHANNELS_HPP
#define ALPHANEG_CHANNELS_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "alphaneg/bipartite_state.hpp"
#include "alphaneg/errors.hpp"
#include "alphaneg/linalg.hpp"
#include "alphaneg/nelder_mead.hpp"
#include "alphaneg/solver.hpp"
#include "alphaneg/states.hpp"

namespace alphaneg {

inline constexpr double kChannelTol = 1e-9;

class SuperOperator {
 public:
  /// Validates the shape and that the map is Hermiticity preserving.
  SuperOperator(ComplexMatrix matrix, BipartitionDims in, BipartitionDims out)
      : matrix_(std::move(matrix)), in_(in), out_(out) {
    const long din = in_.total(), dout = out_.total();
    if (matrix_.rows() != dout * dout || matrix_.cols() != din * din) {
      throw Error(ErrorKind::kDimensionMismatch, "SuperOperator: shape does not match dims");
    }
    if (!all_finite(matrix_)) {
      throw Error(ErrorKind::kInvalidArgument, "SuperOperator: non-finite entries");
    }
    const ComplexMatrix c = choi();
    const double scale = std::max(1.0, c.cwiseAbs().maxCoeff());
    if ((c - c.adjoint()).cwiseAbs().maxCoeff() > kChannelTol * scale) {
      throw Error(ErrorKind::kNonHermitian,
                  "SuperOperator: map is not Hermiticity preserving");
    }
  }

  template <class F>
  static SuperOperator from_map(const F& f, BipartitionDims in, BipartitionDims out) {
    const int din = in.total(), dout = out.total();
    ComplexMatrix m(dout * dout, din * din);
    for (int i = 0; i < din; ++i)
      for (int j = 0; j < din; ++j) {
        ComplexMatrix e = ComplexMatrix::Zero(din, din);
        e(i, j) = 1.0;
        const ComplexMatrix y = f(e);
        if (y.rows() != dout || y.cols() != dout) {
          throw Error(ErrorKind::kDimensionMismatch, "SuperOperator::from_map: output shape");
        }
        for (int k = 0; k < dout; ++k)
          for (int l = 0; l < dout; ++l) m(k * dout + l, i * din + j) = y(k, l);
      }
    return SuperOperator(std::move(m), in, out);
  }

  static SuperOperator from_kraus(const std::vector<ComplexMatrix>& ops, BipartitionDims in,
                                  BipartitionDims out) {
    const int din = in.total(), dout = out.total();
    ComplexMatrix m = ComplexMatrix::Zero(dout * dout, din * din);
    for (const ComplexMatrix& k : ops) {
      if (k.rows() != dout || k.cols() != din) {
        throw Error(ErrorKind::kDimensionMismatch, "Kraus operator shape does not match dims");
      }
      m += tensor(k, ComplexMatrix(k.conjugate()));
    }
    return SuperOperator(std::move(m), in, out);
  }

  static SuperOperator from_choi(const ComplexMatrix& c, BipartitionDims in,
                                 BipartitionDims out) {
    const int din = in.total(), dout = out.total();
    if (c.rows() != din * dout || c.cols() != din * dout) {
      throw Error(ErrorKind::kDimensionMismatch, "from_choi: shape does not match dims");
    }
    ComplexMatrix m(dout * dout, din * din);
    for (int i = 0; i < din; ++i)
      for (int j = 0; j < din; ++j)
        for (int k = 0; k < dout; ++k)
          for (int l = 0; l < dout; ++l)
            m(k * dout + l, i * din + j) = c(i * dout + k, j * dout + l);
    return SuperOperator(std::move(m), in, out);
  }

  ComplexMatrix operator()(const ComplexMatrix& x) const {
    const int din = in_.total(), dout = out_.total();
    if (x.rows() != din || x.cols() != din) {
      throw Error(ErrorKind::kDimensionMismatch, "SuperOperator: input shape");
    }
    const ComplexMatrix xt = x.transpose();  // column-major storage of xt is vec(x)
    const ComplexVector v = matrix_ * Eigen::Map<const ComplexVector>(xt.data(), din * din);
    ComplexMatrix y(dout, dout);
    for (int k = 0; k < dout; ++k)
      for (int l = 0; l < dout; ++l) y(k, l) = v(k * dout + l);
    return y;
  }

  ComplexMatrix choi() const {
    const int din = in_.total(), dout = out_.total();
    ComplexMatrix c(din * dout, din * dout);
    for (int i = 0; i < din; ++i)
      for (int j = 0; j < din; ++j)
        for (int k = 0; k < dout; ++k)
          for (int l = 0; l < dout; ++l)
            c(i * dout + k, j * dout + l) = matrix_(k * dout + l, i * din + j);
    return c;
  }

  /// next after this.
  SuperOperator then(const SuperOperator& next) const {
    if (!(next.in_ == out_)) {
      throw Error(ErrorKind::kDimensionMismatch, "SuperOperator::then: dims do not chain");
    }
    return SuperOperator(next.matrix_ * matrix_, in_, next.out_);
  }

  const ComplexMatrix& matrix() const { return matrix_; }
  const BipartitionDims& in_dims() const { return in_; }
  const BipartitionDims& out_dims() const { return out_; }

 private:
  ComplexMatrix matrix_;
  BipartitionDims in_, out_;
};

class KrausChannel {
 public:
  /// A trace-preserving channel: sum K^dagger K = I within tol.
  KrausChannel(std::vector<ComplexMatrix> ops, BipartitionDims in, BipartitionDims out,
               double tol = kChannelTol)
      : KrausChannel(std::move(ops), in, out, ShapeOnly{}) {
    const ComplexMatrix gap = completeness() - identity(in_.total());
    if (gap.cwiseAbs().maxCoeff() > tol) {
      throw Error(ErrorKind::kInvalidArgument, "KrausChannel: not trace preserving");
    }
  }

  /// An instrument element: sum K^dagger K <= I within tol.
  static KrausChannel sub_channel(std::vector<ComplexMatrix> ops, BipartitionDims in,
                                  BipartitionDims out, double tol = kChannelTol) {
    KrausChannel k(std::move(ops), in, out, ShapeOnly{});
    const ComplexMatrix slack = identity(in.total()) - k.completeness();
    if (eig_symmetrized(hermitian_part(slack)).eigenvalues.minCoeff() < -tol) {
      throw Error(ErrorKind::kInvalidArgument, "KrausChannel: sum K^dagger K exceeds I");
    }
    return k;
  }

  ComplexMatrix operator()(const ComplexMatrix& x) const {
    if (x.rows() != in_.total() || x.cols() != in_.total()) {
      throw Error(ErrorKind::kDimensionMismatch, "KrausChannel: input shape");
    }
    ComplexMatrix y = ComplexMatrix::Zero(out_.total(), out_.total());
    for (const ComplexMatrix& k : ops_) y += k * x * k.adjoint();
    return y;
  }

  ComplexMatrix completeness() const {
    ComplexMatrix s = ComplexMatrix::Zero(in_.total(), in_.total());
    for (const ComplexMatrix& k : ops_) s += k.adjoint() * k;
    return s;
  }

  SuperOperator superop() const { return SuperOperator::from_kraus(ops_, in_, out_); }

  const std::vector<ComplexMatrix>& ops() const { return ops_; }
  const BipartitionDims& in_dims() const { return in_; }
  const BipartitionDims& out_dims() const { return out_; }

 private:
  struct ShapeOnly {};
  KrausChannel(std::vector<ComplexMatrix>&& ops, BipartitionDims in, BipartitionDims out,
               ShapeOnly)
      : ops_(std::move(ops)), in_(in), out_(out) {
    if (ops_.empty()) throw Error(ErrorKind::kInvalidArgument, "KrausChannel: no operators");
    for (const ComplexMatrix& k : ops_) {
      if (k.rows() != out_.total() || k.cols() != in_.total()) {
        throw Error(ErrorKind::kDimensionMismatch, "Kraus operator shape does not match dims");
      }
      if (!all_finite(k)) throw Error(ErrorKind::kInvalidArgument, "non-finite Kraus entry");
    }
  }

  std::vector<ComplexMatrix> ops_;
  BipartitionDims in_, out_;
};

inline ComplexMatrix choi_of(const SuperOperator& n) { return n.choi(); }
inline ComplexMatrix choi_of(const KrausChannel& n) { return n.superop().choi(); }

/// Elements are CP by construction (Kraus form) and must sum to a channel.
class Instrument {
 public:
  explicit Instrument(std::vector<KrausChannel> elements, double tol = kChannelTol)
      : elements_(std::move(elements)) {
    if (elements_.empty()) throw Error(ErrorKind::kInvalidArgument, "Instrument: no elements");
    const BipartitionDims in = elements_.front().in_dims();
    const BipartitionDims out = elements_.front().out_dims();
    ComplexMatrix total = ComplexMatrix::Zero(in.total(), in.total());
    for (const KrausChannel& e : elements_) {
      if (!(e.in_dims() == in) || !(e.out_dims() == out)) {
        throw Error(ErrorKind::kDimensionMismatch, "Instrument: element dims differ");
      }
      total += e.completeness();
    }
    if ((total - identity(in.total())).cwiseAbs().maxCoeff() > tol) {
      throw Error(ErrorKind::kInvalidArgument, "Instrument: elements do not sum to a channel");
    }
  }

  const std::vector<KrausChannel>& elements() const { return elements_; }
  const BipartitionDims& in_dims() const { return elements_.front().in_dims(); }
  const BipartitionDims& out_dims() const { return elements_.front().out_dims(); }

 private:
  std::vector<KrausChannel> elements_;
};

// ---------------------------------------------------------------------------
// C-PPT-P checks

struct CpptpReport {
  double min_choi_eig = 0.0;
  double min_pt_choi_eig = 0.0;  // Choi of T_B' o N o T_B
  double tp_residual = 0.0;      // max entry of Tr_out C - I

  bool completely_positive(double tol) const { return min_choi_eig >= -tol; }
  bool pt_completely_positive(double tol) const { return min_pt_choi_eig >= -tol; }
  bool trace_preserving(double tol) const { return tp_residual <= tol; }
  bool ok(double tol) const {
    return completely_positive(tol) && pt_completely_positive(tol) && trace_preserving(tol);
  }
};

inline SuperOperator pt_conjugate(const SuperOperator& n) {
  const BipartitionDims in = n.in_dims(), out = n.out_dims();
  return SuperOperator::from_map(
      [&](const ComplexMatrix& x) {
        return partial_transpose(n(partial_transpose(x, in)), out);
      },
      in, out);
}

inline CpptpReport cpptp_report(const SuperOperator& n) {
  const ComplexMatrix c = n.choi();
  const BipartitionDims cd(n.in_dims().total(), n.out_dims().total());
  CpptpReport r;
  r.min_choi_eig = eig_symmetrized(hermitian_part(c)).eigenvalues.minCoeff();
  r.min_pt_choi_eig =
      eig_symmetrized(hermitian_part(pt_conjugate(n).choi())).eigenvalues.minCoeff();
  r.tp_residual =
      (partial_trace(c, cd, Subsystem::kB) - identity(cd.dA)).cwiseAbs().maxCoeff();
  return r;
}

inline bool is_cpptp(const SuperOperator& n, double tol = kChannelTol) {
  return cpptp_report(n).ok(tol);
}
inline bool is_cpptp(const KrausChannel& n, double tol = kChannelTol) {
  return is_cpptp(n.superop(), tol);
}

/// Each element CP with CP partial-transpose conjugate; the sum is a channel
/// by construction of Instrument.
inline bool is_cpptp(const Instrument& instr, double tol = kChannelTol) {
  for (const KrausChannel& e : instr.elements()) {
    const CpptpReport r = cpptp_report(e.superop());
    if (!r.completely_positive(tol) || !r.pt_completely_positive(tol)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Instruments

struct Outcome {
  double probability;
  BipartiteState state;
};

inline constexpr double kOutcomeFloor = 1e-13;

inline std::vector<Outcome> instrument_outcomes(const Instrument& instr,
                                                const BipartiteState& rho) {
  if (!(rho.dims() == instr.in_dims())) {
    throw Error(ErrorKind::kDimensionMismatch, "instrument_outcomes: state dims");
  }
  std::vector<Outcome> out;
  for (const KrausChannel& e : instr.elements()) {
    const ComplexMatrix y = hermitian_part(e(rho.matrix()));
    const double p = y.trace().real();
    if (p <= kOutcomeFloor) continue;
    out.push_back({p, BipartiteState::unchecked(instr.out_dims(), y / p)});
  }
  return out;
}

struct MonotonicityCheck {
  double lhs = 0.0;    // measure of the input
  double rhs = 0.0;    // average measure of the outcomes
  double slack = 0.0;  // lhs - rhs
  bool converged = true;
};

template <class Measure>
MonotonicityCheck average_over_outcomes(const Instrument& instr, const BipartiteState& rho,
                                        const Measure& measure) {
  MonotonicityCheck c;
  const MeasureResult in = measure(rho);
  c.lhs = in.value_bits;
  c.converged = in.converged;
  for (const Outcome& o : instrument_outcomes(instr, rho)) {
    const MeasureResult r = measure(o.state);
    c.rhs += o.probability * r.value_bits;
    c.converged = c.converged && r.converged;
  }
  c.slack = c.lhs - c.rhs;
  return c;
}

inline MonotonicityCheck monotonicity_check(const Instrument& instr, const BipartiteState& rho,
                                            Alpha alpha, const SolverConfig& cfg = {}) {
  if (!is_cpptp(instr)) {
    throw Error(ErrorKind::kNotCpptp, "monotonicity_check: instrument is not C-PPT-P");
  }
  SolverConfig inner = cfg;
  inner.compute_bracket = false;
  return average_over_outcomes(
      instr, rho, [&](const BipartiteState& s) { return e_alpha(s, alpha, inner); });
}

/// Kraus operators K_x acting on one side of `dims`, taken as the blocks of a
/// Haar-random isometry C^d -> C^(outcomes*d).
inline Instrument random_local_instrument(BipartitionDims dims, int outcomes, Subsystem side,
                                          Rng& rng) {
  if (outcomes < 1) throw Error(ErrorKind::kInvalidArgument, "need at least one outcome");
  const int d = side == Subsystem::kA ? dims.dA : dims.dB;
  const ComplexMatrix u = random_unitary(outcomes * d, rng);
  std::vector<KrausChannel> elements;
  for (int x = 0; x < outcomes; ++x) {
    const ComplexMatrix k = u.block(x * d, 0, d, d);
    const ComplexMatrix op = side == Subsystem::kA ? tensor(k, identity(dims.dB))
                                                   : tensor(identity(dims.dA), k);
    elements.push_back(KrausChannel::sub_channel({op}, dims, dims));
  }
  return Instrument(std::move(elements));
}

/// Random channel C^din -> C^dout with `rank` Kraus operators, the blocks of a
/// Haar-random isometry. Needs rank * dout >= din.
inline KrausChannel random_channel(BipartitionDims in, BipartitionDims out, int rank, Rng& rng) {
  const int din = in.total(), dout = out.total();
  if (rank < 1 || rank * dout < din) {
    throw Error(ErrorKind::kInvalidArgument, "random_channel: rank * d_out must be >= d_in");
  }
  const ComplexMatrix u = random_unitary(rank * dout, rng);
  std::vector<ComplexMatrix> ops;
  for (int x = 0; x < rank; ++x) ops.push_back(u.block(x * dout, 0, dout, din));
  return KrausChannel(std::move(ops), in, out);
}

/// Rank-one projective measurement in the computational basis of one side.
inline Instrument local_projective_measurement(BipartitionDims dims, Subsystem side) {
  const int d = side == Subsystem::kA ? dims.dA : dims.dB;
  std::vector<KrausChannel> elements;
  for (int k = 0; k < d; ++k) {
    ComplexMatrix proj = ComplexMatrix::Zero(d, d);
    proj(k, k) = 1.0;
    const ComplexMatrix op = side == Subsystem::kA ? tensor(proj, identity(dims.dB))
                                                   : tensor(identity(dims.dA), proj);
    elements.push_back(KrausChannel::sub_channel({op}, dims, dims));
  }
  return Instrument(std::move(elements));
}

// ---------------------------------------------------------------------------
// Standard channels

inline KrausChannel identity_channel(BipartitionDims dims) {
  return KrausChannel({identity(dims.total())}, dims, dims);
}

inline KrausChannel unitary_channel(const ComplexMatrix& u, BipartitionDims dims) {
  return KrausChannel({u}, dims, dims);
}

/// X -> Tr[X] I / d_out.
inline KrausChannel completely_depolarizing(BipartitionDims in, BipartitionDims out) {
  const int din = in.total(), dout = out.total();
  std::vector<ComplexMatrix> ops;
  for (int k = 0; k < dout; ++k)
    for (int i = 0; i < din; ++i) {
      ComplexMatrix op = ComplexMatrix::Zero(dout, din);
      op(k, i) = 1.0 / std::sqrt(static_cast<double>(dout));
      ops.push_back(std::move(op));
    }
  return KrausChannel(std::move(ops), in, out);
}

/// Exchanges the two factors: A B -> B A.
inline KrausChannel swap_channel(BipartitionDims dims) {
  ComplexMatrix f = ComplexMatrix::Zero(dims.total(), dims.total());
  for (int a = 0; a < dims.dA; ++a)
    for (int b = 0; b < dims.dB; ++b) f(b * dims.dA + a, a * dims.dB + b) = 1.0;
  return KrausChannel({f}, dims, BipartitionDims(dims.dB, dims.dA));
}

inline SuperOperator partial_transpose_superop(BipartitionDims dims) {
  return SuperOperator::from_map(
      [&](const ComplexMatrix& x) { return partial_transpose(x, dims); }, dims, dims);
}

// ---------------------------------------------------------------------------
// Werner-Holevo and bosonic families

struct WernerHolevoParams {
  double p = 0.0;
  int d = 2;

  void validate() const {
    if (!(p >= 0.0 && p <= 1.0) || d < 2) {
      throw Error(ErrorKind::kOutOfDomain, "Werner-Holevo parameters need p in [0,1], d >= 2");
    }
  }
};

/// (1-p) (Tr[X] I + X^T)/(d+1) + p (Tr[X] I - X^T)/(d-1).
inline SuperOperator werner_holevo_channel(double p, int d) {
  WernerHolevoParams{p, d}.validate();
  const double dd = d;
  const BipartitionDims dims(d, 1);
  return SuperOperator::from_map(
      [&](const ComplexMatrix& x) {
        const ComplexMatrix tr = x.trace() * identity(d);
        const ComplexMatrix xt = x.transpose();
        return ComplexMatrix((1.0 - p) * (tr + xt) / (dd + 1.0) +
                             p * (tr - xt) / (dd - 1.0));
      },
      dims, dims);
}

inline double werner_holevo_value(double p, int d) {
  WernerHolevoParams{p, d}.validate();
  if (p <= 0.5) return 0.0;
  return std::log2(2.0 / d * (2.0 * p - 1.0) + 1.0);
}

enum class BosonicKind { kThermal, kAmplifier, kAdditiveNoise };

/// Thermal: eta in (0,1), n_b in (0, eta/(1-eta)). Amplifier: gain > 1,
/// n_b in (0, 1/(gain-1)). Additive noise: xi in (0,1).
struct BosonicParams {
  double eta = 0.0;
  double gain = 0.0;
  double n_b = 0.0;
  double xi = 0.0;
};

inline double bosonic_value(BosonicKind kind, const BosonicParams& q) {
  auto out_of_domain = [](const char* what) { throw Error(ErrorKind::kOutOfDomain, what); };
  switch (kind) {
    case BosonicKind::kThermal:
      if (!(q.eta > 0.0 && q.eta < 1.0)) out_of_domain("thermal channel needs eta in (0,1)");
      if (!(q.n_b > 0.0 && q.n_b < q.eta / (1.0 - q.eta))) {
        out_of_domain("thermal channel needs N_B in (0, eta/(1-eta))");
      }
      return std::log2((1.0 + q.eta) / ((1.0 - q.eta) * (2.0 * q.n_b + 1.0)));
    case BosonicKind::kAmplifier:
      if (!(q.gain > 1.0)) out_of_domain("amplifier channel needs G > 1");
      if (!(q.n_b > 0.0 && q.n_b < 1.0 / (q.gain - 1.0))) {
        out_of_domain("amplifier channel needs N_B in (0, 1/(G-1))");
      }
      return std::log2((q.gain + 1.0) / ((q.gain - 1.0) * (2.0 * q.n_b + 1.0)));
    case BosonicKind::kAdditiveNoise:
      if (!(q.xi > 0.0 && q.xi < 1.0)) out_of_domain("additive-noise channel needs xi in (0,1)");
      return std::log2(1.0 / q.xi);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown bosonic channel kind");
}

// ---------------------------------------------------------------------------
// Channel-level measure

struct InputSearchResult {
  double value_bits = 0.0;
  Eigen::VectorXd best_parameters;
  std::vector<double> restart_values;
  double dispersion = 0.0;  // max - min over restarts
  bool dispersed = false;   // dispersion > value_tol
  bool all_converged = true;
};

namespace detail {

/// Complex d1 x d2 matrix from 2 d1 d2 reals, scaled to unit Frobenius norm.
inline ComplexMatrix unit_amplitudes(const Eigen::VectorXd& x, int rows, int cols) {
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows * cols; ++i) m(i / cols, i % cols) = Complex(x(2 * i), x(2 * i + 1));
  const double n = m.norm();
  if (!(n > 1e-12)) return ComplexMatrix();
  return m / n;
}

inline Eigen::VectorXd parameters_of(const ComplexMatrix& m) {
  Eigen::VectorXd x(2 * m.size());
  for (int i = 0; i < m.size(); ++i) {
    const Complex v = m(i / m.cols(), i % m.cols());
    x(2 * i) = v.real();
    x(2 * i + 1) = v.imag();
  }
  return x;
}

/// Maximizes value(x) by simplex search from x0 followed by restarts from
/// Gaussian points drawn with cfg.seed. value returns (bits, converged).
template <class Value>
InputSearchResult restart_search(const Value& value, const Eigen::VectorXd& x0,
                                 const SolverConfig& cfg) {
  InputSearchResult res;
  res.value_bits = -kInf;
  Rng rng(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  SimplexParams sp;
  sp.max_evals = cfg.max_simplex_evals;
  for (int r = 0; r < cfg.restarts; ++r) {
    Eigen::VectorXd start = x0;
    if (r > 0) {
      for (Eigen::Index i = 0; i < start.size(); ++i) start(i) = normal(rng);
      start /= start.norm();
    }
    const SimplexResult s = nelder_mead(
        [&](const Eigen::VectorXd& x) { return -value(x).first; }, start, sp);
    const auto [best, converged] = value(s.x);
    res.restart_values.push_back(best);
    res.all_converged = res.all_converged && converged;
    if (best > res.value_bits) {
      res.value_bits = best;
      res.best_parameters = s.x;
    }
  }
  const auto [lo, hi] = std::minmax_element(res.restart_values.begin(), res.restart_values.end());
  res.dispersion = *hi - *lo;
  res.dispersed = res.dispersion > cfg.value_tol;
  return res;
}

}  // namespace detail

/// Output of id_R (x) N on the pure input with amplitude matrix m (R x A).
template <class Channel>
BipartiteState channel_output(const Channel& n, const ComplexMatrix& m) {
  const int din = n.in_dims().total(), dout = n.out_dims().total();
  const ComplexMatrix lift = tensor(m, identity(dout));
  const ComplexMatrix w = hermitian_part(lift * choi_of(n) * lift.adjoint());
  return BipartiteState::unchecked(BipartitionDims(din, dout), w);
}

/// sup over pure inputs psi_RA, R ~ A, of E^alpha((id (x) N)(psi)). The
/// first search starts from the maximally entangled input.
template <class Channel>
InputSearchResult channel_e_alpha(const Channel& n, Alpha alpha, const SolverConfig& cfg = {}) {
  cfg.validate();
  const int d = n.in_dims().total();
  if (d > 4) throw Error(ErrorKind::kInvalidArgument, "channel_e_alpha: input dimension above 4");
  SolverConfig inner = cfg;
  inner.compute_bracket = false;
  const auto value = [&](const Eigen::VectorXd& x) -> std::pair<double, bool> {
    const ComplexMatrix m = detail::unit_amplitudes(x, d, d);
    if (m.size() == 0) return {0.0, true};
    const MeasureResult r = e_alpha(channel_output(n, m), alpha, inner);
    return {r.value_bits, r.converged};
  };
  const ComplexMatrix phi = identity(d) / std::sqrt(static_cast<double>(d));
  return detail::restart_search(value, detail::parameters_of(phi), cfg);
}

}  // namespace alphaneg

#endif  // ALPHANEG_CHANNELS_HPP
