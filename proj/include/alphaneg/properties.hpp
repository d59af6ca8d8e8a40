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

// Randomized property batteries: the divergence inequalities and the
// measure-level suites (ordering, monotonicity, subadditivity). Each battery
// reports its worst slack; a violation is a slack below -tol.

#ifndef ALPHANEG_PROPERTIES_HPP
#define ALPHANEG_PROPERTIES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "alphaneg/channels.hpp"
#include "alphaneg/divergence.hpp"
#include "alphaneg/solver.hpp"
#include "alphaneg/states.hpp"

namespace alphaneg {

struct BatteryResult {
  std::string name;
  int instances = 0;
  int checks = 0;
  int violations = 0;
  double worst_slack = kInf;
  double tol = 0.0;

  void record(double slack) {
    ++checks;
    worst_slack = std::min(worst_slack, slack);
    if (slack < -tol) ++violations;
  }
  bool passed() const { return violations == 0; }
};

struct BatteryConfig {
  int instances = 100;
  int max_dim = 6;
  double tol = 1e-8;
  std::uint64_t seed = 1;
};

namespace detail {

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double nu_value(const ComplexMatrix& x, const ComplexMatrix& sigma, Alpha a) {
  return nu_alpha(x, sigma, a).value();
}

inline const std::vector<double>& lemma_alphas() {
  static const std::vector<double> a{1.0, 1.5, 2.0, 5.0, kInf};
  return a;
}

}  // namespace detail

/// nu(X||sigma) >= nu(P(X)||P(sigma)) for the transpose, partial trace
/// followed by appending a fixed state, and random channels.
inline BatteryResult data_processing_battery(const BatteryConfig& cfg) {
  BatteryResult res{"data processing", 0, 0, 0, kInf, cfg.tol};
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.instances; ++i) {
    ++res.instances;
    std::function<ComplexMatrix(const ComplexMatrix&)> map;
    int d = 0;
    if (i % 3 == 0) {
      d = detail::uniform_int(rng, 2, cfg.max_dim);
      map = [](const ComplexMatrix& x) { return ComplexMatrix(x.transpose()); };
    } else if (i % 3 == 1) {
      const int da = detail::uniform_int(rng, 2, std::max(2, cfg.max_dim / 2));
      const int db = std::max(1, std::min(detail::uniform_int(rng, 2, 3), cfg.max_dim / da));
      const BipartitionDims dims(da, db);
      const ComplexMatrix tau = random_pd(db, rng);
      d = dims.total();
      map = [dims, tau](const ComplexMatrix& x) {
        return tensor(partial_trace(x, dims), tau);
      };
    } else {
      d = detail::uniform_int(rng, 2, cfg.max_dim);
      const int dout = detail::uniform_int(rng, 2, cfg.max_dim);
      const int rank = (d + dout - 1) / dout + 1;
      const KrausChannel n =
          random_channel(BipartitionDims(d, 1), BipartitionDims(dout, 1), rank, rng);
      map = [n](const ComplexMatrix& x) { return n(x); };
    }
    const ComplexMatrix x = random_hermitian(d, rng);
    const ComplexMatrix sigma = random_pd(d, rng);
    const ComplexMatrix px = hermitian_part(map(x));
    const ComplexMatrix ps = hermitian_part(map(sigma));
    for (double a : detail::lemma_alphas()) {
      const Alpha al(a);
      res.record(detail::nu_value(x, sigma, al) - detail::nu_value(px, ps, al));
    }
  }
  return res;
}

/// nu(Y_XB||sigma_XB) >= sum_x p(x) nu(Y^x||sigma^x) + ((alpha-1)/alpha) D(p||q).
inline BatteryResult cq_battery(const BatteryConfig& cfg) {
  BatteryResult res{"cq decomposition", 0, 0, 0, kInf, cfg.tol};
  Rng rng(cfg.seed + 1);
  for (int i = 0; i < cfg.instances; ++i) {
    ++res.instances;
    const int k = detail::uniform_int(rng, 2, std::max(2, cfg.max_dim / 2));
    const int n = std::max(1, std::min(detail::uniform_int(rng, 2, 3), cfg.max_dim / k));
    std::vector<double> p(k), q(k);
    std::vector<ComplexMatrix> ys, sigmas;
    double total = 0.0;
    for (int x = 0; x < k; ++x) {
      p[x] = detail::uniform_real(rng, 0.05, 1.0);
      total += p[x];
      q[x] = detail::uniform_real(rng, 0.1, 2.0);
      ys.push_back(random_hermitian(n, rng));
      sigmas.push_back(random_pd(n, rng));
    }
    for (double& v : p) v /= total;
    const CqState y = make_cq(p, q, ys);
    const ComplexMatrix y_xb = cq_build(y.probs, ys);
    const ComplexMatrix s_xb = cq_build(y.weights, sigmas);
    const double rel = classical_relative_entropy(p, q);
    for (double a : detail::lemma_alphas()) {
      const Alpha al(a);
      double rhs = al.is_infinite() ? rel : (a - 1.0) / a * rel;
      for (int x = 0; x < k; ++x) rhs += p[x] * detail::nu_value(ys[x], sigmas[x], al);
      res.record(detail::nu_value(y_xb, s_xb, al) - rhs);
    }
  }
  return res;
}

/// log2 ||X||_1 <= nu(X||sigma) + ((alpha-1)/alpha) log2 Tr sigma.
inline BatteryResult holder_battery(const BatteryConfig& cfg) {
  BatteryResult res{"trace-norm bound", 0, 0, 0, kInf, cfg.tol};
  Rng rng(cfg.seed + 2);
  for (int i = 0; i < cfg.instances; ++i) {
    ++res.instances;
    const int d = detail::uniform_int(rng, 2, cfg.max_dim);
    const ComplexMatrix x = random_hermitian(d, rng);
    const ComplexMatrix sigma = detail::uniform_real(rng, 0.2, 5.0) * random_pd(d, rng);
    const double lhs = std::log2(schatten_norm(x, 1.0));
    const double log_tr = std::log2(sigma.trace().real());
    for (double a : detail::lemma_alphas()) {
      const Alpha al(a);
      const double w = al.is_infinite() ? 1.0 : (a - 1.0) / a;
      res.record(detail::nu_value(x, sigma, al) + w * log_tr - lhs);
    }
  }
  return res;
}

/// (a/(a-1)) [nu_a - log2||X||_1] <= (b/(b-1)) [nu_b - log2||X||_1].
inline BatteryResult normalized_ordering_battery(const BatteryConfig& cfg) {
  BatteryResult res{"normalized ordering", 0, 0, 0, kInf, cfg.tol};
  Rng rng(cfg.seed + 3);
  const std::vector<std::pair<double, double>> pairs{{1.2, 2.0}, {2.0, 5.0}, {5.0, 50.0}};
  for (int i = 0; i < cfg.instances; ++i) {
    ++res.instances;
    const int d = detail::uniform_int(rng, 2, cfg.max_dim);
    const ComplexMatrix x = random_hermitian(d, rng);
    const ComplexMatrix sigma = detail::uniform_real(rng, 0.2, 5.0) * random_pd(d, rng);
    const double l1 = std::log2(schatten_norm(x, 1.0));
    for (const auto& [a, b] : pairs) {
      const double lhs = a / (a - 1.0) * (detail::nu_value(x, sigma, Alpha(a)) - l1);
      const double rhs = b / (b - 1.0) * (detail::nu_value(x, sigma, Alpha(b)) - l1);
      res.record(rhs - lhs);
    }
  }
  return res;
}

/// nu_a <= nu_b <= d_max for unit-trace sigma. The ordering relies on
/// nu_b >= log2||X||_1, which needs Tr sigma <= 1.
inline BatteryResult plain_ordering_battery(const BatteryConfig& cfg) {
  BatteryResult res{"plain ordering", 0, 0, 0, kInf, cfg.tol};
  Rng rng(cfg.seed + 4);
  const std::vector<std::pair<double, double>> pairs{{1.2, 2.0}, {2.0, 5.0}, {5.0, 50.0}};
  for (int i = 0; i < cfg.instances; ++i) {
    ++res.instances;
    const int d = detail::uniform_int(rng, 2, cfg.max_dim);
    const ComplexMatrix x = random_hermitian(d, rng);
    const ComplexMatrix sigma = random_pd(d, rng);
    const double dm = d_max(x, sigma).value();
    for (const auto& [a, b] : pairs) {
      const double na = detail::nu_value(x, sigma, Alpha(a));
      res.record(detail::nu_value(x, sigma, Alpha(b)) - na);
      res.record(dm - na);
    }
  }
  return res;
}

/// mu_a(X || t s0 + (1-t) s1)^a <= t mu_a(X||s0)^a + (1-t) mu_a(X||s1)^a.
inline BatteryResult convexity_battery(const BatteryConfig& cfg) {
  BatteryResult res{"convexity of mu^alpha", 0, 0, 0, kInf, cfg.tol};
  Rng rng(cfg.seed + 5);
  const std::vector<double> alphas{1.0, 1.5, 2.0, 5.0};
  for (int i = 0; i < cfg.instances; ++i) {
    ++res.instances;
    const int d = detail::uniform_int(rng, 2, cfg.max_dim);
    const ComplexMatrix x = random_hermitian(d, rng);
    const ComplexMatrix s0 = random_pd(d, rng);
    const ComplexMatrix s1 = random_pd(d, rng);
    const double a = alphas[static_cast<std::size_t>(i) % alphas.size()];
    auto f = [&](const ComplexMatrix& s) {
      return std::pow(mu_alpha(x, s, Alpha(a)).value(), a);
    };
    const double f0 = f(s0), f1 = f(s1);
    for (int k = 1; k <= 9; ++k) {
      const double t = 0.1 * k;
      res.record(t * f0 + (1.0 - t) * f1 - f(t * s0 + (1.0 - t) * s1));
    }
  }
  return res;
}

/// |mu(X||(1-e) sigma + e I/d) - mu(X||sigma)| shrinks along
/// e = 1e-2, 1e-4, 1e-6. The slack is the decrease between successive gaps.
inline BatteryResult regularization_battery(const BatteryConfig& cfg) {
  BatteryResult res{"regularization continuity", 0, 0, 0, kInf, cfg.tol};
  Rng rng(cfg.seed + 6);
  const std::vector<double> alphas{1.5, 2.0, 5.0, kInf};
  for (int i = 0; i < cfg.instances; ++i) {
    ++res.instances;
    const int d = detail::uniform_int(rng, 2, cfg.max_dim);
    const ComplexMatrix x = random_hermitian(d, rng);
    const ComplexMatrix sigma = random_pd(d, rng);
    const Alpha a(alphas[static_cast<std::size_t>(i) % alphas.size()]);
    const double base = mu_alpha(x, sigma, a).value();
    double prev = kInf;
    for (double e : {1e-2, 1e-4, 1e-6}) {
      const ComplexMatrix reg = (1.0 - e) * sigma + e * identity(d) / static_cast<double>(d);
      const double gap = std::abs(mu_alpha(x, reg, a).value() - base);
      if (std::isfinite(prev)) res.record(prev - gap);
      prev = gap;
    }
  }
  return res;
}

inline std::vector<BatteryResult> lemma_batteries(const BatteryConfig& cfg) {
  return {data_processing_battery(cfg),   cq_battery(cfg),
          holder_battery(cfg),            normalized_ordering_battery(cfg),
          plain_ordering_battery(cfg),    convexity_battery(cfg),
          regularization_battery(cfg)};
}

// ---------------------------------------------------------------------------
// Measure-level suites

struct SuiteConfig {
  int instances = 10;
  std::uint64_t seed = 1;
  SolverConfig solver;
};

/// Random state on one of 2x2, 2x3, 3x3 with a random rank; low ranks keep
/// a sizable share of entangled samples.
inline BipartiteState random_mixed_dims_state(Rng& rng, int index) {
  static const BipartitionDims shapes[] = {{2, 2}, {2, 3}, {3, 3}};
  const BipartitionDims dims = shapes[index % 3];
  const int rank = detail::uniform_int(rng, 1, std::min(3, dims.total()));
  return random_state(dims, rank, rng);
}

/// E_N <= E^1.5 <= E^2 <= E^5 <= E_kappa with slack tolerance 2 value_tol.
inline BatteryResult ordering_suite(const SuiteConfig& cfg) {
  BatteryResult res{"ordering", 0, 0, 0, kInf, 2.0 * cfg.solver.value_tol};
  Rng rng(cfg.seed);
  SolverConfig sc = cfg.solver;
  sc.compute_bracket = false;
  for (int i = 0; i < cfg.instances; ++i) {
    ++res.instances;
    const BipartiteState rho = random_mixed_dims_state(rng, i);
    std::vector<double> v{log_negativity(rho)};
    for (double a : {1.5, 2.0, 5.0}) v.push_back(e_alpha(rho, Alpha(a), sc).value_bits);
    v.push_back(e_kappa(rho, sc).value_bits);
    for (std::size_t k = 0; k + 1 < v.size(); ++k) res.record(v[k + 1] - v[k]);
  }
  return res;
}

/// E^alpha(rho) >= sum_x p(x) E^alpha(rho_x) under random two-outcome local
/// instruments on two-qubit states, alpha in {1, 2, inf}; tolerance
/// 3 value_tol.
inline BatteryResult monotonicity_suite(const SuiteConfig& cfg, int instruments_per_state) {
  BatteryResult res{"monotonicity", 0, 0, 0, kInf, 3.0 * cfg.solver.value_tol};
  Rng rng(cfg.seed);
  const BipartitionDims dims(2, 2);
  for (int s = 0; s < cfg.instances; ++s) {
    const BipartiteState rho = random_state(dims, detail::uniform_int(rng, 1, 4), rng);
    for (int k = 0; k < instruments_per_state; ++k) {
      ++res.instances;
      const Subsystem side = k % 2 == 0 ? Subsystem::kA : Subsystem::kB;
      const Instrument instr = random_local_instrument(dims, 2, side, rng);
      for (double a : {1.0, 2.0, kInf}) {
        res.record(monotonicity_check(instr, rho, Alpha(a), cfg.solver).slack);
      }
    }
  }
  return res;
}

/// E^alpha(rho (x) omega) <= E^alpha(rho) + E^alpha(omega) on two-qubit
/// pairs, alpha in {2, inf}; tolerance 3 value_tol.
inline BatteryResult subadditivity_suite(const SuiteConfig& cfg) {
  BatteryResult res{"subadditivity", 0, 0, 0, kInf, 3.0 * cfg.solver.value_tol};
  Rng rng(cfg.seed);
  SolverConfig sc = cfg.solver;
  sc.compute_bracket = false;
  const BipartitionDims dims(2, 2);
  for (int i = 0; i < cfg.instances; ++i) {
    ++res.instances;
    const BipartiteState rho = random_state(dims, detail::uniform_int(rng, 1, 2), rng);
    const BipartiteState omega = random_state(dims, detail::uniform_int(rng, 1, 2), rng);
    const BipartiteState joint = tensor_states(rho, omega);
    for (double a : {2.0, kInf}) {
      const Alpha al(a);
      res.record(e_alpha(rho, al, sc).value_bits + e_alpha(omega, al, sc).value_bits -
                 e_alpha(joint, al, sc).value_bits);
    }
  }
  return res;
}

}  // namespace alphaneg

#endif  // ALPHANEG_PROPERTIES_HPP
