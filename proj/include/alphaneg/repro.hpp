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

// Reference tables: computed values next to known closed forms and fixture
// values, with a pass flag per row.

#ifndef ALPHANEG_REPRO_HPP
#define ALPHANEG_REPRO_HPP

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "alphaneg/channels.hpp"
#include "alphaneg/solver.hpp"
#include "alphaneg/states.hpp"

namespace alphaneg {

struct ReproRow {
  std::string label;
  double computed = 0.0;
  double expected = 0.0;
  double tol = 0.0;
  bool lower_bound = false;  // pass iff computed > expected
  std::string source;

  bool pass() const {
    if (!std::isfinite(computed)) return false;
    return lower_bound ? computed > expected : std::abs(computed - expected) <= tol;
  }
};

struct ReproTable {
  std::string name;
  std::vector<ReproRow> rows;

  bool all_pass() const {
    for (const ReproRow& r : rows) {
      if (!r.pass()) return false;
    }
    return true;
  }
};

inline const std::vector<std::string>& repro_names() {
  static const std::vector<std::string> names{"no-convexity", "no-monogamy", "normalization",
                                              "two-qubit-collapse", "werner-holevo"};
  return names;
}

namespace detail {

inline std::string alpha_label(double a) {
  if (std::isinf(a)) return "inf";
  std::ostringstream s;
  s << a;
  return s.str();
}

inline SolverConfig without_bracket(SolverConfig cfg) {
  cfg.compute_bracket = false;
  return cfg;
}

}  // namespace detail

inline ReproTable repro_no_convexity(const SolverConfig& cfg = {}) {
  const SolverConfig sc = detail::without_bracket(cfg);
  const NoConvexityFixture f = no_convexity_fixture();
  ReproTable t{"no-convexity", {}};
  for (double a : {1.0, 2.0, kInf}) {
    const std::string al = detail::alpha_label(a);
    const double v1 = e_alpha(f.rho1, Alpha(a), sc).value_bits;
    const double v2 = e_alpha(f.rho2, Alpha(a), sc).value_bits;
    const double vm = e_alpha(f.mixture, Alpha(a), sc).value_bits;
    t.rows.push_back({"E(rho1) alpha=" + al, v1, 1.0, 1e-4, false, "fixture value 1"});
    t.rows.push_back({"E(rho2) alpha=" + al, v2, 0.0, 1e-4, false, "fixture value 0"});
    t.rows.push_back(
        {"E(mixture) alpha=" + al, vm, std::log2(1.5), 1e-4, false, "fixture value log2(3/2)"});
    t.rows.push_back({"convexity gap alpha=" + al, vm - 0.5 * (v1 + v2), 0.08, 0.0, true,
                      "gap log2(3/2) - 1/2 > 0.08"});
  }
  return t;
}

inline ReproTable repro_no_monogamy(const SolverConfig& cfg = {}) {
  const SolverConfig sc = detail::without_bracket(cfg);
  const TripartiteCuts cuts = tripartite_cuts(no_monogamy_fixture());
  ReproTable t{"no-monogamy", {}};
  for (double a : {1.0, 2.0, kInf}) {
    const Alpha al(a);
    const double ab = e_alpha(cuts.ab, al, sc).value_bits;
    const double ac = e_alpha(cuts.ac, al, sc).value_bits;
    const double abc = e_alpha(cuts.a_bc, al, sc).value_bits;
    t.rows.push_back({"E(A:B)+E(A:C)-E(A:BC) alpha=" + detail::alpha_label(a), ab + ac - abc,
                      0.01, 0.0, true, "monogamy violated by > 0.01"});
  }
  return t;
}

inline ReproTable repro_normalization(const SolverConfig& cfg = {}) {
  const SolverConfig sc = detail::without_bracket(cfg);
  ReproTable t{"normalization", {}};
  for (int d : {2, 3, 4}) {
    const BipartiteState phi = max_entangled(d);
    for (double a : {1.0, 1.5, 2.0, 5.0, kInf}) {
      t.rows.push_back({"Phi_" + std::to_string(d) + " alpha=" + detail::alpha_label(a),
                        e_alpha(phi, Alpha(a), sc).value_bits, std::log2(d), 1e-4, false,
                        "log2 d"});
    }
  }
  return t;
}

inline ReproTable repro_two_qubit_collapse(const SolverConfig& cfg = {}, int states = 10) {
  const SolverConfig sc = detail::without_bracket(cfg);
  ReproTable t{"two-qubit-collapse", {}};
  Rng rng(cfg.seed);
  for (int i = 0; i < states; ++i) {
    const int rank = 1 + i % 4;
    const BipartiteState rho = random_state({2, 2}, rank, rng);
    const double en = log_negativity(rho);
    for (double a : {2.0, kInf}) {
      t.rows.push_back({"state " + std::to_string(i) + " alpha=" + detail::alpha_label(a),
                        e_alpha(rho, Alpha(a), sc).value_bits, en, 1e-4, false,
                        "equals E_N"});
    }
  }
  return t;
}

/// Werner-Holevo values from the Choi state (the optimal input for this
/// covariant family) plus the bosonic closed forms at sample points.
inline ReproTable repro_werner_holevo(const SolverConfig& cfg = {}) {
  const SolverConfig sc = detail::without_bracket(cfg);
  ReproTable t{"werner-holevo", {}};
  for (int d : {2, 3}) {
    for (double p : {0.0, 0.25, 0.5, 0.75, 0.9, 1.0}) {
      const SuperOperator w = werner_holevo_channel(p, d);
      const BipartiteState out =
          channel_output(w, ComplexMatrix(identity(d) / std::sqrt(static_cast<double>(d))));
      const double expected = werner_holevo_value(p, d);
      for (double a : {1.0, 2.0, kInf}) {
        std::ostringstream label;
        label << "W(p=" << p << ",d=" << d << ") alpha=" << detail::alpha_label(a);
        t.rows.push_back({label.str(), e_alpha(out, Alpha(a), sc).value_bits, expected, 1e-4,
                          false, "closed form"});
      }
    }
  }
  t.rows.push_back({"thermal eta=0.5 N_B=0.25",
                    bosonic_value(BosonicKind::kThermal, {.eta = 0.5, .n_b = 0.25}), 1.0, 1e-12,
                    false, "closed form"});
  t.rows.push_back({"amplifier G=2 N_B=0.5",
                    bosonic_value(BosonicKind::kAmplifier, {.gain = 2.0, .n_b = 0.5}),
                    std::log2(1.5), 1e-12, false, "closed form"});
  t.rows.push_back({"additive noise xi=0.5",
                    bosonic_value(BosonicKind::kAdditiveNoise, {.xi = 0.5}), 1.0, 1e-12, false,
                    "closed form"});
  return t;
}

inline ReproTable repro(const std::string& name, const SolverConfig& cfg = {}) {
  if (name == "no-convexity") return repro_no_convexity(cfg);
  if (name == "no-monogamy") return repro_no_monogamy(cfg);
  if (name == "normalization") return repro_normalization(cfg);
  if (name == "two-qubit-collapse") return repro_two_qubit_collapse(cfg);
  if (name == "werner-holevo") return repro_werner_holevo(cfg);
  throw Error(ErrorKind::kInvalidArgument, "unknown reproduction '" + name + "'");
}

}  // namespace alphaneg

#endif  // ALPHANEG_REPRO_HPP
