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

// Acceptance suite. Runs every criterion at its stated tolerance and prints
// one [PASS]/[FAIL] line per criterion; exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "alphaneg/alphaneg.hpp"

namespace an = alphaneg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double min_eig(const an::ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<an::ComplexMatrix> es(h);
  return es.eigenvalues().minCoeff();
}

an::SolverConfig quiet_config() {
  an::SolverConfig cfg;
  cfg.compute_bracket = false;
  return cfg;
}

// Random states on 2x2, 2x3, 3x3 with rank 1..3, filtered by `keep`.
std::vector<an::BipartiteState> sample_states(std::uint64_t seed, int count,
                                              const std::function<bool(const an::BipartiteState&)>& keep,
                                              int min_rank = 1) {
  an::Rng rng(seed);
  static const an::BipartitionDims shapes[] = {{2, 2}, {2, 3}, {3, 3}};
  std::vector<an::BipartiteState> out;
  for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
    const an::BipartitionDims dims = shapes[i % 3];
    const int rank = std::uniform_int_distribution<int>(min_rank, 3)(rng);
    an::BipartiteState rho = an::random_state(dims, rank, rng);
    if (keep(rho)) out.push_back(std::move(rho));
  }
  return out;
}

Outcome normalization() {
  const an::SolverConfig cfg = quiet_config();
  double worst = 0.0;
  for (int d : {2, 3, 4}) {
    for (double a : {1.0, 1.5, 2.0, 5.0, an::kInf}) {
      const double v = an::e_alpha(an::max_entangled(d), an::Alpha(a), cfg).value_bits;
      worst = std::max(worst, std::abs(v - std::log2(d)));
    }
  }
  return {worst <= 1e-4, "max |E - log2 d| = " + fmt(worst) + " over 15 cases (tol 1e-4)"};
}

Outcome two_qubit_collapse() {
  const an::SolverConfig cfg = quiet_config();
  an::Rng rng(2025);
  double worst = 0.0;
  for (int i = 0; i < 25; ++i) {
    const int rank = std::uniform_int_distribution<int>(1, 4)(rng);
    const an::BipartiteState rho = an::random_state({2, 2}, rank, rng);
    const double en = an::log_negativity(rho);
    for (double a : {1.5, 2.0, 5.0, an::kInf}) {
      worst = std::max(worst, std::abs(an::e_alpha(rho, an::Alpha(a), cfg).value_bits - en));
    }
  }
  return {worst <= 1e-4, "max |E^a - E_N| = " + fmt(worst) + " over 25 states (tol 1e-4)"};
}

Outcome ordering() {
  an::SuiteConfig sc;
  sc.instances = 30;
  sc.seed = 3;
  const an::BatteryResult r = an::ordering_suite(sc);
  return {r.passed() && r.instances == 30,
          std::to_string(r.checks) + " comparisons, worst slack " + fmt(r.worst_slack) +
              " (tol " + fmt(r.tol) + ")"};
}

Outcome limits() {
  const an::SolverConfig cfg = quiet_config();
  const auto states = sample_states(4, 10, [](const an::BipartiteState& r) {
    return !an::ppt_membership(r);
  });
  double low = 0.0, gap_min = an::kInf, gap_max = -an::kInf;
  int strict = 0;
  for (const auto& rho : states) {
    const double en = an::log_negativity(rho);
    low = std::max(low, std::abs(an::e_alpha(rho, an::Alpha(1.03), cfg).value_bits - en));
    const double ek = an::e_kappa(rho, cfg).value_bits;
    const double gap = ek - an::e_alpha(rho, an::Alpha(64.0), cfg).value_bits;
    gap_min = std::min(gap_min, gap);
    gap_max = std::max(gap_max, gap);
    strict += ek > en + 1e-3;
  }
  const bool pass = low <= 5e-3 && gap_min >= -1e-4 && gap_max <= 0.02;
  return {pass, "max |E^1.03 - E_N| = " + fmt(low) + " (tol 5e-3); E_kappa - E^64 in [" +
                    fmt(gap_min) + ", " + fmt(gap_max) + "] (allowed [-1e-4, 0.02]); " +
                    std::to_string(strict) + "/10 states with E_kappa > E_N"};
}

Outcome repro_table(const std::string& name) {
  const an::ReproTable t = an::repro(name);
  int failed = 0;
  std::ostringstream worst;
  for (const an::ReproRow& r : t.rows) {
    if (!r.pass()) {
      ++failed;
      worst << "; failed " << r.label << " = " << r.computed;
    }
  }
  return {failed == 0 && !t.rows.empty(),
          std::to_string(t.rows.size() - failed) + "/" + std::to_string(t.rows.size()) +
              " rows within tolerance" + worst.str()};
}

Outcome monotonicity() {
  an::SuiteConfig smoke;
  smoke.instances = 5;
  smoke.seed = 11;
  const auto t0 = std::chrono::steady_clock::now();
  const an::BatteryResult s = an::monotonicity_suite(smoke, 3);
  const double smoke_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  an::SuiteConfig full;
  full.instances = 10;
  full.seed = 7;
  const an::BatteryResult r = an::monotonicity_suite(full, 50);
  const bool pass = r.passed() && s.passed() && r.instances == 500 && smoke_s <= 30.0;
  return {pass, std::to_string(r.checks) + " checks, worst slack " + fmt(r.worst_slack) +
                    " (tol " + fmt(r.tol) + "); 5x3 smoke run " + fmt(smoke_s) + " s"};
}

Outcome lemma_batteries() {
  an::BatteryConfig cfg;
  cfg.instances = 100;
  cfg.max_dim = 6;
  cfg.tol = 1e-8;
  bool pass = true;
  std::ostringstream d;
  for (const an::BatteryResult& b : an::lemma_batteries(cfg)) {
    pass = pass && b.passed() && b.instances == 100;
    d << b.name << " " << b.violations << "/" << b.checks << " (worst " << fmt(b.worst_slack)
      << "); ";
  }
  std::string s = d.str();
  s.resize(s.size() - 2);
  return {pass, s};
}

Outcome werner_holevo() {
  double closed_worst = 0.0;
  for (int d : {2, 3, 4, 5}) {
    for (int k = 0; k <= 20; ++k) {
      const double p = k / 20.0;
      // The channel value equals the log-negativity of its normalized Choi
      // state, computed here from the spectrum of its partial transpose.
      const double direct = an::log_negativity(an::werner_state(d, p));
      closed_worst = std::max(closed_worst, std::abs(an::werner_holevo_value(p, d) - direct));
    }
  }
  an::SolverConfig cfg;
  cfg.compute_bracket = false;
  double search_worst = 0.0;
  for (double a : {1.0, 2.0}) {
    for (double p : {0.5, 0.75, 1.0}) {
      const an::InputSearchResult r =
          an::channel_e_alpha(an::werner_holevo_channel(p, 2), an::Alpha(a), cfg);
      search_worst = std::max(search_worst, std::abs(r.value_bits - an::werner_holevo_value(p, 2)));
    }
  }
  return {closed_worst <= 1e-12 && search_worst <= 5e-3,
          "channel search max error " + fmt(search_worst) + " (tol 5e-3); closed form max error " +
              fmt(closed_worst) + " (tol 1e-12)"};
}

Outcome gradient() {
  an::Rng rng(10);
  static const an::BipartitionDims shapes[] = {{2, 2}, {2, 3}, {3, 3}, {2, 4}};
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const an::BipartitionDims dims = shapes[i % 4];
    const int d = dims.total();
    const an::BipartiteState rho = an::random_state(dims, 1 + i % d, rng);
    const an::ComplexMatrix x = an::partial_transpose(rho);
    const an::ComplexMatrix sigma = an::random_pd(d, rng, 0.2);
    const an::ComplexMatrix h = an::random_hermitian(d, rng) / static_cast<double>(d);
    const double alpha = std::uniform_real_distribution<double>(1.1, 8.0)(rng);
    const an::ComplexMatrix g = an::objective_and_gradient(x, sigma, alpha).second;
    auto fd = [&](double step) {
      return (an::objective_and_gradient(x, sigma + step * h, alpha).first -
              an::objective_and_gradient(x, sigma - step * h, alpha).first) /
             (2.0 * step);
    };
    // Richardson extrapolation of two central differences.
    const double e = 1e-3;
    const double numeric = (4.0 * fd(e / 2.0) - fd(e)) / 3.0;
    worst = std::max(worst, std::abs(an::hs_inner(g, h) - numeric) / std::abs(numeric));
  }
  return {worst <= 1e-5, "max relative error " + fmt(worst) + " over 50 instances (tol 1e-5)"};
}

Outcome projection() {
  const an::ComplexMatrix phi = an::max_entangled(2).matrix();
  const an::ComplexMatrix expected = 0.5 * phi + (an::identity(4) - phi) / 6.0;
  const double err = (an::project_ppt(phi, {2, 2}).matrix() - expected).norm();

  an::Rng rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int candidates = 0, violations = 0;
  for (const an::BipartitionDims dims : {an::BipartitionDims(2, 2), an::BipartitionDims(2, 3)}) {
    for (int i = 0; i < 5; ++i) {
      const an::ComplexMatrix m = an::random_hermitian(dims.total(), rng);
      const an::ComplexMatrix p = an::project_ppt(m, dims).matrix();
      if (min_eig(p) < -1e-9 || min_eig(an::partial_transpose(p, dims)) < -1e-9 ||
          std::abs(p.trace().real() - 1.0) > 1e-9) {
        ++violations;
      }
      for (int k = 0; k < 40; ++k) {
        // Separable candidate: mixture of product pure states.
        an::ComplexMatrix s = an::ComplexMatrix::Zero(dims.total(), dims.total());
        double total = 0.0;
        for (int t = 0; t < 1 + k % 4; ++t) {
          const an::ComplexVector a = an::ginibre(dims.dA, 1, rng).col(0).normalized();
          const an::ComplexVector b = an::ginibre(dims.dB, 1, rng).col(0).normalized();
          const an::ComplexVector v = an::tensor(a, b);
          const double w = u(rng);
          s += w * v * v.adjoint();
          total += w;
        }
        s /= total;
        ++candidates;
        if ((m - p).norm() > (m - s).norm() + 1e-9 || an::hs_inner(m - p, s - p) > 1e-7) {
          ++violations;
        }
      }
    }
  }
  return {err <= 1e-8 && violations == 0,
          "Frobenius error " + fmt(err) + " (tol 1e-8); " + std::to_string(candidates) +
              " candidate comparisons, " + std::to_string(violations) + " violations"};
}

Outcome resource_reduction() {
  const an::SolverConfig cfg = quiet_config();
  // Ranks 2..3 keep both marginals full rank.
  const auto states = sample_states(13, 10, [](const an::BipartiteState&) { return true; }, 2);
  double worst = 0.0;
  int order_violations = 0;
  for (const auto& rho : states) {
    const an::PositiveMapSpec pt = an::PositiveMapSpec::partial_transpose(rho.dims());
    double prev = -an::kInf;
    for (double a : {1.0, 1.5, 2.0, 5.0, an::kInf}) {
      const double r = an::r_alpha(rho, pt, an::Alpha(a), cfg).value_bits;
      worst = std::max(worst, std::abs(r - an::e_alpha(rho, an::Alpha(a), cfg).value_bits));
      order_violations += r < prev - 2e-4;
      prev = r;
    }
  }
  const auto free_states = sample_states(14, 10, [](const an::BipartiteState& r) {
    return an::ppt_membership(r);
  });
  double free_worst = 0.0;
  for (const auto& rho : free_states) {
    const an::PositiveMapSpec pt = an::PositiveMapSpec::partial_transpose(rho.dims());
    for (double a : {1.0, 2.0, an::kInf}) {
      free_worst = std::max(free_worst, std::abs(an::r_alpha(rho, pt, an::Alpha(a), cfg).value_bits));
    }
  }
  return {worst <= 1e-6 && free_worst <= 1e-9 && order_violations == 0,
          "max |R - E| = " + fmt(worst) + " over 10 states (tol 1e-6); max value on 10 free states " +
              fmt(free_worst) + "; " + std::to_string(order_violations) + " ordering violations"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "normalization", normalization},
      {2, "two-qubit collapse", two_qubit_collapse},
      {3, "ordering", ordering},
      {4, "alpha limits", limits},
      {5, "no-convexity fixture", [] { return repro_table("no-convexity"); }},
      {6, "no-monogamy fixture", [] { return repro_table("no-monogamy"); }},
      {7, "monotonicity under instruments", monotonicity},
      {8, "divergence lemma batteries", lemma_batteries},
      {9, "Werner-Holevo channel values", werner_holevo},
      {10, "gradient correctness", gradient},
      {11, "projection correctness", projection},
      {12, "resource reduction", resource_reduction},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::printf("[%s] criterion %d %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
