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

// Command-line front end.
//
// Exit codes: 0 success, 1 reproduction or property mismatch, 2 invalid
// input, 3 non-convergence, 4 unsupported map or out-of-domain parameters.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alphaneg/alphaneg.hpp"

namespace an = alphaneg;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kBadInput = 2, kNoConvergence = 3, kUnsupported = 4 };

struct Options {
  std::string input;
  std::string out;
  std::string alpha = "2";
  std::string alphas;
  std::string grid;
  std::string family;
  std::string map = "partial_transpose";
  std::string suite = "all";
  std::string name;
  std::uint64_t seed = 0;
  double tol = 1e-4;
  int max_iter = 5000;
  int restarts = 20;
  int precision = 6;
  bool raw = false;
};

std::string fmt(double v, int precision) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream s;
  s << std::fixed << std::setprecision(precision) << v;
  return s.str();
}

double parse_alpha(const std::string& s) {
  if (s == "inf" || s == "infinity") return an::kInf;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw an::Error(an::ErrorKind::kInvalidArgument, "bad alpha '" + s + "'");
  an::Alpha{v};
  return v;
}

std::vector<double> parse_list(const std::string& s, char sep) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(parse_alpha(item));
  return out;
}

std::vector<double> parse_numbers(const std::string& s) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !std::isfinite(v)) {
      throw an::Error(an::ErrorKind::kInvalidArgument, "bad number '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<double> grid_alphas(const std::string& g) {
  const std::vector<double> parts = parse_list(g, ':');
  if (parts.size() != 3 || !std::isfinite(parts[1]) || parts[1] < parts[0] ||
      parts[2] < 1 || parts[2] != std::floor(parts[2])) {
    throw an::Error(an::ErrorKind::kInvalidArgument, "grid must be lo:hi:n with lo <= hi");
  }
  const int n = static_cast<int>(parts[2]);
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(n == 1 ? parts[0] : parts[0] + (parts[1] - parts[0]) * i / (n - 1));
  }
  return out;
}

an::SolverConfig solver_config(const Options& o) {
  an::SolverConfig cfg;
  cfg.value_tol = o.tol;
  cfg.max_iter = o.max_iter;
  cfg.seed = o.seed;
  cfg.restarts = o.restarts;
  cfg.validate();
  return cfg;
}

void print_result(const an::MeasureResult& r, int precision) {
  std::cout << "value_bits " << fmt(r.value_bits, precision) << '\n'
            << "alpha " << (r.alpha.is_infinite() ? std::string("inf") : fmt(r.alpha.value(), 6))
            << '\n'
            << "e_n_lower " << fmt(r.bracket.e_n_lower, precision) << '\n'
            << "e_kappa_upper " << fmt(r.bracket.e_kappa_upper, precision) << '\n'
            << "iterations " << r.iterations << '\n'
            << "converged " << (r.converged ? "true" : "false") << '\n';
  if (!r.diagnostic.empty()) std::cout << "diagnostic " << r.diagnostic << '\n';
}

an::MeasureResult measure(const an::BipartiteState& rho, an::Alpha alpha, const Options& o,
                          const an::SolverConfig& cfg) {
  if (o.map == "partial_transpose") return an::e_alpha(rho, alpha, cfg);
  return an::r_alpha(rho, an::PositiveMapSpec::by_name(o.map, rho.dims()), alpha, cfg);
}

int cmd_compute(const Options& o) {
  const an::BipartiteState rho = an::load_state(o.input, o.raw);
  const an::MeasureResult r = measure(rho, an::Alpha(parse_alpha(o.alpha)), o, solver_config(o));
  print_result(r, o.precision);
  return r.converged ? kOk : kNoConvergence;
}

int cmd_kappa(const Options& o) {
  const an::BipartiteState rho = an::load_state(o.input, o.raw);
  const an::MeasureResult r = an::e_kappa(rho, solver_config(o));
  print_result(r, o.precision);
  return r.converged ? kOk : kNoConvergence;
}

an::Json manifest(const std::string& command, const Options& o, double seconds) {
  return an::Json{{"command", command},
                  {"inputs", an::Json::array({o.input})},
                  {"config", {{"alpha", o.alpha},
                              {"alphas", o.alphas},
                              {"grid", o.grid},
                              {"map", o.map},
                              {"tol", o.tol},
                              {"max_iter", o.max_iter},
                              {"raw", o.raw}}},
                  {"seed", o.seed},
                  {"output", o.out},
                  {"wall_clock_seconds", seconds},
                  {"version", an::kVersion}};
}

int cmd_sweep(const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  if (o.alphas.empty() == o.grid.empty()) {
    throw an::Error(an::ErrorKind::kInvalidArgument, "sweep needs exactly one of --alphas, --grid");
  }
  std::vector<double> alphas = o.grid.empty() ? parse_list(o.alphas, ',') : grid_alphas(o.grid);
  std::sort(alphas.begin(), alphas.end());
  const an::BipartiteState rho = an::load_state(o.input, o.raw);
  const an::SolverConfig cfg = solver_config(o);

  std::vector<an::MeasureResult> points;
  if (o.map == "partial_transpose") {
    points = an::alpha_sweep(rho, alphas, cfg).points;
  } else {
    for (double a : alphas) points.push_back(measure(rho, an::Alpha(a), o, cfg));
  }

  std::ostringstream csv;
  csv << "alpha,value_bits,e_n_lower,e_kappa_upper,iterations,converged\n";
  bool all_converged = true;
  int violations = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const an::MeasureResult& r = points[i];
    all_converged = all_converged && r.converged;
    if (i + 1 < points.size() && r.value_bits > points[i + 1].value_bits + 2.0 * cfg.value_tol) {
      ++violations;
    }
    csv << (std::isinf(alphas[i]) ? std::string("inf") : fmt(alphas[i], 6)) << ','
        << fmt(r.value_bits, o.precision) << ',' << fmt(r.bracket.e_n_lower, o.precision) << ','
        << fmt(r.bracket.e_kappa_upper, o.precision) << ',' << r.iterations << ','
        << (r.converged ? "true" : "false") << '\n';
  }
  if (o.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(o.out);
    if (!f) throw an::Error(an::ErrorKind::kInvalidArgument, "cannot write '" + o.out + "'");
    f << csv.str();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    an::save_json(o.out + ".manifest.json", manifest("sweep", o, secs));
  }
  std::cerr << "monotonicity audit: " << points.size() << " points, " << violations
            << " violations\n";
  return all_converged ? kOk : kNoConvergence;
}

int cmd_channel(const Options& o) {
  if (o.input.empty() == o.family.empty()) {
    throw an::Error(an::ErrorKind::kInvalidArgument, "channel needs a file or --family");
  }
  const an::SolverConfig cfg = solver_config(o);
  const an::Alpha alpha(parse_alpha(o.alpha));
  auto report = [&](const an::InputSearchResult& r) {
    std::cout << "value_bits " << fmt(r.value_bits, o.precision) << '\n'
              << "restart_dispersion " << fmt(r.dispersion, o.precision) << '\n';
    if (r.dispersed) std::cout << "warning restarts disagree by more than the tolerance\n";
    return r.all_converged ? kOk : kNoConvergence;
  };
  if (!o.input.empty()) return report(an::channel_e_alpha(an::load_channel(o.input), alpha, cfg));

  const auto colon = o.family.find(':');
  const std::string kind = o.family.substr(0, colon);
  const std::vector<double> args =
      colon == std::string::npos ? std::vector<double>{} : parse_numbers(o.family.substr(colon + 1));
  auto need = [&](std::size_t n) {
    if (args.size() != n) {
      throw an::Error(an::ErrorKind::kInvalidArgument,
                      "--family " + kind + " takes " + std::to_string(n) + " parameters");
    }
  };
  if (kind == "wh") {
    need(2);
    const int d = static_cast<int>(args[1]);
    if (args[1] != d) throw an::Error(an::ErrorKind::kOutOfDomain, "d must be an integer");
    std::cout << "closed_form " << fmt(an::werner_holevo_value(args[0], d), o.precision) << '\n';
    if (d > 4) return kOk;
    return report(an::channel_e_alpha(an::werner_holevo_channel(args[0], d), alpha, cfg));
  }
  double v = 0.0;
  if (kind == "thermal") {
    need(2);
    v = an::bosonic_value(an::BosonicKind::kThermal, {.eta = args[0], .n_b = args[1]});
  } else if (kind == "amplifier") {
    need(2);
    v = an::bosonic_value(an::BosonicKind::kAmplifier, {.gain = args[0], .n_b = args[1]});
  } else if (kind == "additive") {
    need(1);
    v = an::bosonic_value(an::BosonicKind::kAdditiveNoise, {.xi = args[0]});
  } else {
    throw an::Error(an::ErrorKind::kInvalidArgument, "unknown family '" + kind + "'");
  }
  std::cout << "value_bits " << fmt(v, o.precision) << '\n';
  return kOk;
}

int cmd_project(const Options& o) {
  const an::BipartiteState rho = an::load_state(o.input, true);
  const an::BipartiteState proj = an::project_ppt(rho.matrix(), rho.dims());
  std::cout << "distance " << fmt((proj.matrix() - rho.matrix()).norm(), o.precision) << '\n';
  if (o.out.empty()) {
    std::cout << an::state_to_json(proj).dump(1) << '\n';
  } else {
    an::save_json(o.out, an::state_to_json(proj));
  }
  return kOk;
}

int cmd_repro(const Options& o) {
  const an::ReproTable t = an::repro(o.name, solver_config(o));
  std::cout << std::left << std::setw(36) << "row" << std::setw(14) << "computed"
            << std::setw(14) << "expected" << std::setw(6) << "pass"
            << "reference\n";
  for (const an::ReproRow& r : t.rows) {
    std::cout << std::setw(36) << r.label << std::setw(14) << fmt(r.computed, o.precision)
              << std::setw(14) << ((r.lower_bound ? ">" : "") + fmt(r.expected, o.precision))
              << std::setw(6) << (r.pass() ? "yes" : "NO") << r.source << '\n';
  }
  return t.all_pass() ? kOk : kMismatch;
}

int cmd_check(const Options& o) {
  static const std::vector<std::string> suites{"lemmas", "ordering", "monotonicity",
                                               "subadditivity", "all"};
  if (std::find(suites.begin(), suites.end(), o.suite) == suites.end()) {
    throw an::Error(an::ErrorKind::kInvalidArgument, "unknown suite '" + o.suite + "'");
  }
  const bool all = o.suite == "all";
  std::vector<an::BatteryResult> results;
  if (all || o.suite == "lemmas") {
    an::BatteryConfig bc;
    bc.seed = o.seed;
    for (an::BatteryResult& r : an::lemma_batteries(bc)) results.push_back(std::move(r));
  }
  an::SuiteConfig sc;
  sc.seed = o.seed;
  sc.solver = solver_config(o);
  if (all || o.suite == "ordering") {
    sc.instances = 30;
    results.push_back(an::ordering_suite(sc));
  }
  if (all || o.suite == "monotonicity") {
    sc.instances = 10;
    results.push_back(an::monotonicity_suite(sc, 10));
  }
  if (all || o.suite == "subadditivity") {
    sc.instances = 10;
    results.push_back(an::subadditivity_suite(sc));
  }
  bool ok = true;
  for (const an::BatteryResult& r : results) {
    ok = ok && r.passed();
    std::cout << std::left << std::setw(28) << r.name << " instances " << r.instances
              << " checks " << r.checks << " violations " << r.violations << " worst_slack "
              << std::scientific << std::setprecision(3) << r.worst_slack << std::defaultfloat
              << '\n';
  }
  return ok ? kOk : kMismatch;
}

int exit_code(an::ErrorKind k) {
  switch (k) {
    case an::ErrorKind::kNotConverged:
      return kNoConvergence;
    case an::ErrorKind::kUnsupportedMap:
    case an::ErrorKind::kOutOfDomain:
    case an::ErrorKind::kNotCpptp:
    case an::ErrorKind::kCommutationFailed:
      return kUnsupported;
    default:
      return kBadInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alpha-logarithmic negativities of bipartite states and channels"};
  app.set_version_flag("--version", an::kVersion);
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--tol", o.tol, "value tolerance in bits");
    c->add_option("--max-iter", o.max_iter, "projected-gradient iteration limit");
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--precision", o.precision, "decimal places in printed values");
  };

  auto* compute = app.add_subcommand("compute", "alpha-logarithmic negativity of a state");
  compute->add_option("state", o.input, "state JSON")->required();
  compute->add_option("--alpha", o.alpha, "alpha >= 1 or inf");
  compute->add_option("--map", o.map, "positive map: partial_transpose, transpose, reduction");
  compute->add_flag("--raw", o.raw, "admit any Hermitian operator");
  common(compute);

  auto* sweep = app.add_subcommand("sweep", "values over a list or grid of alphas, as CSV");
  sweep->add_option("state", o.input, "state JSON")->required();
  sweep->add_option("--alphas", o.alphas, "comma-separated alphas");
  sweep->add_option("--grid", o.grid, "lo:hi:n, evenly spaced");
  sweep->add_option("--out", o.out, "CSV path; a manifest is written next to it");
  sweep->add_option("--map", o.map, "positive map");
  sweep->add_flag("--raw", o.raw, "admit any Hermitian operator");
  common(sweep);

  auto* kappa = app.add_subcommand("kappa", "kappa-entanglement via the barrier SDP");
  kappa->add_option("state", o.input, "state JSON")->required();
  kappa->add_flag("--raw", o.raw, "admit any Hermitian operator");
  common(kappa);

  auto* channel = app.add_subcommand("channel", "channel-level value");
  channel->add_option("channel", o.input, "channel JSON");
  channel->add_option("--family", o.family,
                      "wh:p,d | thermal:eta,N_B | amplifier:G,N_B | additive:xi");
  channel->add_option("--alpha", o.alpha, "alpha >= 1 or inf");
  channel->add_option("--restarts", o.restarts, "simplex searches over inputs");
  common(channel);

  auto* project = app.add_subcommand("project", "nearest PPT state in Frobenius norm");
  project->add_option("state", o.input, "operator JSON (any Hermitian)")->required();
  project->add_option("--out", o.out, "output JSON path");
  common(project);

  auto* repro = app.add_subcommand("repro", "reference tables");
  repro->add_option("name", o.name, "no-convexity | no-monogamy | normalization | "
                                    "two-qubit-collapse | werner-holevo")
      ->required();
  common(repro);

  auto* check = app.add_subcommand("check", "randomized property suites");
  check->add_option("--suite", o.suite, "lemmas | ordering | monotonicity | subadditivity | all");
  common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*compute) return cmd_compute(o);
    if (*sweep) return cmd_sweep(o);
    if (*kappa) return cmd_kappa(o);
    if (*channel) return cmd_channel(o);
    if (*project) return cmd_project(o);
    if (*repro) return cmd_repro(o);
    if (*check) return cmd_check(o);
  } catch (const an::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
