// Copyright 2026 The fmsa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "fmsa/errors.hpp"
#include "fmsa/version.hpp"
#include "harness/experiment.hpp"
#include "harness/presets.hpp"

namespace {

using namespace fmsa;
using namespace fmsa::harness;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

// Worker-pool size is the one setting controlled by the environment.
int worker_count() {
  if (const char* env = std::getenv("FMSA_WORKERS")) {
    const int workers = std::atoi(env);
    if (workers < 1) throw ConfigError("FMSA_WORKERS must be a positive integer");
    return workers;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct RunFlags {
  std::string config_path;
  std::string preset_name;
  bool list_presets = false;
  std::optional<std::string> output;
  std::optional<std::uint64_t> seed;
  std::optional<int> n_runs;
  std::optional<std::string> experiment;
  std::optional<std::string> encoding;
  std::optional<int> dimension;
  std::optional<double> bond_length;
  std::optional<int> d;
  std::optional<int> rank;
  std::optional<double> penalty;
  std::optional<int> max_iterations;
  std::optional<int> max_samples;
  std::optional<std::string> basis;
};

ExperimentConfig resolve_config(const RunFlags& flags) {
  ExperimentConfig cfg;
  if (!flags.preset_name.empty() && !flags.config_path.empty()) {
    throw ConfigError("--preset and --config are mutually exclusive");
  }
  if (!flags.preset_name.empty()) {
    cfg = preset(flags.preset_name);
  } else if (!flags.config_path.empty()) {
    cfg = load_config_file(flags.config_path);
  } else {
    throw ConfigError("run needs --config FILE or --preset NAME");
  }
  if (flags.experiment) cfg.kind = experiment_from_name(*flags.experiment);
  if (flags.encoding) cfg.encoding = encoding_from_name(*flags.encoding);
  if (flags.dimension) cfg.dimensions = {*flags.dimension};
  if (flags.bond_length) cfg.bond_lengths = {*flags.bond_length};
  if (flags.d) cfg.d_values = {*flags.d};
  if (flags.rank) cfg.rank_values = {*flags.rank};
  if (flags.penalty) cfg.p_values = {*flags.penalty};
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.n_runs) cfg.n_runs = *flags.n_runs;
  if (flags.max_iterations) cfg.max_iterations = *flags.max_iterations;
  if (flags.max_samples) cfg.max_samples = *flags.max_samples;
  if (flags.basis) cfg.basis_file = *flags.basis;
  if (flags.output) cfg.output = *flags.output;
  if (cfg.encoding == Encoding::kBinary) cfg.p_values = {0.0};
  return cfg;
}

int cmd_run(const RunFlags& flags) {
  if (flags.list_presets) {
    std::cout << preset_summary();
    return kExitOk;
  }
  const ExperimentConfig cfg = resolve_config(flags);
  std::ofstream out(cfg.output);
  if (!out) throw ConfigError("cannot open output file: " + cfg.output);
  const int workers = worker_count();
  std::cerr << "running " << experiment_name(cfg.kind) << " -> " << cfg.output
            << " (workers: " << workers << ")\n";
  const auto rows = run_experiment(cfg, workers, out);
  std::cerr << "wrote " << cfg.output << "\n";
  if (!rows.empty()) {
    double best = rows[0].best_energy;
    for (const auto& row : rows) best = std::min(best, row.best_energy);
    std::cout << "runs: " << rows.size() << "  best energy: " << best << "\n";
  }
  return kExitOk;
}

int cmd_oracle(double bond_length, std::pair<long, long> range,
               const std::string& output) {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::kExhaustiveOracle;
  cfg.bond_lengths = {bond_length};
  cfg.dimensions = {2};
  cfg.oracle_range = range;
  cfg.output = output;
  const auto [point, energy] = exhaustive_oracle(cfg);
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw ConfigError("cannot open output file: " + output);
    run_experiment(cfg, 1, out);
  }
  std::cout.precision(17);
  std::cout << "optimal point: (" << point.values[0] << ", " << point.values[1]
            << ")\noptimal energy: " << energy << "\n";
  return kExitOk;
}

int cmd_fci_curve(double rmin, double rmax, double step, const std::string& output) {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::kFciCurve;
  if (step <= 0 || rmax < rmin) throw ConfigError("bad bond-length grid");
  cfg.bond_lengths.clear();
  const int n = static_cast<int>(std::lround((rmax - rmin) / step)) + 1;
  for (int i = 0; i < n; ++i) cfg.bond_lengths.push_back(rmin + i * step);
  cfg.output = output;
  std::ofstream out(output);
  if (!out) throw ConfigError("cannot open output file: " + output);
  run_experiment(cfg, 1, out);
  std::cout << "wrote " << output << " (" << cfg.bond_lengths.size() << " points)\n";
  return kExitOk;
}

int cmd_replay(const std::string& results_path, long run_id) {
  const ResultsFile results = load_results(results_path);
  const ResultRow row = replay(results, run_id);
  std::cout.precision(17);
  std::cout << "replayed run " << run_id << ": best energy " << row.best_energy
            << " reproduced bit-identically\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Surrogate-assisted integer black-box optimizer and its "
               "hydrogen-molecule benchmark harness"};
  app.set_version_flag("--version", std::string(fmsa::kVersion));
  app.require_subcommand(0, 1);

  RunFlags flags;
  auto* run = app.add_subcommand("run", "run a configured experiment grid");
  run->add_option("--config", flags.config_path, "JSON experiment config");
  run->add_option("--preset", flags.preset_name, "named preset (see --list-presets)");
  run->add_flag("--list-presets", flags.list_presets, "list preset names and exit");
  run->add_option("--output", flags.output, "results CSV path (overrides config)");
  run->add_option("--seed", flags.seed, "master seed (overrides config)");
  run->add_option("--runs", flags.n_runs, "runs per grid cell (overrides config)");
  run->add_option("--experiment", flags.experiment, "experiment kind override");
  run->add_option("--encoding", flags.encoding, "binary | one-hot | domain-wall");
  run->add_option("--dimension", flags.dimension, "search-space dimension (2, 6 or 16)");
  run->add_option("--bond-length", flags.bond_length, "bond length in Angstrom");
  run->add_option("--d", flags.d, "bits per integer variable");
  run->add_option("--rank", flags.rank, "factorization rank k");
  run->add_option("--penalty", flags.penalty, "constraint penalty p");
  run->add_option("--max-iterations", flags.max_iterations, "iteration cap");
  run->add_option("--max-samples", flags.max_samples, "sample-set size cap");
  run->add_option("--basis", flags.basis, "basis data file (defaults to bundled STO-3G)");

  double oracle_bond = 0.7414;
  std::pair<long, long> oracle_range{-32, 31};
  std::string oracle_output;
  auto* oracle = app.add_subcommand(
      "oracle", "exhaustively enumerate the discretized optimum (L = 2)");
  oracle->add_option("--bond-length", oracle_bond, "bond length in Angstrom");
  oracle->add_option("--range", oracle_range, "inclusive per-variable range LO HI");
  oracle->add_option("--output", oracle_output, "optional CSV output path");

  double rmin = 0.30, rmax = 3.00, rstep = 0.02;
  std::string fci_output = "fci_curve.csv";
  auto* fci = app.add_subcommand("fci-curve",
                                 "reference Hartree-Fock and FCI energy curve");
  fci->add_option("--rmin", rmin, "grid start (Angstrom)");
  fci->add_option("--rmax", rmax, "grid end (Angstrom)");
  fci->add_option("--step", rstep, "grid step (Angstrom)");
  fci->add_option("--output", fci_output, "output CSV path");

  std::string replay_path;
  long replay_row = 0;
  auto* rep = app.add_subcommand("replay", "re-run one results row and verify it");
  rep->add_option("--results", replay_path, "results CSV written by `run`")->required();
  rep->add_option("--row", replay_row, "run_id of the row to replay")->required();

  try {
    app.parse(argc, argv);
    if (run->parsed()) return cmd_run(flags);
    if (oracle->parsed()) return cmd_oracle(oracle_bond, oracle_range, oracle_output);
    if (fci->parsed()) return cmd_fci_curve(rmin, rmax, rstep, fci_output);
    if (rep->parsed()) return cmd_replay(replay_path, replay_row);
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  } catch (const fmsa::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
