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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fmsa/engine.hpp"

namespace fmsa::harness {

enum class ExperimentKind {
  kEnergyCurve,
  kErrorDistribution,
  kInvocationScatter,
  kDimensionCompare,
  kFciCurve,
  kExhaustiveOracle,
};

const char* experiment_name(ExperimentKind kind);
ExperimentKind experiment_from_name(const std::string& name);

/// One experiment: a grid of optimizer runs over (dimension, bond length,
/// bits, rank, penalty) cells times n_runs seeds, or one of the reference
/// studies (FCI curve, exhaustive oracle).
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kErrorDistribution;
  Encoding encoding = Encoding::kOneHot;
  std::vector<int> dimensions = {2};
  std::vector<double> bond_lengths = {0.7414};
  std::vector<int> d_values = {64};
  std::vector<int> rank_values = {8};
  std::vector<double> p_values = {1000.0};
  std::optional<long> n0;           // default: centered range
  std::optional<int> n_runs;        // default depends on kind and dimension
  TrainConfig train;
  AnnealSchedule schedule{0.0, 100.0, 100, 100};  // beta_initial 0 = derived
  int sa_samples = 60;
  int n_select = 3;
  int max_iterations = 1000;
  int max_samples = 1000;
  int stall_limit = 6;
  bool warm_start = false;
  std::uint64_t seed = 1;
  std::pair<long, long> oracle_range = {-32, 31};
  std::optional<std::string> basis_file;
  std::string output = "results.csv";
};

/// Parses the JSON config text (not a path). Unknown keys are an error.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config_file(const std::string& path);
std::string to_json(const ExperimentConfig& cfg);

int default_runs(ExperimentKind kind, int dimension);
long default_n0(Encoding encoding, int d);

/// One optimizer run of the grid; the row layout of the results CSV.
struct ResultRow {
  long run_id = 0;
  std::uint64_t seed = 0;
  int dimension = 2;
  Encoding encoding = Encoding::kOneHot;
  int d = 0;
  long n0 = 0;
  int rank = 0;
  double penalty = 0.0;
  double bond_length = 0.0;
  int iterations = 0;
  std::string stop_reason;
  long invocations = 0;
  double best_energy = 0.0;
  double energy_error = 0.0;  // best_energy - E_FCI at this bond length
  long first_hit_invocations = 0;
  double train_mse_last = 0.0;
  double wall_time_s = 0.0;
};

struct ResultsFile {
  std::string version;
  std::string experiment;
  ExperimentConfig config;
  std::vector<ResultRow> rows;
};

std::string format_row(const ResultRow& row);
ResultRow parse_row(const std::string& line);
inline constexpr const char* kRowHeader =
    "run_id,seed,dimension,encoding,d,n0,rank,penalty,bond_length,iterations,"
    "stop_reason,invocations,best_energy,energy_error,first_hit_invocations,"
    "train_mse_last,wall_time_s";

/// Runs the configured experiment, streaming rows to `out` in run_id order
/// (rows are flushed as soon as every earlier row is finished, so an
/// interrupted run leaves a valid prefix). Returns the rows.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg, int workers,
                                      std::ostream& out);

/// Enumerates every nonzero integer point of the configured range (L = 2
/// only) and returns the optimal point and its energy.
std::pair<IntegerPoint, double> exhaustive_oracle(const ExperimentConfig& cfg);

/// Parses a results file previously written by run_experiment.
ResultsFile load_results(const std::string& path);

/// Re-runs the row's cell with its recorded seed and verifies the best
/// energy reproduces bit-identically. Returns the re-run row. Throws
/// ConfigError on version mismatch and Error on a reproduction failure.
ResultRow replay(const ResultsFile& results, long run_id);

}  // namespace fmsa::harness
