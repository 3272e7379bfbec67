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

#include "harness/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "fmsa/errors.hpp"
#include "fmsa/h2.hpp"
#include "fmsa/parallel.hpp"
#include "fmsa/rng.hpp"
#include "fmsa/version.hpp"

namespace fmsa::harness {

using nlohmann::json;

const char* experiment_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kEnergyCurve: return "energy_curve";
    case ExperimentKind::kErrorDistribution: return "error_distribution";
    case ExperimentKind::kInvocationScatter: return "invocation_scatter";
    case ExperimentKind::kDimensionCompare: return "dimension_compare";
    case ExperimentKind::kFciCurve: return "fci_curve";
    case ExperimentKind::kExhaustiveOracle: return "exhaustive_oracle";
  }
  return "?";
}

ExperimentKind experiment_from_name(const std::string& name) {
  for (const auto kind :
       {ExperimentKind::kEnergyCurve, ExperimentKind::kErrorDistribution,
        ExperimentKind::kInvocationScatter, ExperimentKind::kDimensionCompare,
        ExperimentKind::kFciCurve, ExperimentKind::kExhaustiveOracle}) {
    if (name == experiment_name(kind)) return kind;
  }
  throw ConfigError("unknown experiment kind: " + name);
}

int default_runs(ExperimentKind kind, int dimension) {
  switch (kind) {
    case ExperimentKind::kEnergyCurve:
      return 10;
    case ExperimentKind::kErrorDistribution:
    case ExperimentKind::kInvocationScatter:
    case ExperimentKind::kDimensionCompare:
      return dimension >= 6 ? 50 : 100;
    default:
      return 1;
  }
}

long default_n0(Encoding encoding, int d) {
  switch (encoding) {
    case Encoding::kBinary: return 0;  // unused
    case Encoding::kOneHot: return -(d / 2);
    case Encoding::kDomainWall: return -((d + 1) / 2);
  }
  return 0;
}

namespace {

std::vector<double> grid_from_json(const json& j, const char* what) {
  if (j.is_number()) return {j.get<double>()};
  if (j.is_array()) {
    auto values = j.get<std::vector<double>>();
    if (values.empty()) throw ConfigError(std::string(what) + ": empty grid");
    return values;
  }
  if (j.is_object()) {
    const double lo = j.at("min").get<double>();
    const double hi = j.at("max").get<double>();
    const double step = j.at("step").get<double>();
    if (step <= 0.0 || hi < lo) throw ConfigError(std::string(what) + ": bad grid range");
    std::vector<double> values;
    const int n = static_cast<int>(std::lround((hi - lo) / step)) + 1;
    for (int i = 0; i < n; ++i) values.push_back(lo + i * step);
    return values;
  }
  throw ConfigError(std::string(what) + ": expected number, array or {min,max,step}");
}

std::vector<int> int_grid(const json& j, const char* what) {
  std::vector<int> values;
  for (const double v : grid_from_json(j, what)) values.push_back(static_cast<int>(v));
  return values;
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  ExperimentConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "experiment") {
      cfg.kind = experiment_from_name(value.get<std::string>());
    } else if (key == "encoding") {
      cfg.encoding = encoding_from_name(value.get<std::string>());
    } else if (key == "dimension" || key == "dimensions") {
      cfg.dimensions = int_grid(value, "dimensions");
    } else if (key == "bond_length" || key == "bond_lengths") {
      cfg.bond_lengths = grid_from_json(value, "bond_lengths");
    } else if (key == "d" || key == "d_values") {
      cfg.d_values = int_grid(value, "d_values");
    } else if (key == "rank" || key == "rank_values") {
      cfg.rank_values = int_grid(value, "rank_values");
    } else if (key == "p" || key == "p_values") {
      cfg.p_values = grid_from_json(value, "p_values");
    } else if (key == "n0") {
      cfg.n0 = value.get<long>();
    } else if (key == "n_runs") {
      cfg.n_runs = value.get<int>();
    } else if (key == "train") {
      for (const auto& [tk, tv] : value.items()) {
        if (tk == "learning_rate") cfg.train.learning_rate = tv.get<double>();
        else if (tk == "max_updates") cfg.train.max_updates = tv.get<int>();
        else if (tk == "target_mse") cfg.train.target_mse = tv.get<double>();
        else if (tk == "beta1") cfg.train.adam_beta1 = tv.get<double>();
        else if (tk == "beta2") cfg.train.adam_beta2 = tv.get<double>();
        else if (tk == "eps") cfg.train.adam_eps = tv.get<double>();
        else throw ConfigError("unknown train key: " + tk);
      }
    } else if (key == "schedule") {
      for (const auto& [sk, sv] : value.items()) {
        if (sk == "beta_initial") cfg.schedule.beta_initial = sv.get<double>();
        else if (sk == "beta_final") cfg.schedule.beta_final = sv.get<double>();
        else if (sk == "n_steps") cfg.schedule.n_steps = sv.get<int>();
        else if (sk == "sweeps_per_step") cfg.schedule.sweeps_per_step = sv.get<int>();
        else throw ConfigError("unknown schedule key: " + sk);
      }
    } else if (key == "sa_samples") {
      cfg.sa_samples = value.get<int>();
    } else if (key == "n_select") {
      cfg.n_select = value.get<int>();
    } else if (key == "max_iterations") {
      cfg.max_iterations = value.get<int>();
    } else if (key == "max_samples") {
      cfg.max_samples = value.get<int>();
    } else if (key == "stall_limit") {
      cfg.stall_limit = value.get<int>();
    } else if (key == "warm_start") {
      cfg.warm_start = value.get<bool>();
    } else if (key == "seed") {
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "oracle_range") {
      const auto range = value.get<std::vector<long>>();
      if (range.size() != 2) throw ConfigError("oracle_range: expected [lo, hi]");
      cfg.oracle_range = {range[0], range[1]};
    } else if (key == "basis_file") {
      cfg.basis_file = value.get<std::string>();
    } else if (key == "output") {
      cfg.output = value.get<std::string>();
    } else {
      throw ConfigError("unknown config key: " + key);
    }
  }
  if (cfg.encoding == Encoding::kBinary) cfg.p_values = {0.0};
  if (cfg.dimensions.empty() || cfg.bond_lengths.empty() || cfg.d_values.empty() ||
      cfg.rank_values.empty() || cfg.p_values.empty()) {
    throw ConfigError("config grids must be non-empty");
  }
  for (const int L : cfg.dimensions) {
    if (L != 2 && L != 6 && L != 16) throw ConfigError("dimension must be 2, 6 or 16");
  }
  if (cfg.n_runs.has_value() && *cfg.n_runs < 1) throw ConfigError("n_runs must be >= 1");
  validate(cfg.train);
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string to_json(const ExperimentConfig& cfg) {
  json j;
  j["experiment"] = experiment_name(cfg.kind);
  j["encoding"] = encoding_name(cfg.encoding);
  j["dimensions"] = cfg.dimensions;
  j["bond_lengths"] = cfg.bond_lengths;
  j["d_values"] = cfg.d_values;
  j["rank_values"] = cfg.rank_values;
  j["p_values"] = cfg.p_values;
  if (cfg.n0.has_value()) j["n0"] = *cfg.n0;
  if (cfg.n_runs.has_value()) j["n_runs"] = *cfg.n_runs;
  j["train"] = {{"learning_rate", cfg.train.learning_rate},
                {"max_updates", cfg.train.max_updates},
                {"target_mse", cfg.train.target_mse},
                {"beta1", cfg.train.adam_beta1},
                {"beta2", cfg.train.adam_beta2},
                {"eps", cfg.train.adam_eps}};
  j["schedule"] = {{"beta_initial", cfg.schedule.beta_initial},
                   {"beta_final", cfg.schedule.beta_final},
                   {"n_steps", cfg.schedule.n_steps},
                   {"sweeps_per_step", cfg.schedule.sweeps_per_step}};
  j["sa_samples"] = cfg.sa_samples;
  j["n_select"] = cfg.n_select;
  j["max_iterations"] = cfg.max_iterations;
  j["max_samples"] = cfg.max_samples;
  j["stall_limit"] = cfg.stall_limit;
  j["warm_start"] = cfg.warm_start;
  j["seed"] = cfg.seed;
  j["oracle_range"] = {cfg.oracle_range.first, cfg.oracle_range.second};
  if (cfg.basis_file.has_value()) j["basis_file"] = *cfg.basis_file;
  j["output"] = cfg.output;
  return j.dump();
}

namespace {

std::string format_double(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

struct Cell {
  int dimension;
  double bond_length;
  int d;
  int rank;
  double penalty;
  int run_index;
};

std::vector<Cell> build_cells(const ExperimentConfig& cfg) {
  std::vector<Cell> cells;
  for (const int L : cfg.dimensions) {
    const int runs = cfg.n_runs.value_or(default_runs(cfg.kind, L));
    for (const double r : cfg.bond_lengths) {
      for (const int d : cfg.d_values) {
        for (const int rank : cfg.rank_values) {
          for (const double p : cfg.p_values) {
            for (int run = 0; run < runs; ++run) {
              cells.push_back({L, r, d, rank, p, run});
            }
          }
        }
      }
    }
  }
  return cells;
}

h2::H2Problem make_problem(const ExperimentConfig& cfg, double bond_length, int L) {
  if (cfg.basis_file.has_value()) {
    const auto basis = h2::load_basis_file(*cfg.basis_file);
    return h2::H2Problem(h2::compute_integrals(bond_length, basis), L);
  }
  return h2::H2Problem(h2::sto3g_integrals(bond_length), L);
}

CodecSpec make_codec(const ExperimentConfig& cfg, const Cell& cell) {
  CodecSpec codec;
  codec.kind = cfg.encoding;
  codec.d = cell.d;
  codec.n0 = cfg.n0.value_or(default_n0(cfg.encoding, cell.d));
  codec.L = cell.dimension;
  codec.p = cfg.encoding == Encoding::kBinary ? 0.0 : cell.penalty;
  validate(codec);
  return codec;
}

ResultRow run_cell(const ExperimentConfig& cfg, const Cell& cell, long run_id) {
  const auto start = std::chrono::steady_clock::now();
  const h2::H2Problem problem = make_problem(cfg, cell.bond_length, cell.dimension);

  OptimizerConfig ocfg;
  ocfg.codec = make_codec(cfg, cell);
  ocfg.rank = cell.rank;
  ocfg.train = cfg.train;
  ocfg.schedule = cfg.schedule;
  ocfg.sa_samples = cfg.sa_samples;
  ocfg.n_select = cfg.n_select;
  ocfg.max_iterations = cfg.max_iterations;
  ocfg.max_samples = cfg.max_samples;
  ocfg.stall_limit = cfg.stall_limit;
  ocfg.rng_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(run_id));
  ocfg.warm_start = cfg.warm_start;

  const RunHistory history = run_optimization(problem, ocfg);

  ResultRow row;
  row.run_id = run_id;
  row.seed = ocfg.rng_seed;
  row.dimension = cell.dimension;
  row.encoding = cfg.encoding;
  row.d = cell.d;
  row.n0 = ocfg.codec.n0;
  row.rank = cell.rank;
  row.penalty = ocfg.codec.p;
  row.bond_length = cell.bond_length;
  row.iterations = static_cast<int>(history.iterations.size());
  row.stop_reason = stop_reason_name(history.stop_reason);
  row.invocations = history.total_invocations;
  row.best_energy = history.best.cost;
  row.energy_error = history.best.cost - problem.fci();
  row.first_hit_invocations = history.invocations_at_best;
  row.train_mse_last =
      history.iterations.empty() ? 0.0 : history.iterations.back().train_mse;
  row.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (row.energy_error < -1e-9) {
    throw Error("variational bound violated: energy error " +
                format_double(row.energy_error));
  }
  return row;
}

std::string header_line(const ExperimentConfig& cfg) {
  json j;
  j["version"] = kVersion;
  j["experiment"] = experiment_name(cfg.kind);
  j["config"] = json::parse(to_json(cfg));
  return "# fmsa-results v1 " + j.dump();
}

}  // namespace

std::string format_row(const ResultRow& row) {
  std::ostringstream out;
  out << row.run_id << ',' << row.seed << ',' << row.dimension << ','
      << encoding_name(row.encoding) << ',' << row.d << ',' << row.n0 << ','
      << row.rank << ',' << format_double(row.penalty) << ','
      << format_double(row.bond_length) << ',' << row.iterations << ','
      << row.stop_reason << ',' << row.invocations << ','
      << format_double(row.best_energy) << ',' << format_double(row.energy_error)
      << ',' << row.first_hit_invocations << ','
      << format_double(row.train_mse_last) << ',' << format_double(row.wall_time_s);
  return out.str();
}

ResultRow parse_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (fields.size() != 17) {
    throw Error("results row has " + std::to_string(fields.size()) +
                " fields, expected 17");
  }
  ResultRow row;
  row.run_id = std::stol(fields[0]);
  row.seed = std::stoull(fields[1]);
  row.dimension = std::stoi(fields[2]);
  row.encoding = encoding_from_name(fields[3]);
  row.d = std::stoi(fields[4]);
  row.n0 = std::stol(fields[5]);
  row.rank = std::stoi(fields[6]);
  row.penalty = std::stod(fields[7]);
  row.bond_length = std::stod(fields[8]);
  row.iterations = std::stoi(fields[9]);
  row.stop_reason = fields[10];
  row.invocations = std::stol(fields[11]);
  row.best_energy = std::stod(fields[12]);
  row.energy_error = std::stod(fields[13]);
  row.first_hit_invocations = std::stol(fields[14]);
  row.train_mse_last = std::stod(fields[15]);
  row.wall_time_s = std::stod(fields[16]);
  return row;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg, int workers,
                                      std::ostream& out) {
  out << header_line(cfg) << '\n';

  if (cfg.kind == ExperimentKind::kFciCurve) {
    out << "bond_length,e_hf,e_fci\n" << std::flush;
    for (const double r : cfg.bond_lengths) {
      const h2::FockHamiltonian h = h2::build_hamiltonian(h2::sto3g_integrals(r));
      out << format_double(r) << ',' << format_double(h2::hf_energy(h)) << ','
          << format_double(h2::fci_energy(h)) << '\n'
          << std::flush;
    }
    return {};
  }

  if (cfg.kind == ExperimentKind::kExhaustiveOracle) {
    const auto [point, energy] = exhaustive_oracle(cfg);
    const h2::H2Problem problem = make_problem(cfg, cfg.bond_lengths[0], 2);
    out << "bond_length,optimal_point,optimal_energy,energy_error\n";
    out << format_double(cfg.bond_lengths[0]) << ',' << point.values[0] << ';'
        << point.values[1] << ',' << format_double(energy) << ','
        << format_double(energy - problem.fci()) << '\n'
        << std::flush;
    return {};
  }

  const std::vector<Cell> cells = build_cells(cfg);
  std::vector<ResultRow> rows(cells.size());

  out << kRowHeader << '\n' << std::flush;
  std::mutex mu;
  std::vector<char> done(cells.size(), 0);
  std::size_t next_flush = 0;

  parallel_for(cells.size(), workers, [&](std::size_t i) {
    ResultRow row = run_cell(cfg, cells[i], static_cast<long>(i));
    std::lock_guard<std::mutex> lock(mu);
    rows[i] = std::move(row);
    done[i] = 1;
    while (next_flush < cells.size() && done[next_flush]) {
      out << format_row(rows[next_flush]) << '\n' << std::flush;
      ++next_flush;
    }
  });
  return rows;
}

std::pair<IntegerPoint, double> exhaustive_oracle(const ExperimentConfig& cfg) {
  const auto [lo, hi] = cfg.oracle_range;
  if (hi < lo) throw ConfigError("oracle_range: hi < lo");
  if (hi - lo + 1 > 256) {
    throw ConfigError("oracle_range spans more than 256 values per variable; "
                      "use property-based checks for larger spaces");
  }
  if (cfg.dimensions.size() != 1 || cfg.dimensions[0] != 2) {
    throw ConfigError("exhaustive_oracle enumerates L = 2 only; larger "
                      "dimensions are out of enumeration reach");
  }
  const h2::H2Problem problem = make_problem(cfg, cfg.bond_lengths[0], 2);
  IntegerPoint best_point;
  double best = std::numeric_limits<double>::infinity();
  for (long a = lo; a <= hi; ++a) {
    for (long b = lo; b <= hi; ++b) {
      if (a == 0 && b == 0) continue;
      const IntegerPoint point({a, b});
      const double e = problem.evaluate(point);
      if (e < best) {
        best = e;
        best_point = point;
      }
    }
  }
  return {best_point, best};
}

ResultsFile load_results(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open results file: " + path);
  std::string line;
  if (!std::getline(in, line) || !line.starts_with("# fmsa-results v1 ")) {
    throw ConfigError("not an fmsa results file: " + path);
  }
  ResultsFile file;
  json j;
  try {
    j = json::parse(line.substr(std::string("# fmsa-results v1 ").size()));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("corrupt results header: ") + e.what());
  }
  file.version = j.at("version").get<std::string>();
  file.experiment = j.at("experiment").get<std::string>();
  file.config = parse_config(j.at("config").dump());
  if (!std::getline(in, line)) return file;
  if (line != kRowHeader) return file;  // reference study; no replayable rows
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    file.rows.push_back(parse_row(line));
  }
  return file;
}

ResultRow replay(const ResultsFile& results, long run_id) {
  if (results.version != kVersion) {
    throw ConfigError("results were written by version " + results.version +
                      " but this binary is " + kVersion);
  }
  const ResultRow* original = nullptr;
  for (const auto& row : results.rows) {
    if (row.run_id == run_id) {
      original = &row;
      break;
    }
  }
  if (original == nullptr) {
    throw ConfigError("results file has no row with run_id " + std::to_string(run_id));
  }

  const ExperimentConfig& cfg = results.config;
  Cell cell{original->dimension, original->bond_length, original->d,
            original->rank, original->penalty, 0};
  ResultRow rerun = run_cell(cfg, cell, run_id);
  // run_cell derives the seed from (cfg.seed, run_id); it must agree with
  // the recorded one, and the outcome must reproduce bit-identically.
  if (rerun.seed != original->seed) {
    throw Error("replay: derived seed does not match the recorded row");
  }
  if (rerun.best_energy != original->best_energy ||
      rerun.invocations != original->invocations ||
      rerun.first_hit_invocations != original->first_hit_invocations ||
      rerun.iterations != original->iterations) {
    throw Error("replay: run did not reproduce the recorded row");
  }
  return rerun;
}

}  // namespace fmsa::harness
