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

#include "fmsa/engine.hpp"

#include <algorithm>
#include <unordered_set>

#include "fmsa/errors.hpp"
#include "fmsa/rng.hpp"

namespace fmsa {

namespace {

struct BitVecHash {
  std::size_t operator()(const BitVec& bits) const {
    std::size_t h = 1469598103934665603ull;  // FNV-1a
    for (const std::uint8_t b : bits) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using BitVecSet = std::unordered_set<BitVec, BitVecHash>;

}  // namespace

void validate(const OptimizerConfig& cfg) {
  validate(cfg.codec);
  validate(cfg.train);
  if (cfg.rank < 1) throw ConfigError("OptimizerConfig: rank must be positive");
  if (cfg.sa_samples < 1) throw ConfigError("OptimizerConfig: sa_samples must be >= 1");
  if (cfg.n_select < 1 || cfg.n_select > cfg.sa_samples) {
    throw ConfigError("OptimizerConfig: need 1 <= n_select <= sa_samples");
  }
  if (cfg.max_iterations < 1 || cfg.max_samples < 1 || cfg.stall_limit < 1) {
    throw ConfigError("OptimizerConfig: limits must be positive");
  }
}

const char* stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::kMaxIterations: return "max_iterations";
    case StopReason::kMaxSamples: return "max_samples";
    case StopReason::kStalled: return "stalled";
  }
  return "?";
}

std::vector<SampleRecord> initial_samples(const BlackBoxProblem& problem,
                                          const CodecSpec& spec) {
  const int L = problem.dimension();
  if (L != spec.L) throw ConfigError("initial_samples: codec L does not match problem dimension");
  if (spec.min_value() > 0 || spec.max_value() < 1) {
    throw RangeError("initial_samples: encoding range must contain {0, 1}");
  }
  std::vector<SampleRecord> records;
  records.reserve(L);
  for (int j = 0; j < L; ++j) {
    IntegerPoint point(std::vector<long>(L, 0));
    point.values[j] = 1;
    SampleRecord rec;
    rec.bits = encode_point(point, spec);
    rec.cost = problem.evaluate(point);
    rec.point = std::move(point);
    rec.iteration_found = 0;
    records.push_back(std::move(rec));
  }
  return records;
}

QuboMatrix compose_hamiltonian(const FmParams& params, const CodecSpec& spec) {
  if (params.n_vars() != spec.total_bits()) {
    throw DimensionError("compose_hamiltonian: FM size does not match codec bits");
  }
  QuboMatrix h = normalize_qubo(fm_to_qubo(params));
  add_scaled(h, constraint_qubo(spec), spec.p);
  return h;
}

std::vector<Candidate> conversion_phase(const std::vector<BitVec>& raw,
                                        const CodecSpec& spec,
                                        const QuboMatrix& surrogate,
                                        const std::vector<SampleRecord>& sample_set,
                                        const BlackBoxProblem& problem, int n_select) {
  BitVecSet known;
  known.reserve(sample_set.size());
  for (const auto& rec : sample_set) known.insert(rec.bits);

  struct Scored {
    Candidate candidate;
    double energy;
  };
  std::vector<Scored> scored;
  BitVecSet seen;
  for (const auto& bits : raw) {
    if (!seen.insert(bits).second) continue;        // duplicate within batch
    if (!is_feasible(bits, spec)) continue;         // constraint violation
    IntegerPoint point = decode_point(bits, spec);
    if (!problem.accepts(point)) continue;          // domain filter
    if (known.contains(bits)) continue;             // already evaluated
    const double energy = qubo_energy(surrogate, bits);
    scored.push_back({Candidate{bits, std::move(point)}, energy});
  }
  std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    return a.candidate.bits < b.candidate.bits;  // deterministic tie break
  });
  if (static_cast<int>(scored.size()) > n_select) scored.resize(n_select);

  std::vector<Candidate> out;
  out.reserve(scored.size());
  for (auto& s : scored) out.push_back(std::move(s.candidate));
  return out;
}

RunHistory run_optimization(const BlackBoxProblem& problem, const OptimizerConfig& cfg) {
  validate(cfg);
  AnnealSchedule schedule = cfg.schedule;
  if (schedule.beta_initial <= 0.0) schedule.beta_initial = initial_beta(cfg.codec);
  validate(schedule);

  std::vector<SampleRecord> samples = initial_samples(problem, cfg.codec);
  long invocations = 0;
  RunHistory history;
  history.best = samples.front();
  for (const auto& rec : samples) {
    ++invocations;
    if (rec.cost < history.best.cost) {
      history.best = rec;
      history.invocations_at_best = invocations;
    }
  }
  if (history.invocations_at_best == 0) history.invocations_at_best = 1;
  history.initial_best_cost = history.best.cost;
  history.stop_reason = StopReason::kMaxIterations;

  std::optional<FmParams> previous;
  int stall = 0;
  for (int it = 1;; ++it) {
    if (it > cfg.max_iterations) {
      history.stop_reason = StopReason::kMaxIterations;
      break;
    }
    if (static_cast<int>(samples.size()) > cfg.max_samples) {
      history.stop_reason = StopReason::kMaxSamples;
      break;
    }
    if (stall >= cfg.stall_limit) {
      history.stop_reason = StopReason::kStalled;
      break;
    }

    // Training phase: fit the surrogate to every sample collected so far.
    std::vector<TrainingSample> training;
    training.reserve(samples.size());
    for (const auto& rec : samples) training.push_back({rec.bits, rec.cost});
    TrainStats train_stats;
    const std::uint64_t train_seed = derive_seed(cfg.rng_seed, 2ull * it);
    FmParams params =
        train_fm(training, cfg.rank, cfg.train, train_seed, &train_stats,
                 cfg.warm_start ? previous : std::nullopt);
    if (cfg.warm_start) previous = params;

    // Sampling phase: low-energy states of the composed surrogate.
    const QuboMatrix h = compose_hamiltonian(params, cfg.codec);
    SaBatchConfig sa_cfg{cfg.sa_samples, derive_seed(cfg.rng_seed, 2ull * it + 1)};
    const std::vector<BitVec> raw = sample_batch(h, schedule, sa_cfg, cfg.sa_workers);
    int feasible = 0;
    for (const auto& bits : raw) {
      if (is_feasible(bits, cfg.codec)) ++feasible;
    }

    // Conversion phase.
    const std::vector<Candidate> candidates =
        conversion_phase(raw, cfg.codec, h, samples, problem, cfg.n_select);
    stall = candidates.empty() ? stall + 1 : 0;

    // Evaluation phase.
    for (const auto& cand : candidates) {
      SampleRecord rec;
      rec.bits = cand.bits;
      rec.point = cand.point;
      rec.cost = problem.evaluate(cand.point);
      rec.iteration_found = it;
      ++invocations;
      if (rec.cost < history.best.cost) {
        history.best = rec;
        history.invocations_at_best = invocations;
      }
      samples.push_back(std::move(rec));
    }

    history.iterations.push_back({it, history.best.cost, invocations, feasible,
                                  train_stats.final_mse});
  }

  history.total_invocations = invocations;
  return history;
}

}  // namespace fmsa
