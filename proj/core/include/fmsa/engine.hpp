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
#include <optional>
#include <vector>

#include "fmsa/annealer.hpp"
#include "fmsa/codec.hpp"
#include "fmsa/fm.hpp"
#include "fmsa/problem.hpp"
#include "fmsa/qubo.hpp"

namespace fmsa {

/// One evaluated candidate. `bits` is feasible under the run's codec and
/// decodes to `point`.
struct SampleRecord {
  BitVec bits;
  IntegerPoint point;
  double cost = 0.0;
  int iteration_found = 0;
};

/// Everything that defines one optimization run. Identical configs (seed
/// included) produce bit-identical histories.
struct OptimizerConfig {
  CodecSpec codec;
  int rank = 8;
  TrainConfig train;
  AnnealSchedule schedule;  // beta_initial <= 0 means "use initial_beta(codec)"
  int sa_samples = 60;
  int n_select = 3;
  int max_iterations = 1000;
  int max_samples = 1000;
  int stall_limit = 6;
  std::uint64_t rng_seed = 0;
  bool warm_start = false;
  int sa_workers = 1;  // runtime knob; never affects results
};

void validate(const OptimizerConfig& cfg);

enum class StopReason { kMaxIterations, kMaxSamples, kStalled };

const char* stop_reason_name(StopReason r);

struct IterationStats {
  int iteration = 0;
  double best_cost = 0.0;           // best so far, including this iteration
  long cumulative_invocations = 0;  // black-box calls so far
  int feasible_sa_samples = 0;      // of the raw SA batch
  double train_mse = 0.0;           // MSE when training stopped
};

struct RunHistory {
  std::vector<IterationStats> iterations;
  SampleRecord best;
  StopReason stop_reason = StopReason::kMaxIterations;
  long total_invocations = 0;
  /// Invocation count when the final best cost was first reached.
  long invocations_at_best = 0;
  double initial_best_cost = 0.0;
};

/// Seed samples: the L canonical unit points (value 1 at position j, 0
/// elsewhere), each evaluated through the black box. Requires the codec
/// range to contain {0, 1}.
std::vector<SampleRecord> initial_samples(const BlackBoxProblem& problem,
                                          const CodecSpec& spec);

/// Surrogate Hamiltonian passed to the annealer: normalize_qubo(FM QUBO)
/// plus p times the encoding's constraint term. The FM part has max
/// coefficient magnitude 1, so penalty strength is measured in those units.
QuboMatrix compose_hamiltonian(const FmParams& params, const CodecSpec& spec);

struct Candidate {
  BitVec bits;
  IntegerPoint point;
};

/// Filters a raw SA batch down to at most n_select new evaluation
/// candidates: deduplicate, drop constraint violators, decode, drop points
/// the problem rejects, drop bit vectors already in the sample set, then
/// keep the n_select lowest surrogate energies.
std::vector<Candidate> conversion_phase(const std::vector<BitVec>& raw,
                                        const CodecSpec& spec,
                                        const QuboMatrix& surrogate,
                                        const std::vector<SampleRecord>& sample_set,
                                        const BlackBoxProblem& problem, int n_select);

/// The full loop: seed with initial_samples, then iterate training,
/// sampling, conversion and evaluation until max_iterations is reached, the
/// sample set exceeds max_samples, or conversion produces no candidates for
/// stall_limit consecutive iterations.
RunHistory run_optimization(const BlackBoxProblem& problem, const OptimizerConfig& cfg);

}  // namespace fmsa
