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
#include <functional>
#include <span>
#include <vector>

#include "fmsa/codec.hpp"
#include "fmsa/qubo.hpp"
#include "fmsa/rng.hpp"

namespace fmsa {

/// Geometric inverse-temperature schedule: beta_t = beta_initial *
/// (beta_final / beta_initial)^(t / (n_steps - 1)) for t = 0 .. n_steps-1,
/// so both endpoints are hit exactly. Each step performs sweeps_per_step
/// full sweeps.
struct AnnealSchedule {
  double beta_initial = 0.0;
  double beta_final = 100.0;
  int n_steps = 100;
  int sweeps_per_step = 100;
};

void validate(const AnnealSchedule& schedule);

/// The expanded inverse-temperature sequence (length n_steps).
std::vector<double> beta_steps(const AnnealSchedule& schedule);

struct SaBatchConfig {
  int n_samples = 60;
  std::uint64_t rng_seed = 0;
};

/// Upper bound on the single-flip energy change of the composed Hamiltonian
/// (normalized surrogate plus p times the constraint term):
///   binary       L d
///   one-hot      L d + p (2d - 3), requires d >= 2
///   domain-wall  L d + 2 p
double delta_h_upper(const CodecSpec& spec);

/// Canonical initial inverse temperature, 1 / delta_h_upper: large enough
/// thermal fluctuation that any single flip stays order-one in beta*dE.
double initial_beta(const CodecSpec& spec);

/// Probability of setting a bit to 1 under a heat-bath update given the
/// energy difference e1 - e0 between its two states:
/// 1 / (1 + exp(beta * (e1 - e0))). Saturates to 0 or 1 instead of
/// overflowing for large |beta * (e1 - e0)|.
double heat_bath_probability(double beta, double e1_minus_e0);

/// Called after every sweep with the current state; used by tests to observe
/// equilibrium statistics.
using SweepObserver = std::function<void(std::span<const std::uint8_t>)>;

/// Single simulated-annealing run. Starts from uniform random bits; at each
/// of the schedule's temperatures performs sweeps_per_step sweeps, each
/// visiting all variables once in a fresh random permutation and resampling
/// each from its heat-bath conditional. Returns the final state.
BitVec run_sa(const QuboMatrix& q, const AnnealSchedule& schedule, Rng& rng,
              const SweepObserver& observer = {});

/// cfg.n_samples independent run_sa results. Run i uses the stream seed
/// derive_seed(cfg.rng_seed, i), so the batch is reproducible and
/// order-stable no matter how many workers execute it.
std::vector<BitVec> sample_batch(const QuboMatrix& q, const AnnealSchedule& schedule,
                                 const SaBatchConfig& cfg, int workers = 1);

}  // namespace fmsa
