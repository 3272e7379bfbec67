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

#include <benchmark/benchmark.h>

#include "fmsa/annealer.hpp"
#include "fmsa/engine.hpp"
#include "fmsa/fm.hpp"
#include "fmsa/rng.hpp"

namespace {

using namespace fmsa;

FmParams random_params(int n, int k, std::uint64_t seed) {
  Rng rng(seed);
  FmParams params;
  params.q = Eigen::VectorXd::Zero(n);
  params.v = Eigen::MatrixXd::Zero(n, k);
  for (int i = 0; i < n; ++i) params.q(i) = rng.next_gaussian();
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < k; ++f) params.v(i, f) = 0.3 * rng.next_gaussian();
  return params;
}

// One annealing run on the composed one-hot Hamiltonian that dominates the
// optimizer's wall time (128 variables, p = 1000).
void BM_RunSaOneHot128(benchmark::State& state) {
  const CodecSpec spec = CodecSpec::one_hot(64, -32, 2, 1000.0);
  const QuboMatrix h = compose_hamiltonian(random_params(128, 8, 11), spec);
  const AnnealSchedule schedule{initial_beta(spec), 100.0, 100, 100};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(derive_seed(1, seed++));
    benchmark::DoNotOptimize(run_sa(h, schedule, rng));
  }
  state.SetItemsProcessed(state.iterations() * 128l * 100 * 100);
}
BENCHMARK(BM_RunSaOneHot128)->Unit(benchmark::kMillisecond);

// A 60-sample batch, the annealer's unit of work inside one iteration.
void BM_SampleBatch60(benchmark::State& state) {
  const CodecSpec spec = CodecSpec::one_hot(64, -32, 2, 1000.0);
  const QuboMatrix h = compose_hamiltonian(random_params(128, 8, 12), spec);
  const AnnealSchedule schedule{initial_beta(spec), 100.0, 100, 100};
  const int workers = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_batch(h, schedule, SaBatchConfig{60, seed++}, workers));
  }
}
BENCHMARK(BM_SampleBatch60)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_DeltaEnergy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(13);
  QuboMatrix q(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) q.at(i, j) = rng.next_gaussian();
  BitVec x(n);
  for (auto& b : x) b = rng.next_bit();
  int i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta_energy(q, x, i));
    i = (i + 1) % n;
  }
}
BENCHMARK(BM_DeltaEnergy)->Arg(16)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
