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

#include "fmsa/codec.hpp"
#include "fmsa/fm.hpp"
#include "fmsa/rng.hpp"

namespace {

using namespace fmsa;

std::vector<TrainingSample> one_hot_samples(int count, std::uint64_t seed) {
  const CodecSpec spec = CodecSpec::one_hot(64, -32, 2, 1000.0);
  Rng rng(seed);
  std::vector<TrainingSample> samples;
  samples.reserve(count);
  for (int s = 0; s < count; ++s) {
    const long a = static_cast<long>(rng.next_below(64)) - 32;
    const long b = static_cast<long>(rng.next_below(64)) - 32;
    samples.push_back({encode_point(IntegerPoint({a, b}), spec), rng.next_gaussian()});
  }
  return samples;
}

// A full training phase at a mid-run sample count.
void BM_TrainFm(benchmark::State& state) {
  const auto samples = one_hot_samples(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(train_fm(samples, 8, TrainConfig{}, 17));
  }
}
BENCHMARK(BM_TrainFm)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_FmToQubo(benchmark::State& state) {
  Rng rng(23);
  FmParams params;
  const int n = 128;
  params.q = Eigen::VectorXd::Zero(n);
  params.v = Eigen::MatrixXd::Zero(n, 8);
  for (int i = 0; i < n; ++i) params.q(i) = rng.next_gaussian();
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 8; ++f) params.v(i, f) = rng.next_gaussian();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fm_to_qubo(params));
  }
}
BENCHMARK(BM_FmToQubo)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
