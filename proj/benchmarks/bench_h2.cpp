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

#include "fmsa/h2.hpp"
#include "fmsa/rng.hpp"

namespace {

using namespace fmsa;
using namespace fmsa::h2;

// Uncached integral build; the per-geometry cost the cache avoids.
void BM_IntegralBuild(benchmark::State& state) {
  const ContractedGaussian basis = load_basis_file(default_basis_file());
  double r = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_integrals(r, basis));
    r += 1e-9;
  }
}
BENCHMARK(BM_IntegralBuild)->Unit(benchmark::kMicrosecond);

void BM_BuildHamiltonian(benchmark::State& state) {
  const MolecularIntegrals ints = sto3g_integrals(0.7414);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_hamiltonian(ints));
  }
}
BENCHMARK(BM_BuildHamiltonian)->Unit(benchmark::kMicrosecond);

// The black box itself: one cost evaluation of an integer point.
void BM_BlackboxEval(benchmark::State& state) {
  const H2Problem problem(0.7414, 2);
  Rng rng(31);
  for (auto _ : state) {
    long a = static_cast<long>(rng.next_below(64)) - 32;
    const long b = static_cast<long>(rng.next_below(64)) - 32;
    if (a == 0 && b == 0) a = 1;
    benchmark::DoNotOptimize(problem.evaluate(IntegerPoint({a, b})));
  }
}
BENCHMARK(BM_BlackboxEval);

void BM_FciEnergy(benchmark::State& state) {
  const FockHamiltonian h = build_hamiltonian(sto3g_integrals(0.7414));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fci_energy(h));
  }
}
BENCHMARK(BM_FciEnergy);

}  // namespace

BENCHMARK_MAIN();
