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

#include "fmsa/annealer.hpp"

#include <cmath>
#include <map>

#include "doctest.h"
#include "fmsa/engine.hpp"
#include "fmsa/errors.hpp"
#include "support/oracles.hpp"

using namespace fmsa;

TEST_SUITE_BEGIN("annealer");

TEST_CASE("beta schedule is geometric with exact endpoints") {
  AnnealSchedule s{0.001, 100.0, 100, 1};
  const std::vector<double> betas = beta_steps(s);
  REQUIRE(betas.size() == 100);
  CHECK(betas.front() == 0.001);
  CHECK(betas.back() == 100.0);
  const double ratio = betas[1] / betas[0];
  for (std::size_t t = 1; t + 1 < betas.size(); ++t) {
    CHECK(std::abs(betas[t + 1] / betas[t] - ratio) <= 1e-12 * ratio);
  }
}

TEST_CASE("degenerate schedules") {
  CHECK(beta_steps(AnnealSchedule{2.0, 2.0, 1, 5}) == std::vector<double>{2.0});
  CHECK(beta_steps(AnnealSchedule{2.0, 2.0, 3, 5}) ==
        std::vector<double>{2.0, 2.0, 2.0});
  CHECK_THROWS_AS(beta_steps(AnnealSchedule{0.0, 1.0, 2, 1}), ConfigError);
  CHECK_THROWS_AS(beta_steps(AnnealSchedule{2.0, 1.0, 2, 1}), ConfigError);
}

TEST_CASE("initial inverse temperature from the single-flip bound") {
  CHECK(initial_beta(CodecSpec::binary(8, 2)) == 1.0 / 16.0);
  CHECK(initial_beta(CodecSpec::one_hot(64, -32, 2, 1000.0)) == 1.0 / 125128.0);
  CHECK(initial_beta(CodecSpec::domain_wall(63, -32, 2, 1000.0)) == 1.0 / 2126.0);
  CHECK_THROWS_AS(initial_beta(CodecSpec::one_hot(1, 0, 2, 10.0)), ConfigError);
}

TEST_CASE("heat-bath probability") {
  CHECK(heat_bath_probability(0.0, 123.4) == 0.5);
  CHECK(heat_bath_probability(3.0, 0.0) == 0.5);
  CHECK(heat_bath_probability(1.0, 1e6) == 0.0);
  CHECK(heat_bath_probability(1.0, -1e6) == 1.0);
  CHECK(heat_bath_probability(1.0, 1.0) ==
        doctest::Approx(1.0 / (1.0 + std::exp(1.0))).epsilon(1e-15));
  CHECK_THROWS_AS(heat_bath_probability(-1.0, 0.0), ConfigError);
}

TEST_CASE("an all-positive diagonal anneals to the all-zero state") {
  QuboMatrix q(16);
  for (int i = 0; i < 16; ++i) q.at(i, i) = 1.0;
  const AnnealSchedule schedule{1.0 / 16.0, 100.0, 100, 100};
  int hits = 0;
  for (int run = 0; run < 100; ++run) {
    Rng rng(derive_seed(424242, run));
    const BitVec x = run_sa(q, schedule, rng);
    if (x == BitVec(16, 0)) ++hits;
  }
  CHECK(hits >= 99);
}

TEST_CASE("a zero QUBO leaves the state uniform") {
  const QuboMatrix q(4);
  const AnnealSchedule schedule{1.0, 100.0, 2, 2};
  std::map<int, int> counts;
  const int runs = 10000;
  for (int run = 0; run < runs; ++run) {
    Rng rng(derive_seed(777, run));
    const BitVec x = run_sa(q, schedule, rng);
    int state = 0;
    for (int i = 0; i < 4; ++i) state |= x[i] << i;
    ++counts[state];
  }
  // Chi-square against uniform over 16 cells; 37.7 is the 0.1% tail of
  // chi2(15).
  const double expected = runs / 16.0;
  double chi2 = 0.0;
  for (int s = 0; s < 16; ++s) {
    const double diff = counts[s] - expected;
    chi2 += diff * diff / expected;
  }
  CHECK(chi2 < 37.7);
}

TEST_CASE("solution quality against exhaustive enumeration") {
  int hits = 0;
  const int n = 12;
  const AnnealSchedule schedule{1.0 / n, 100.0, 100, 100};
  for (int instance = 0; instance < 25; ++instance) {
    Rng gen(derive_seed(9001, instance));
    const QuboMatrix q = test::random_qubo(n, gen);
    const double best = test::brute_force_minimum(q);
    Rng rng(derive_seed(9002, instance));
    const BitVec x = run_sa(q, schedule, rng);
    if (qubo_energy(q, x) <= best + 1e-12) ++hits;
  }
  CHECK(hits >= 23);
}

TEST_CASE("fixed-temperature statistics match Boltzmann weights") {
  // Three variables, fixed beta = 1: the sweep chain's long-run state
  // frequencies must match exp(-E) / Z within 2% total variation.
  Rng gen(31);
  const QuboMatrix q = test::random_qubo(3, gen);
  const double beta = 1.0;

  double z = 0.0;
  std::array<double, 8> boltzmann{};
  for (int s = 0; s < 8; ++s) {
    boltzmann[s] = std::exp(-beta * test::direct_energy(q, test::bits_from_index(s, 3)));
    z += boltzmann[s];
  }
  for (auto& w : boltzmann) w /= z;

  std::array<long, 8> counts{};
  long sweeps = 0;
  const auto observer = [&](std::span<const std::uint8_t> x) {
    int state = 0;
    for (int i = 0; i < 3; ++i) state |= x[i] << i;
    ++counts[state];
    ++sweeps;
  };
  const AnnealSchedule schedule{beta, beta, 1, 1000000};
  Rng rng(32);
  run_sa(q, schedule, rng, observer);
  REQUIRE(sweeps == 1000000);

  double tv = 0.0;
  for (int s = 0; s < 8; ++s) {
    tv += std::abs(static_cast<double>(counts[s]) / sweeps - boltzmann[s]);
  }
  CHECK(tv / 2.0 < 0.02);
}

TEST_CASE("batches are deterministic and worker-count independent") {
  Rng gen(41);
  const QuboMatrix q = test::random_qubo(10, gen);
  const AnnealSchedule schedule{0.1, 100.0, 20, 10};
  const SaBatchConfig cfg{12, 90210};
  const auto a = sample_batch(q, schedule, cfg);
  const auto b = sample_batch(q, schedule, cfg);
  const auto c = sample_batch(q, schedule, cfg, 4);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a.size() == 12);
  // At high temperature, final states depend on the seed.
  const AnnealSchedule hot{0.001, 0.002, 2, 1};
  CHECK(sample_batch(q, hot, SaBatchConfig{12, 90210}) !=
        sample_batch(q, hot, SaBatchConfig{12, 90211}));
}

TEST_CASE("batch of 60 on a positive diagonal is nearly all ground states") {
  QuboMatrix q(12);
  for (int i = 0; i < 12; ++i) q.at(i, i) = 1.0;
  const AnnealSchedule schedule{1.0 / 12.0, 100.0, 100, 100};
  const auto batch = sample_batch(q, schedule, SaBatchConfig{60, 5150}, 2);
  int zeros = 0;
  for (const auto& x : batch) {
    if (x == BitVec(12, 0)) ++zeros;
  }
  CHECK(zeros >= 59);
}

TEST_CASE("single-flip deltas respect the schedule bound on composed Hamiltonians") {
  // |delta E| <= delta_h_upper on surrogate-plus-penalty QUBOs, fuzzed over
  // random states and flips for each encoding.
  const CodecSpec specs[] = {
      CodecSpec::binary(8, 2),
      CodecSpec::one_hot(16, -8, 2, 50.0),
      CodecSpec::domain_wall(15, -8, 2, 50.0),
  };
  for (const auto& spec : specs) {
    Rng rng(derive_seed(606, static_cast<int>(spec.kind)));
    const FmParams params = test::random_fm(spec.total_bits(), 4, rng);
    const QuboMatrix h = compose_hamiltonian(params, spec);
    const double bound = delta_h_upper(spec);
    for (int trial = 0; trial < 10000; ++trial) {
      const BitVec x = test::random_bits(spec.total_bits(), rng);
      const int i = static_cast<int>(rng.next_below(spec.total_bits()));
      CHECK(std::abs(delta_energy(h, x, i)) <= bound);
    }
  }
}

TEST_SUITE_END();
