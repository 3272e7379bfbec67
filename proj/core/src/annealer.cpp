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

#include <bit>
#include <cmath>
#include <numeric>

#include <Eigen/Core>

#include "fmsa/errors.hpp"
#include "fmsa/parallel.hpp"

namespace fmsa {

void validate(const AnnealSchedule& schedule) {
  if (!(schedule.beta_initial > 0.0)) {
    throw ConfigError("AnnealSchedule: beta_initial must be positive");
  }
  if (schedule.beta_initial > schedule.beta_final) {
    throw ConfigError("AnnealSchedule: beta_initial must not exceed beta_final");
  }
  if (schedule.n_steps < 1 || schedule.sweeps_per_step < 1) {
    throw ConfigError("AnnealSchedule: step counts must be positive");
  }
}

std::vector<double> beta_steps(const AnnealSchedule& schedule) {
  validate(schedule);
  std::vector<double> betas(schedule.n_steps);
  if (schedule.n_steps == 1) {
    betas[0] = schedule.beta_final;
    return betas;
  }
  const double ratio = schedule.beta_final / schedule.beta_initial;
  const double denom = schedule.n_steps - 1;
  for (int t = 0; t < schedule.n_steps; ++t) {
    betas[t] = schedule.beta_initial * std::pow(ratio, t / denom);
  }
  betas.front() = schedule.beta_initial;
  betas.back() = schedule.beta_final;
  return betas;
}

double delta_h_upper(const CodecSpec& spec) {
  const double ld = static_cast<double>(spec.L) * spec.d;
  switch (spec.kind) {
    case Encoding::kBinary:
      return ld;
    case Encoding::kOneHot:
      if (spec.d < 2) {
        throw ConfigError("delta_h_upper: one-hot bound requires d >= 2");
      }
      return ld + spec.p * (2.0 * spec.d - 3.0);
    case Encoding::kDomainWall:
      return ld + 2.0 * spec.p;
  }
  throw ConfigError("delta_h_upper: unknown encoding");
}

double initial_beta(const CodecSpec& spec) { return 1.0 / delta_h_upper(spec); }

double heat_bath_probability(double beta, double e1_minus_e0) {
  if (beta < 0.0) throw ConfigError("heat_bath_probability: beta must be >= 0");
  // exp saturates to +inf / 0 for large |arguments|, giving exactly 0 / 1.
  return 1.0 / (1.0 + std::exp(beta * e1_minus_e0));
}

namespace {

// Dense mirror of the QUBO for the sweep loop: zero-diagonal symmetric
// coupling matrix (row-major) plus the linear terms. Built once per batch
// and shared read-only across runs.
struct DenseQubo {
  int n = 0;
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> sym;
  Eigen::VectorXd lin;

  explicit DenseQubo(const QuboMatrix& q) : n(q.n_vars), sym(q.n_vars, q.n_vars), lin(q.n_vars) {
    sym.setZero();
    for (int i = 0; i < n; ++i) {
      lin(i) = q.coeffs(i, i);
      for (int j = i + 1; j < n; ++j) {
        sym(i, j) = q.coeffs(i, j);
        sym(j, i) = q.coeffs(i, j);
      }
    }
  }
};

// Beyond this, 1/(1+exp(x)) is below the 2^-53 resolution of the uniform
// draw; short-circuit both the exp and the draw.
constexpr double kSaturation = 40.0;

// exp(x) for |x| < kSaturation, relative error ~1e-12: table-driven
// 2^(n/32) reduction with a degree-4 polynomial on the residual. A sweep
// spends half its time here, which rules out libm's exp.
constexpr double kExpTable[32] = {
    1.0, 1.0218971486541166, 1.0442737824274138, 1.0671404006768237,
    1.0905077326652577, 1.1143867425958924, 1.1387886347566916, 1.1637248587775775,
    1.189207115002721, 1.215247359980469, 1.241857812073484, 1.2690509571917332,
    1.2968395546510096, 1.3252366431597413, 1.3542555469368927, 1.383909881963832,
    1.4142135623730951, 1.4451808069770467, 1.4768261459394993, 1.5091644275934228,
    1.5422108254079407, 1.5759808451078865, 1.6104903319492543, 1.645755478153965,
    1.681792830507429, 1.718619298122478, 1.7562521603732995, 1.7947090750031072,
    1.8340080864093424, 1.8741676341103, 1.9152065613971474, 1.9571441241754002,
};

inline double fast_exp(double x) {
  constexpr double kInvLn2_32 = 46.16624130844683;
  constexpr double kLn2_32Hi = 0.02166084939249829;
  constexpr double kLn2_32Lo = 7.247021293269686e-19;
  constexpr double kRoundShift = 0x1.8p52;
  const double z = x * kInvLn2_32 + kRoundShift;
  const auto n = static_cast<std::int32_t>(std::bit_cast<std::int64_t>(z));
  const double kd = z - kRoundShift;
  const double r = (x - kd * kLn2_32Hi) - kd * kLn2_32Lo;
  const int i = n & 31;
  const std::int64_t m = (n - i) / 32;
  const double r2 = r * r;
  const double p = 1.0 + r + r2 * (0.5 + r * (1.0 / 6.0) + r2 * (1.0 / 24.0));
  const double y = kExpTable[i] * p;
  return std::bit_cast<double>(std::bit_cast<std::int64_t>(y) + (m << 52));
}

void anneal_one(const DenseQubo& dq, const std::vector<double>& betas,
                int sweeps_per_step, Rng& rng, BitVec& x,
                const SweepObserver& observer) {
  const int n = dq.n;
  x.resize(n);
  for (auto& bit : x) bit = rng.next_bit() ? 1 : 0;

  // Local fields: h_i = lin_i + sum_j sym_ij x_j, maintained incrementally.
  Eigen::VectorXd h = dq.lin;
  for (int j = 0; j < n; ++j) {
    if (x[j]) h += dq.sym.row(j).transpose();
  }
  double* const fields = h.data();
  const double* const sym = dq.sym.data();

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);

  // Once a sweep sees every bit saturated and flips nothing, the state is a
  // deterministic fixed point of every later (colder) sweep, so the rest of
  // the schedule is an identity map and can be skipped. Never taken when an
  // observer wants per-sweep statistics.
  bool frozen = false;

  for (const double beta : betas) {
    for (int sweep = 0; sweep < sweeps_per_step && !frozen; ++sweep) {
      // Fisher-Yates for a fresh visiting order.
      for (int i = n - 1; i > 0; --i) {
        const std::uint32_t j = rng.next_below(static_cast<std::uint32_t>(i) + 1);
        std::swap(order[i], order[j]);
      }
      int flips = 0;
      bool all_saturated = true;
      for (const std::uint32_t i : order) {
        const double scaled = beta * fields[i];
        std::uint8_t next;
        if (scaled >= kSaturation) {
          next = 0;
        } else if (scaled <= -kSaturation) {
          next = 1;
        } else {
          all_saturated = false;
          next = rng.next_double() < 1.0 / (1.0 + fast_exp(scaled)) ? 1 : 0;
        }
        if (next != x[i]) {
          ++flips;
          const double* const row = sym + static_cast<std::size_t>(i) * n;
          if (next) {
            for (int j = 0; j < n; ++j) fields[j] += row[j];
          } else {
            for (int j = 0; j < n; ++j) fields[j] -= row[j];
          }
          x[i] = next;
        }
      }
      if (observer) {
        observer(std::span<const std::uint8_t>(x.data(), x.size()));
      } else if (all_saturated && flips == 0) {
        frozen = true;
      }
    }
    if (frozen) break;
  }
}

}  // namespace

BitVec run_sa(const QuboMatrix& q, const AnnealSchedule& schedule, Rng& rng,
              const SweepObserver& observer) {
  const DenseQubo dq(q);
  const std::vector<double> betas = beta_steps(schedule);
  BitVec x;
  anneal_one(dq, betas, schedule.sweeps_per_step, rng, x, observer);
  return x;
}

std::vector<BitVec> sample_batch(const QuboMatrix& q, const AnnealSchedule& schedule,
                                 const SaBatchConfig& cfg, int workers) {
  if (cfg.n_samples < 1) throw ConfigError("sample_batch: n_samples must be >= 1");
  const DenseQubo dq(q);
  const std::vector<double> betas = beta_steps(schedule);
  std::vector<BitVec> out(cfg.n_samples);
  parallel_for(cfg.n_samples, workers, [&](std::size_t i) {
    Rng rng(derive_seed(cfg.rng_seed, i));
    anneal_one(dq, betas, schedule.sweeps_per_step, rng, out[i], {});
  });
  return out;
}

}  // namespace fmsa
