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
#include <span>
#include <vector>

#include <Eigen/Core>

#include "fmsa/qubo.hpp"

namespace fmsa {

/// Degree-2 factorization machine over N binary variables:
///
///   y(x) = c + sum_i q_i x_i + sum_{i<j} <v_i, v_j> x_i x_j
///
/// where v_i is row i of `v` and the rank k bounds the expressiveness of the
/// pairwise coefficients.
struct FmParams {
  double c = 0.0;
  Eigen::VectorXd q;  // N linear weights
  Eigen::MatrixXd v;  // N x k factor matrix

  int n_vars() const { return static_cast<int>(q.size()); }
  int rank() const { return static_cast<int>(v.cols()); }
};

void validate(const FmParams& params);

struct TrainConfig {
  double learning_rate = 0.01;
  int max_updates = 2000;
  double target_mse = 1e-8;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
};

void validate(const TrainConfig& cfg);

struct TrainingSample {
  BitVec bits;
  double cost = 0.0;
};

struct TrainStats {
  double final_mse = 0.0;
  int updates = 0;
};

double fm_predict(std::span<const std::uint8_t> x, const FmParams& params);

/// The same quadratic as fm_predict in explicit QUBO form: diagonal q_i,
/// off-diagonal <v_i, v_j>, constant c.
QuboMatrix fm_to_qubo(const FmParams& params);

struct FmGradient {
  double dc = 0.0;
  Eigen::VectorXd dq;
  Eigen::MatrixXd dv;
};

/// Gradient of the single-sample squared-error loss 0.5 * residual^2 with
/// residual = fm_predict(x) - target.
FmGradient fm_gradient(const FmParams& params, std::span<const std::uint8_t> x,
                       double residual);

/// Full-batch Adam on the mean squared error. Runs until the MSE drops to
/// cfg.target_mse or cfg.max_updates updates have been applied. Parameters
/// start from c = 0, q = 0 and v ~ N(0, 0.01^2) drawn from the seeded
/// stream, so identical inputs give bit-identical results. Pass `init` to
/// warm-start from existing parameters instead.
FmParams train_fm(std::span<const TrainingSample> samples, int rank,
                  const TrainConfig& cfg, std::uint64_t rng_seed,
                  TrainStats* stats = nullptr,
                  const std::optional<FmParams>& init = std::nullopt);

}  // namespace fmsa
