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

#include "fmsa/fm.hpp"

#include <cmath>
#include <string>

#include "fmsa/errors.hpp"
#include "fmsa/rng.hpp"

namespace fmsa {

void validate(const FmParams& params) {
  if (params.v.rows() != params.q.size()) {
    throw DimensionError("FmParams: v must have one row per variable");
  }
  if (params.q.size() < 1 || params.v.cols() < 1) {
    throw DimensionError("FmParams: empty parameter set");
  }
  if (!std::isfinite(params.c) || !params.q.allFinite() || !params.v.allFinite()) {
    throw Error("FmParams: non-finite parameter");
  }
}

void validate(const TrainConfig& cfg) {
  if (cfg.learning_rate <= 0.0) throw ConfigError("TrainConfig: learning_rate must be > 0");
  if (cfg.max_updates < 1) throw ConfigError("TrainConfig: max_updates must be >= 1");
  if (cfg.adam_beta1 < 0.0 || cfg.adam_beta1 >= 1.0 || cfg.adam_beta2 < 0.0 ||
      cfg.adam_beta2 >= 1.0) {
    throw ConfigError("TrainConfig: Adam betas must lie in [0, 1)");
  }
  if (cfg.adam_eps <= 0.0) throw ConfigError("TrainConfig: adam_eps must be > 0");
}

double fm_predict(std::span<const std::uint8_t> x, const FmParams& params) {
  const int n = params.n_vars();
  const int k = params.rank();
  if (static_cast<int>(x.size()) != n) {
    throw DimensionError("fm_predict: bit vector length does not match N");
  }
  double y = params.c;
  // Pairwise term via 0.5 * sum_f [(sum_i v_if x_i)^2 - sum_i v_if^2 x_i],
  // which is O(N k) instead of O(N^2 k).
  double quad = 0.0;
  for (int f = 0; f < k; ++f) {
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
      if (!x[i]) continue;
      const double vif = params.v(i, f);
      s += vif;
      s2 += vif * vif;
    }
    quad += s * s - s2;
  }
  for (int i = 0; i < n; ++i) {
    if (x[i]) y += params.q(i);
  }
  return y + 0.5 * quad;
}

QuboMatrix fm_to_qubo(const FmParams& params) {
  validate(params);
  const int n = params.n_vars();
  QuboMatrix q(n);
  q.constant = params.c;
  for (int i = 0; i < n; ++i) {
    q.at(i, i) = params.q(i);
    for (int j = i + 1; j < n; ++j) {
      q.at(i, j) = params.v.row(i).dot(params.v.row(j));
    }
  }
  return q;
}

FmGradient fm_gradient(const FmParams& params, std::span<const std::uint8_t> x,
                       double residual) {
  const int n = params.n_vars();
  const int k = params.rank();
  if (static_cast<int>(x.size()) != n) {
    throw DimensionError("fm_gradient: bit vector length does not match N");
  }
  FmGradient g;
  g.dc = residual;
  g.dq = Eigen::VectorXd::Zero(n);
  g.dv = Eigen::MatrixXd::Zero(n, k);
  Eigen::VectorXd p = Eigen::VectorXd::Zero(k);  // p_f = sum_j v_jf x_j
  for (int i = 0; i < n; ++i) {
    if (x[i]) p += params.v.row(i).transpose();
  }
  for (int i = 0; i < n; ++i) {
    if (!x[i]) continue;
    g.dq(i) = residual;
    g.dv.row(i) = residual * (p.transpose() - params.v.row(i));
  }
  return g;
}

namespace {

using RowMajorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct AdamState {
  double t = 0.0;
  double b1t = 1.0, b2t = 1.0;  // beta1^t, beta2^t
  double mc = 0.0, uc = 0.0;
  Eigen::VectorXd mq, uq;
  RowMajorMatrix mv, uv;
};

void adam_step(double& c, Eigen::VectorXd& q, RowMajorMatrix& v, double gc,
               const Eigen::VectorXd& gq, const RowMajorMatrix& gv,
               const TrainConfig& cfg, AdamState& st) {
  st.t += 1.0;
  st.b1t *= cfg.adam_beta1;
  st.b2t *= cfg.adam_beta2;
  const double c1 = 1.0 - cfg.adam_beta1;
  const double c2 = 1.0 - cfg.adam_beta2;
  const double mscale = 1.0 / (1.0 - st.b1t);
  const double uscale = 1.0 / (1.0 - st.b2t);
  const double lr = cfg.learning_rate;
  const double eps = cfg.adam_eps;

  st.mc = cfg.adam_beta1 * st.mc + c1 * gc;
  st.uc = cfg.adam_beta2 * st.uc + c2 * gc * gc;
  c -= lr * (st.mc * mscale) / (std::sqrt(st.uc * uscale) + eps);

  st.mq = cfg.adam_beta1 * st.mq + c1 * gq;
  st.uq = cfg.adam_beta2 * st.uq + c2 * gq.cwiseProduct(gq);
  q.array() -= lr * (st.mq.array() * mscale) / ((st.uq.array() * uscale).sqrt() + eps);

  st.mv = cfg.adam_beta1 * st.mv + c1 * gv;
  st.uv = cfg.adam_beta2 * st.uv + c2 * gv.cwiseProduct(gv);
  v.array() -= lr * (st.mv.array() * mscale) / ((st.uv.array() * uscale).sqrt() + eps);
}

}  // namespace

FmParams train_fm(std::span<const TrainingSample> samples, int rank,
                  const TrainConfig& cfg, std::uint64_t rng_seed,
                  TrainStats* stats, const std::optional<FmParams>& init) {
  validate(cfg);
  if (samples.empty()) throw ConfigError("train_fm: empty sample set");
  if (rank < 1) throw ConfigError("train_fm: rank must be positive");
  const int n = static_cast<int>(samples[0].bits.size());
  if (n < 1) throw ConfigError("train_fm: zero-length bit vectors");

  // Samples are sparse 0/1 rows; keep only the active indices.
  const int m = static_cast<int>(samples.size());
  std::vector<std::vector<int>> active(m);
  Eigen::VectorXd targets(m);
  for (int s = 0; s < m; ++s) {
    if (static_cast<int>(samples[s].bits.size()) != n) {
      throw DimensionError("train_fm: inconsistent bit vector lengths");
    }
    if (!std::isfinite(samples[s].cost)) throw Error("train_fm: non-finite cost");
    targets(s) = samples[s].cost;
    for (int i = 0; i < n; ++i) {
      if (samples[s].bits[i]) active[s].push_back(i);
    }
  }

  double c = 0.0;
  Eigen::VectorXd q = Eigen::VectorXd::Zero(n);
  RowMajorMatrix v(n, rank);
  if (init.has_value()) {
    validate(*init);
    if (init->n_vars() != n || init->rank() != rank) {
      throw DimensionError("train_fm: warm-start shape mismatch");
    }
    c = init->c;
    q = init->q;
    v = init->v;
  } else {
    Rng rng(rng_seed);
    for (int i = 0; i < n; ++i) {
      for (int f = 0; f < rank; ++f) v(i, f) = 0.01 * rng.next_gaussian();
    }
  }

  AdamState st;
  st.mq = Eigen::VectorXd::Zero(n);
  st.uq = Eigen::VectorXd::Zero(n);
  st.mv = RowMajorMatrix::Zero(n, rank);
  st.uv = RowMajorMatrix::Zero(n, rank);

  Eigen::VectorXd p(rank);
  Eigen::VectorXd gq(n);
  RowMajorMatrix gv(n, rank);
  double mse = 0.0;
  int updates = 0;
  const double grad_scale = 2.0 / m;  // d/dtheta of (1/m) sum r^2

  for (;;) {
    double gc = 0.0;
    gq.setZero();
    gv.setZero();
    double sq_err = 0.0;
    for (int s = 0; s < m; ++s) {
      p.setZero();
      double s2 = 0.0;
      double lin = 0.0;
      for (const int i : active[s]) {
        p += v.row(i).transpose();
        s2 += v.row(i).squaredNorm();
        lin += q(i);
      }
      const double pred = c + lin + 0.5 * (p.squaredNorm() - s2);
      const double r = pred - targets(s);
      sq_err += r * r;
      gc += r;
      for (const int i : active[s]) {
        gq(i) += r;
        gv.row(i) += r * (p.transpose() - v.row(i));
      }
    }
    mse = sq_err / m;
    if (mse <= cfg.target_mse || updates >= cfg.max_updates) break;
    adam_step(c, q, v, grad_scale * gc, (grad_scale * gq).eval(),
              (grad_scale * gv).eval(), cfg, st);
    ++updates;
  }

  FmParams params;
  params.c = c;
  params.q = std::move(q);
  params.v = v;
  if (stats != nullptr) {
    stats->final_mse = mse;
    stats->updates = updates;
  }
  return params;
}

}  // namespace fmsa
