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
#include <span>
#include <vector>

#include <Eigen/Core>

namespace fmsa {

using BitVec = std::vector<std::uint8_t>;

/// Quadratic form over bit vectors: E(x) = sum_{i<=j} Q(i,j) x_i x_j.
/// Upper triangular by construction; the diagonal holds the linear terms
/// (x_i^2 = x_i). `constant` is carried through transformations but ignored
/// by optimization.
struct QuboMatrix {
  int n_vars = 0;
  Eigen::MatrixXd coeffs;
  double constant = 0.0;

  QuboMatrix() = default;
  explicit QuboMatrix(int n)
      : n_vars(n), coeffs(Eigen::MatrixXd::Zero(n, n)) {}

  double& at(int i, int j) { return coeffs(i, j); }
  double at(int i, int j) const { return coeffs(i, j); }
};

/// Throws DimensionError/Error if the matrix is not square upper-triangular
/// with finite entries.
void validate(const QuboMatrix& q);

double max_abs_coeff(const QuboMatrix& q);

/// Rescales every coefficient (and the carried constant) by
/// 1 / max|Q(i,j)|, so the largest coefficient magnitude becomes exactly 1.
/// An all-zero matrix is returned unchanged. Idempotent, and the argmin set
/// of the energy is unchanged.
QuboMatrix normalize_qubo(const QuboMatrix& q);

/// E(x) = sum_{i<=j} Q(i,j) x_i x_j; the constant is excluded.
double qubo_energy(const QuboMatrix& q, std::span<const std::uint8_t> x);

/// Energy change from flipping bit i, in O(n_vars) without recomputing the
/// full sum.
double delta_energy(const QuboMatrix& q, std::span<const std::uint8_t> x, int i);

/// dst += factor * src (coefficients and constant). Shapes must match.
void add_scaled(QuboMatrix& dst, const QuboMatrix& src, double factor);

}  // namespace fmsa
