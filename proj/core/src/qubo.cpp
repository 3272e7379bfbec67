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

#include "fmsa/qubo.hpp"

#include <cmath>
#include <string>

#include "fmsa/errors.hpp"

namespace fmsa {

void validate(const QuboMatrix& q) {
  if (q.coeffs.rows() != q.n_vars || q.coeffs.cols() != q.n_vars) {
    throw DimensionError("QuboMatrix: coeffs shape does not match n_vars");
  }
  if (!std::isfinite(q.constant)) throw Error("QuboMatrix: non-finite constant");
  for (int j = 0; j < q.n_vars; ++j) {
    for (int i = 0; i < q.n_vars; ++i) {
      const double v = q.coeffs(i, j);
      if (!std::isfinite(v)) throw Error("QuboMatrix: non-finite coefficient");
      if (i > j && v != 0.0) {
        throw Error("QuboMatrix: nonzero entry below the diagonal at (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

double max_abs_coeff(const QuboMatrix& q) {
  return q.n_vars == 0 ? 0.0 : q.coeffs.cwiseAbs().maxCoeff();
}

QuboMatrix normalize_qubo(const QuboMatrix& q) {
  const double scale = max_abs_coeff(q);
  if (scale == 0.0) return q;
  QuboMatrix out = q;
  out.coeffs /= scale;
  out.constant /= scale;
  return out;
}

double qubo_energy(const QuboMatrix& q, std::span<const std::uint8_t> x) {
  if (static_cast<int>(x.size()) != q.n_vars) {
    throw DimensionError("qubo_energy: bit vector length does not match n_vars");
  }
  double e = 0.0;
  for (int j = 0; j < q.n_vars; ++j) {
    if (!x[j]) continue;
    double col = q.coeffs(j, j);
    for (int i = 0; i < j; ++i) {
      if (x[i]) col += q.coeffs(i, j);
    }
    e += col;
  }
  return e;
}

double delta_energy(const QuboMatrix& q, std::span<const std::uint8_t> x, int i) {
  if (static_cast<int>(x.size()) != q.n_vars) {
    throw DimensionError("delta_energy: bit vector length does not match n_vars");
  }
  if (i < 0 || i >= q.n_vars) throw DimensionError("delta_energy: index out of range");
  // Local field of bit i: everything in E(x) multiplying x_i.
  double field = q.coeffs(i, i);
  for (int j = 0; j < i; ++j) {
    if (x[j]) field += q.coeffs(j, i);
  }
  for (int j = i + 1; j < q.n_vars; ++j) {
    if (x[j]) field += q.coeffs(i, j);
  }
  return x[i] ? -field : field;
}

void add_scaled(QuboMatrix& dst, const QuboMatrix& src, double factor) {
  if (dst.n_vars != src.n_vars) {
    throw DimensionError("add_scaled: size mismatch");
  }
  dst.coeffs += factor * src.coeffs;
  dst.constant += factor * src.constant;
}

}  // namespace fmsa
