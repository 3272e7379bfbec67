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
#include <string>
#include <vector>

#include "fmsa/qubo.hpp"

namespace fmsa {

enum class Encoding { kBinary, kOneHot, kDomainWall };

const char* encoding_name(Encoding e);
Encoding encoding_from_name(const std::string& name);

/// How integers map onto bits. Bit vectors concatenate L slices of d bits
/// each, one slice per integer variable; slices are stored lowest index
/// first within each variable.
///
/// Representable range per variable:
///   binary       [-2^(d-1), 2^(d-1) - 1]   (two's complement, no n0)
///   one-hot      [n0, n0 + d - 1]          (exactly one active bit)
///   domain-wall  [n0, n0 + d]              (active prefix, then inactive)
struct CodecSpec {
  Encoding kind = Encoding::kBinary;
  int d = 1;       // bits per integer variable
  long n0 = 0;     // range offset; unused for binary
  int L = 1;       // number of integer variables
  double p = 0.0;  // penalty coefficient; forced to 0 for binary

  int total_bits() const { return L * d; }
  long min_value() const;
  long max_value() const;
  /// 2^d (binary), d (one-hot) or d+1 (domain-wall).
  long values_per_variable() const;

  static CodecSpec binary(int d, int L);
  static CodecSpec one_hot(int d, long n0, int L, double p);
  static CodecSpec domain_wall(int d, long n0, int L, double p);
};

/// Throws ConfigError on invalid field combinations.
void validate(const CodecSpec& spec);

struct IntegerPoint {
  std::vector<long> values;

  IntegerPoint() = default;
  explicit IntegerPoint(std::vector<long> v) : values(std::move(v)) {}
  bool operator==(const IntegerPoint&) const = default;
};

// Single-variable decoders. Bit order is (x_0, ..., x_{d-1}).

/// Two's complement: x_0 + 2 x_1 + ... + 2^(d-2) x_{d-2} - 2^(d-1) x_{d-1}.
/// Every bit pattern is feasible.
long decode_binary(std::span<const std::uint8_t> bits);

/// n0 + index of the single active bit. Throws InfeasibleError unless
/// exactly one bit is active.
long decode_onehot(std::span<const std::uint8_t> bits, long n0);

/// n0 + number of active bits, for patterns of the form 1...10...0.
/// Throws InfeasibleError if an inactive bit precedes an active one.
long decode_domainwall(std::span<const std::uint8_t> bits, long n0);

/// Encodes one integer into d bits; inverse of the matching decoder.
/// Throws RangeError if n is outside the representable range.
BitVec encode(long n, const CodecSpec& spec);

/// Encodes all L values, concatenated slice-wise.
BitVec encode_point(const IntegerPoint& point, const CodecSpec& spec);

/// True iff every variable slice satisfies its encoding constraint
/// (binary is unconstrained). Throws DimensionError on length mismatch.
bool is_feasible(std::span<const std::uint8_t> bits, const CodecSpec& spec);

/// Slice-wise decode of a full L*d bit vector. Infeasible slices raise
/// InfeasibleError carrying the offending variable index.
IntegerPoint decode_point(std::span<const std::uint8_t> bits, const CodecSpec& spec);

/// Constraint violation cost in QUBO form, summed over all L variables and
/// excluding the penalty coefficient p (the engine applies it):
///   one-hot:      sum_l (sum_i x_i - 1)^2
///   domain-wall:  2 sum_l (sum_{i>=1} x_i - sum_i x_i x_{i+1})
///   binary:       zero matrix
/// Constants from expanding the squares live in the matrix's `constant`
/// field, so violation cost = qubo_energy(C, x) + C.constant; it is zero
/// exactly on feasible bit vectors.
QuboMatrix constraint_qubo(const CodecSpec& spec);

/// Renders one d-bit slice the way the encoding tables are conventionally
/// printed: binary most-significant bit (x_{d-1}) first, one-hot and
/// domain-wall x_0 first.
std::string format_bits(std::span<const std::uint8_t> bits, Encoding kind);

}  // namespace fmsa
