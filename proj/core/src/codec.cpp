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

#include "fmsa/codec.hpp"

#include <algorithm>

#include "fmsa/errors.hpp"

namespace fmsa {

const char* encoding_name(Encoding e) {
  switch (e) {
    case Encoding::kBinary: return "binary";
    case Encoding::kOneHot: return "one-hot";
    case Encoding::kDomainWall: return "domain-wall";
  }
  return "?";
}

Encoding encoding_from_name(const std::string& name) {
  if (name == "binary") return Encoding::kBinary;
  if (name == "one-hot" || name == "onehot") return Encoding::kOneHot;
  if (name == "domain-wall" || name == "domainwall") return Encoding::kDomainWall;
  throw ConfigError("unknown encoding: " + name);
}

long CodecSpec::min_value() const {
  switch (kind) {
    case Encoding::kBinary: return -(1L << (d - 1));
    default: return n0;
  }
}

long CodecSpec::max_value() const {
  switch (kind) {
    case Encoding::kBinary: return (1L << (d - 1)) - 1;
    case Encoding::kOneHot: return n0 + d - 1;
    case Encoding::kDomainWall: return n0 + d;
  }
  return 0;
}

long CodecSpec::values_per_variable() const {
  switch (kind) {
    case Encoding::kBinary: return 1L << d;
    case Encoding::kOneHot: return d;
    case Encoding::kDomainWall: return d + 1;
  }
  return 0;
}

CodecSpec CodecSpec::binary(int d, int L) {
  CodecSpec s{Encoding::kBinary, d, 0, L, 0.0};
  validate(s);
  return s;
}

CodecSpec CodecSpec::one_hot(int d, long n0, int L, double p) {
  CodecSpec s{Encoding::kOneHot, d, n0, L, p};
  validate(s);
  return s;
}

CodecSpec CodecSpec::domain_wall(int d, long n0, int L, double p) {
  CodecSpec s{Encoding::kDomainWall, d, n0, L, p};
  validate(s);
  return s;
}

void validate(const CodecSpec& spec) {
  if (spec.d < 1) throw ConfigError("CodecSpec: d must be positive");
  if (spec.L < 1) throw ConfigError("CodecSpec: L must be positive");
  if (spec.p < 0.0) throw ConfigError("CodecSpec: penalty must be nonnegative");
  if (spec.kind == Encoding::kBinary) {
    if (spec.d > 62) throw ConfigError("CodecSpec: binary d > 62 overflows long");
    if (spec.p != 0.0) throw ConfigError("CodecSpec: binary encoding takes no penalty");
  }
}

long decode_binary(std::span<const std::uint8_t> bits) {
  const int d = static_cast<int>(bits.size());
  if (d < 1) throw DimensionError("decode_binary: empty bit vector");
  long n = 0;
  for (int i = 0; i + 1 < d; ++i) {
    if (bits[i]) n += 1L << i;
  }
  if (bits[d - 1]) n -= 1L << (d - 1);
  return n;
}

long decode_onehot(std::span<const std::uint8_t> bits, long n0) {
  int active = -1;
  int count = 0;
  for (int i = 0; i < static_cast<int>(bits.size()); ++i) {
    if (bits[i]) {
      ++count;
      active = i;
    }
  }
  if (count != 1) {
    throw InfeasibleError("decode_onehot: expected exactly one active bit, got " +
                          std::to_string(count));
  }
  return n0 + active;
}

long decode_domainwall(std::span<const std::uint8_t> bits, long n0) {
  int ones = 0;
  bool seen_zero = false;
  for (const std::uint8_t b : bits) {
    if (b) {
      if (seen_zero) {
        throw InfeasibleError("decode_domainwall: active bit after inactive bit");
      }
      ++ones;
    } else {
      seen_zero = true;
    }
  }
  return n0 + ones;
}

BitVec encode(long n, const CodecSpec& spec) {
  if (n < spec.min_value() || n > spec.max_value()) {
    throw RangeError("encode: " + std::to_string(n) + " outside [" +
                     std::to_string(spec.min_value()) + ", " +
                     std::to_string(spec.max_value()) + "]");
  }
  BitVec bits(spec.d, 0);
  switch (spec.kind) {
    case Encoding::kBinary: {
      // Two's complement, least significant bit first.
      unsigned long u = static_cast<unsigned long>(n) & ((1ul << spec.d) - 1ul);
      for (int i = 0; i < spec.d; ++i) bits[i] = (u >> i) & 1u;
      break;
    }
    case Encoding::kOneHot:
      bits[n - spec.n0] = 1;
      break;
    case Encoding::kDomainWall:
      std::fill(bits.begin(), bits.begin() + (n - spec.n0), std::uint8_t{1});
      break;
  }
  return bits;
}

BitVec encode_point(const IntegerPoint& point, const CodecSpec& spec) {
  if (static_cast<int>(point.values.size()) != spec.L) {
    throw DimensionError("encode_point: expected " + std::to_string(spec.L) +
                         " values, got " + std::to_string(point.values.size()));
  }
  BitVec bits;
  bits.reserve(spec.total_bits());
  for (const long v : point.values) {
    const BitVec slice = encode(v, spec);
    bits.insert(bits.end(), slice.begin(), slice.end());
  }
  return bits;
}

namespace {

bool slice_feasible(std::span<const std::uint8_t> slice, Encoding kind) {
  switch (kind) {
    case Encoding::kBinary:
      return true;
    case Encoding::kOneHot: {
      int count = 0;
      for (const std::uint8_t b : slice) count += b;
      return count == 1;
    }
    case Encoding::kDomainWall: {
      bool seen_zero = false;
      for (const std::uint8_t b : slice) {
        if (b && seen_zero) return false;
        if (!b) seen_zero = true;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_feasible(std::span<const std::uint8_t> bits, const CodecSpec& spec) {
  if (static_cast<int>(bits.size()) != spec.total_bits()) {
    throw DimensionError("is_feasible: expected " + std::to_string(spec.total_bits()) +
                         " bits, got " + std::to_string(bits.size()));
  }
  for (int l = 0; l < spec.L; ++l) {
    if (!slice_feasible(bits.subspan(l * spec.d, spec.d), spec.kind)) return false;
  }
  return true;
}

IntegerPoint decode_point(std::span<const std::uint8_t> bits, const CodecSpec& spec) {
  if (static_cast<int>(bits.size()) != spec.total_bits()) {
    throw DimensionError("decode_point: expected " + std::to_string(spec.total_bits()) +
                         " bits, got " + std::to_string(bits.size()));
  }
  IntegerPoint point;
  point.values.reserve(spec.L);
  for (int l = 0; l < spec.L; ++l) {
    const auto slice = bits.subspan(l * spec.d, spec.d);
    try {
      switch (spec.kind) {
        case Encoding::kBinary:
          point.values.push_back(decode_binary(slice));
          break;
        case Encoding::kOneHot:
          point.values.push_back(decode_onehot(slice, spec.n0));
          break;
        case Encoding::kDomainWall:
          point.values.push_back(decode_domainwall(slice, spec.n0));
          break;
      }
    } catch (const InfeasibleError& e) {
      throw InfeasibleError("variable " + std::to_string(l) + ": " + e.what(), l);
    }
  }
  return point;
}

QuboMatrix constraint_qubo(const CodecSpec& spec) {
  QuboMatrix q(spec.total_bits());
  switch (spec.kind) {
    case Encoding::kBinary:
      break;
    case Encoding::kOneHot:
      // (sum_i x_i - 1)^2 = sum_i x_i + 2 sum_{i<j} x_i x_j - 2 sum_i x_i + 1
      for (int l = 0; l < spec.L; ++l) {
        const int base = l * spec.d;
        for (int i = 0; i < spec.d; ++i) {
          q.at(base + i, base + i) = -1.0;
          for (int j = i + 1; j < spec.d; ++j) q.at(base + i, base + j) = 2.0;
        }
        q.constant += 1.0;
      }
      break;
    case Encoding::kDomainWall:
      // 2 (sum_{i=1}^{d-1} x_i - sum_{i=0}^{d-2} x_i x_{i+1})
      for (int l = 0; l < spec.L; ++l) {
        const int base = l * spec.d;
        for (int i = 1; i < spec.d; ++i) q.at(base + i, base + i) = 2.0;
        for (int i = 0; i + 1 < spec.d; ++i) q.at(base + i, base + i + 1) = -2.0;
      }
      break;
  }
  return q;
}

std::string format_bits(std::span<const std::uint8_t> bits, Encoding kind) {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const std::size_t pos = kind == Encoding::kBinary ? bits.size() - 1 - i : i;
    if (bits[i]) s[pos] = '1';
  }
  return s;
}

}  // namespace fmsa
