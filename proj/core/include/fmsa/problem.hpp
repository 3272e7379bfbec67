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

#include "fmsa/codec.hpp"

namespace fmsa {

/// The expensive function being optimized. Implementations must be
/// deterministic and safe for concurrent evaluate() calls.
class BlackBoxProblem {
 public:
  virtual ~BlackBoxProblem() = default;

  /// Number of integer variables L.
  virtual int dimension() const = 0;

  /// Domain filter applied before evaluation; points rejected here are
  /// dropped in the conversion phase and never evaluated.
  virtual bool accepts(const IntegerPoint& point) const = 0;

  /// Cost of a point. Throws DomainError for inputs outside the domain.
  virtual double evaluate(const IntegerPoint& point) const = 0;
};

}  // namespace fmsa
