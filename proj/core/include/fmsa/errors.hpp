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

#include <stdexcept>
#include <string>

namespace fmsa {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched vector/matrix sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value outside the representable range of an encoding.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A bit pattern that violates its encoding constraint. Carries the index of
/// the offending integer variable when known (-1 otherwise); the conversion
/// phase filters on this error type.
class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what, int variable_index = -1)
      : Error(what), variable_index_(variable_index) {}
  int variable_index() const { return variable_index_; }

 private:
  int variable_index_;
};

/// Invalid configuration (empty sample set, bad hyperparameters, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of an operation (negative Boys
/// argument, zero quantum state vector, non-positive bond length).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace fmsa
