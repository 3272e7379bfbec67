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

#include <string>
#include <vector>

#include "harness/experiment.hpp"

namespace fmsa::harness {

/// Canned experiment configurations for the standard studies (bond-length
/// energy curves, error distributions over bit length and rank, invocation
/// scatter data, dimension comparison). These are the long-running studies;
/// expect hours of compute for the 100-run distributions.
std::vector<std::string> preset_names();
ExperimentConfig preset(const std::string& name);
std::string preset_summary();

}  // namespace fmsa::harness
