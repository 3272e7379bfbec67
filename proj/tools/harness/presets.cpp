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

#include "harness/presets.hpp"

#include <sstream>

#include "fmsa/errors.hpp"

namespace fmsa::harness {

namespace {

std::vector<double> curve_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 54; ++i) grid.push_back(0.30 + 0.05 * i);  // 0.30 .. 3.00
  return grid;
}

ExperimentConfig base(ExperimentKind kind, Encoding encoding) {
  ExperimentConfig cfg;
  cfg.kind = kind;
  cfg.encoding = encoding;
  cfg.bond_lengths = {0.7414};
  cfg.dimensions = {2};
  return cfg;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {
      "energy-curve-binary",   "energy-curve-one-hot",   "energy-curve-domain-wall",
      "error-dist-binary",     "error-dist-one-hot",     "error-dist-domain-wall",
      "invocation-scatter-binary", "invocation-scatter-one-hot",
      "invocation-scatter-domain-wall",
      "dimension-compare-binary", "dimension-compare-one-hot",
      "dimension-compare-domain-wall",
      "fci-curve",
  };
}

ExperimentConfig preset(const std::string& name) {
  // Bond-length curves: best of 10 runs per geometry.
  if (name == "energy-curve-binary") {
    ExperimentConfig cfg = base(ExperimentKind::kEnergyCurve, Encoding::kBinary);
    cfg.bond_lengths = curve_grid();
    cfg.d_values = {8};
    cfg.rank_values = {4};
    cfg.output = "energy_curve_binary.csv";
    return cfg;
  }
  if (name == "energy-curve-one-hot") {
    ExperimentConfig cfg = base(ExperimentKind::kEnergyCurve, Encoding::kOneHot);
    cfg.bond_lengths = curve_grid();
    cfg.d_values = {64};
    cfg.rank_values = {8};
    cfg.p_values = {1.0, 10.0, 1000.0};
    cfg.output = "energy_curve_one_hot.csv";
    return cfg;
  }
  if (name == "energy-curve-domain-wall") {
    ExperimentConfig cfg = base(ExperimentKind::kEnergyCurve, Encoding::kDomainWall);
    cfg.bond_lengths = curve_grid();
    cfg.d_values = {63};
    cfg.rank_values = {8};
    cfg.p_values = {1.0, 10.0, 1000.0};
    cfg.output = "energy_curve_domain_wall.csv";
    return cfg;
  }

  // Error distributions at the equilibrium geometry over (d, k) grids.
  if (name == "error-dist-binary") {
    ExperimentConfig cfg = base(ExperimentKind::kErrorDistribution, Encoding::kBinary);
    cfg.d_values = {2, 4, 6, 8};
    cfg.rank_values = {1, 2, 8};
    cfg.output = "error_dist_binary.csv";
    return cfg;
  }
  if (name == "error-dist-one-hot") {
    ExperimentConfig cfg = base(ExperimentKind::kErrorDistribution, Encoding::kOneHot);
    cfg.d_values = {8, 16, 32, 64};
    cfg.rank_values = {1, 8, 64};
    cfg.p_values = {1000.0};
    cfg.output = "error_dist_one_hot.csv";
    return cfg;
  }
  if (name == "error-dist-domain-wall") {
    ExperimentConfig cfg = base(ExperimentKind::kErrorDistribution, Encoding::kDomainWall);
    cfg.d_values = {7, 15, 31, 63};
    cfg.rank_values = {1, 8, 64};
    cfg.p_values = {1000.0};
    cfg.output = "error_dist_domain_wall.csv";
    return cfg;
  }

  // First-hit invocation counts; one bit length each, rank sweeps.
  if (name == "invocation-scatter-binary") {
    ExperimentConfig cfg = base(ExperimentKind::kInvocationScatter, Encoding::kBinary);
    cfg.d_values = {6};
    cfg.rank_values = {1, 2, 8};
    cfg.output = "invocation_scatter_binary.csv";
    return cfg;
  }
  if (name == "invocation-scatter-one-hot") {
    ExperimentConfig cfg = base(ExperimentKind::kInvocationScatter, Encoding::kOneHot);
    cfg.d_values = {64};
    cfg.rank_values = {1, 8, 64};
    cfg.p_values = {1000.0};
    cfg.output = "invocation_scatter_one_hot.csv";
    return cfg;
  }
  if (name == "invocation-scatter-domain-wall") {
    ExperimentConfig cfg =
        base(ExperimentKind::kInvocationScatter, Encoding::kDomainWall);
    cfg.d_values = {63};
    cfg.rank_values = {1, 8, 64};
    cfg.p_values = {1000.0};
    cfg.output = "invocation_scatter_domain_wall.csv";
    return cfg;
  }

  // Two- vs six-dimensional search spaces (6-bit integers for binary).
  if (name == "dimension-compare-binary") {
    ExperimentConfig cfg = base(ExperimentKind::kDimensionCompare, Encoding::kBinary);
    cfg.dimensions = {2, 6};
    cfg.d_values = {6};
    cfg.rank_values = {1, 2};
    cfg.output = "dimension_compare_binary.csv";
    return cfg;
  }
  if (name == "dimension-compare-one-hot") {
    ExperimentConfig cfg = base(ExperimentKind::kDimensionCompare, Encoding::kOneHot);
    cfg.dimensions = {2, 6};
    cfg.d_values = {64};
    cfg.rank_values = {1, 8};
    cfg.p_values = {1000.0};
    cfg.output = "dimension_compare_one_hot.csv";
    return cfg;
  }
  if (name == "dimension-compare-domain-wall") {
    ExperimentConfig cfg =
        base(ExperimentKind::kDimensionCompare, Encoding::kDomainWall);
    cfg.dimensions = {2, 6};
    cfg.d_values = {63};
    cfg.rank_values = {1, 8};
    cfg.p_values = {1000.0};
    cfg.output = "dimension_compare_domain_wall.csv";
    return cfg;
  }

  if (name == "fci-curve") {
    ExperimentConfig cfg = base(ExperimentKind::kFciCurve, Encoding::kOneHot);
    std::vector<double> grid;
    for (int i = 0; i <= 135; ++i) grid.push_back(0.30 + 0.02 * i);
    cfg.bond_lengths = grid;
    cfg.output = "fci_curve.csv";
    return cfg;
  }

  throw ConfigError("unknown preset: " + name + " (see --list-presets)");
}

std::string preset_summary() {
  std::ostringstream out;
  for (const auto& name : preset_names()) out << "  " << name << '\n';
  return out.str();
}

}  // namespace fmsa::harness
