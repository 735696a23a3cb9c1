// Copyright 2026 The thermorank Authors
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

#include <vector>

#include "thermorank/config.hpp"
#include "thermorank/grid.hpp"
#include "thermorank/panel.hpp"
#include "thermorank/report.hpp"

namespace thermorank::crisp {

/// Per decision maker: x / max_i x for benefit criteria, min_i x / x for cost.
/// Prenormalized panels are returned unchanged.
Grid3<double> normalize(const CrispPanel& panel);

/// U = w * r per cell.
Grid3<double> energy_matrix(const Grid3<double>& normalized,
                            const Grid2<double>& weights);

/// q = 1 - |r - mean| / mean, with the mean taken per config.quality_reference.
/// `ratings` is whichever matrix the quality basis selects. q <= 1 always and
/// may be negative.
Grid3<double> quality_matrix(const Grid3<double>& ratings,
                             const EngineConfig& config);

/// X = q * U per cell.
Grid3<double> exergy_matrix(const Grid3<double>& quality,
                            const Grid3<double>& energy);

/// Work done moving a rating from r1 to r2 under weight w: w * |r1 - r2|.
double work(double weight, double r1, double r2) noexcept;

struct Aggregate {
  Grid2<double> energy_by_dm;  // (k, i): U_i^k
  Grid2<double> exergy_by_dm;  // (k, i): X_i^k
  std::vector<double> energy;  // U_i, mean over decision makers
  std::vector<double> exergy;  // X_i
  CriterionAggregation mode_used = CriterionAggregation::kMeanOfWeighted;
  std::vector<Warning> warnings;
};

/// Resolves kAuto against the weights: weighted sum iff every decision
/// maker's weights sum to 1 within kWeightSumTolerance.
CriterionAggregation resolve_aggregation(const Grid2<double>& weights,
                                         CriterionAggregation requested);

Aggregate aggregate(const Grid3<double>& energy, const Grid3<double>& exergy,
                    const Grid2<double>& weights, const EngineConfig& config);

inline double entropy(double energy, double exergy) noexcept {
  return energy - exergy;
}

struct Report {
  IndicatorSummary summary;
  Grid3<double> normalized;
  Grid3<double> energy;
  Grid3<double> quality;
  Grid3<double> exergy;
  Grid2<double> energy_by_dm;
  Grid2<double> exergy_by_dm;
  CriterionAggregation aggregation_used = CriterionAggregation::kMeanOfWeighted;
  std::vector<CellIndex> negative_quality_cells;
  std::vector<Warning> warnings;
};

Report run(const CrispPanel& panel,
           const EngineConfig& config = EngineConfig::crisp_defaults());

}  // namespace thermorank::crisp
