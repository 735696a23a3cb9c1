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
#include "thermorank/tfn.hpp"

namespace thermorank::fuzzy {

/// Benefit: (a, b, c) / c+ with c+ the column's largest right support.
/// Cost: (a- / c, a- / b, a- / a) with a- the column's smallest left support.
/// Computed per decision maker; prenormalized panels are returned unchanged.
Grid3<Tfn> normalize(const FuzzyPanel& panel);

/// Applies config.weight_normalization. Prenormalized panels are returned
/// unchanged.
Grid2<Tfn> prepare_weights(const FuzzyPanel& panel, const EngineConfig& config);

/// Componentwise w * r per cell.
Grid3<Tfn> energy_matrix(const Grid3<Tfn>& normalized,
                         const Grid2<Tfn>& weights);

/// (1,1,1) - d(r, mean) / mean, componentwise, with the mean chosen by
/// config.quality_reference.
Grid3<Tfn> quality_matrix(const Grid3<Tfn>& ratings, const EngineConfig& config);

Grid3<Tfn> exergy_matrix(const Grid3<Tfn>& quality, const Grid3<Tfn>& energy);
Grid3<Tfn> entropy_matrix(const Grid3<Tfn>& energy, const Grid3<Tfn>& exergy);

struct Aggregate {
  Grid2<Tfn> energy_by_dm;  // (k, i): fuzzy mean over criteria
  Grid2<Tfn> exergy_by_dm;
  Grid2<double> energy_score_by_dm;  // s(energy_by_dm)
  Grid2<double> exergy_score_by_dm;
  std::vector<double> energy;  // U_i = mean over k of s(.)
  std::vector<double> exergy;
  CriterionAggregation mode_used = CriterionAggregation::kMeanOfWeighted;
  std::vector<Warning> warnings;
};

/// Resolves kAuto: weighted sum iff each component of every decision maker's
/// weights sums to 1 within kWeightSumTolerance.
CriterionAggregation resolve_aggregation(const Grid2<Tfn>& weights,
                                         CriterionAggregation requested);

Aggregate aggregate(const Grid3<Tfn>& energy, const Grid3<Tfn>& exergy,
                    const Grid2<Tfn>& weights, const EngineConfig& config);

struct Report {
  IndicatorSummary summary;
  Grid2<Tfn> weights;  // as used, after weight normalization
  Grid3<Tfn> normalized;
  Grid3<Tfn> energy;
  Grid3<Tfn> quality;
  Grid3<Tfn> exergy;
  Grid3<Tfn> entropy;
  Grid2<Tfn> energy_by_dm;
  Grid2<Tfn> exergy_by_dm;
  Grid2<double> energy_score_by_dm;
  Grid2<double> exergy_score_by_dm;
  CriterionAggregation aggregation_used = CriterionAggregation::kMeanOfWeighted;
  std::vector<CellIndex> negative_quality_cells;
  std::vector<CellIndex> unordered_quality_cells;
  std::vector<Warning> warnings;
};

Report run(const FuzzyPanel& panel,
           const EngineConfig& config = EngineConfig::fuzzy_defaults());

}  // namespace thermorank::fuzzy
