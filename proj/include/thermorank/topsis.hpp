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

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "thermorank/grid.hpp"
#include "thermorank/panel.hpp"

// Classical crisp TOPSIS, kept as a comparison baseline for the
// thermodynamic indicators.
namespace thermorank::topsis {

enum class Normalization { kLinear, kVector };

std::string_view to_string(Normalization n) noexcept;
std::optional<Normalization> normalization_from_string(std::string_view s);

/// Criterion orientation of the weighted matrix. Linear normalization turns
/// cost columns into min/x, so they become benefit-oriented; vector
/// normalization keeps the original direction.
std::vector<CriterionKind> orientation(std::span<const CriterionSpec> criteria,
                                       Normalization normalization);

/// v_ij = w_j * r_ij over an aggregated m x n decision matrix.
/// Throws Error(kAllZeroColumn) for a column that cannot be normalized.
Grid2<double> weighted_normalized(const Grid2<double>& decision,
                                  std::span<const double> weights,
                                  std::span<const CriterionSpec> criteria,
                                  Normalization normalization);

struct Result {
  std::vector<double> closeness;  // S- / (S+ + S-)
  std::vector<double> separation_positive;
  std::vector<double> separation_negative;
  std::vector<int> rank;
  /// Set when the positive and negative ideals coincide on every column;
  /// closeness is then NaN and ranks fall back to input order.
  bool degenerate = false;
};

/// `kinds` is the orientation of `weighted` (see orientation()).
Result rank(const Grid2<double>& weighted, std::span<const CriterionKind> kinds);

struct PanelResult {
  Grid2<double> decision;  // arithmetic mean over decision makers
  std::vector<double> weights;
  Grid2<double> weighted;
  Result result;
};

/// Aggregates the panel over decision makers by arithmetic mean, normalizes,
/// weights and ranks. Prenormalized panels skip normalization.
PanelResult run(const CrispPanel& panel,
                Normalization normalization = Normalization::kLinear);

}  // namespace thermorank::topsis
