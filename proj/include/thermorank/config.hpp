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
#include <string_view>

namespace thermorank {

/// Which ratings form the reference mean a rating's quality is measured
/// against: the other decision makers' ratings of the same cell, or the
/// same decision maker's ratings of every alternative on that criterion.
enum class QualityReference { kAcrossExperts, kAcrossAlternatives };

/// Scale the quality deviation is measured on. kRaw uses the ratings as
/// entered (one shared scale for all decision makers); kNormalized uses each
/// decision maker's normalized ratings.
enum class QualityBasis { kRaw, kNormalized };

/// How per-criterion cells collapse to one value per (decision maker,
/// alternative). kAuto picks kWeightedSum when every decision maker's weights
/// sum to 1 (per component for fuzzy weights), else kMeanOfWeighted.
enum class CriterionAggregation { kAuto, kWeightedSum, kMeanOfWeighted };

/// Fuzzy weight preprocessing. kColumnMax divides each criterion's weights by
/// the largest right support any decision maker gave that criterion.
enum class WeightNormalization { kNone, kColumnMax };

enum class TieBreak { kByInputOrder };

enum class ZeroMeanPolicy { kError, kQualityOneIfExact };

struct EngineConfig {
  QualityReference quality_reference = QualityReference::kAcrossExperts;
  QualityBasis quality_basis = QualityBasis::kRaw;
  CriterionAggregation criterion_aggregation = CriterionAggregation::kAuto;
  WeightNormalization weight_normalization = WeightNormalization::kNone;
  TieBreak tie_break = TieBreak::kByInputOrder;
  ZeroMeanPolicy zero_mean_policy = ZeroMeanPolicy::kError;

  /// Defaults that reproduce the published crisp case study.
  static constexpr EngineConfig crisp_defaults() { return {}; }

  /// Defaults that reproduce the published fuzzy case study.
  static constexpr EngineConfig fuzzy_defaults() {
    EngineConfig c;
    c.quality_basis = QualityBasis::kNormalized;
    c.weight_normalization = WeightNormalization::kColumnMax;
    return c;
  }

  friend constexpr bool operator==(const EngineConfig&,
                                   const EngineConfig&) = default;
};

/// Tolerance used to decide whether weights "sum to one".
inline constexpr double kWeightSumTolerance = 1e-6;

std::string_view to_string(QualityReference v) noexcept;
std::string_view to_string(QualityBasis v) noexcept;
std::string_view to_string(CriterionAggregation v) noexcept;
std::string_view to_string(WeightNormalization v) noexcept;
std::string_view to_string(ZeroMeanPolicy v) noexcept;

std::optional<QualityReference> quality_reference_from_string(std::string_view);
std::optional<QualityBasis> quality_basis_from_string(std::string_view);
std::optional<CriterionAggregation> criterion_aggregation_from_string(
    std::string_view);
std::optional<WeightNormalization> weight_normalization_from_string(
    std::string_view);
std::optional<ZeroMeanPolicy> zero_mean_policy_from_string(std::string_view);

}  // namespace thermorank
