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

// String forms of the public enumerations. These spellings are used by the
// JSON format, the C API and the command line.

#include "thermorank/config.hpp"
#include "thermorank/error.hpp"
#include "thermorank/panel.hpp"

namespace thermorank {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kAllZeroColumn: return "AllZeroColumn";
    case ErrorCode::kZeroReferenceMean: return "ZeroReferenceMean";
    case ErrorCode::kValidation: return "ValidationError";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kUnknownFixture: return "UnknownFixture";
    case ErrorCode::kBadEdit: return "BadEdit";
    case ErrorCode::kMissingReference: return "MissingReference";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

std::string_view to_string(CriterionKind kind) noexcept {
  return kind == CriterionKind::kBenefit ? "benefit" : "cost";
}

std::optional<CriterionKind> criterion_kind_from_string(std::string_view s) {
  if (s == "benefit") return CriterionKind::kBenefit;
  if (s == "cost") return CriterionKind::kCost;
  return std::nullopt;
}

std::string_view to_string(QualityReference v) noexcept {
  return v == QualityReference::kAcrossExperts ? "experts" : "alternatives";
}

std::string_view to_string(QualityBasis v) noexcept {
  return v == QualityBasis::kRaw ? "raw" : "normalized";
}

std::string_view to_string(CriterionAggregation v) noexcept {
  switch (v) {
    case CriterionAggregation::kAuto: return "auto";
    case CriterionAggregation::kWeightedSum: return "weighted-sum";
    case CriterionAggregation::kMeanOfWeighted: return "mean";
  }
  return "auto";
}

std::string_view to_string(WeightNormalization v) noexcept {
  return v == WeightNormalization::kNone ? "none" : "column-max";
}

std::string_view to_string(ZeroMeanPolicy v) noexcept {
  return v == ZeroMeanPolicy::kError ? "error" : "one-if-exact";
}

std::optional<QualityReference> quality_reference_from_string(
    std::string_view s) {
  if (s == "experts") return QualityReference::kAcrossExperts;
  if (s == "alternatives") return QualityReference::kAcrossAlternatives;
  return std::nullopt;
}

std::optional<QualityBasis> quality_basis_from_string(std::string_view s) {
  if (s == "raw") return QualityBasis::kRaw;
  if (s == "normalized") return QualityBasis::kNormalized;
  return std::nullopt;
}

std::optional<CriterionAggregation> criterion_aggregation_from_string(
    std::string_view s) {
  if (s == "auto") return CriterionAggregation::kAuto;
  if (s == "weighted-sum") return CriterionAggregation::kWeightedSum;
  if (s == "mean") return CriterionAggregation::kMeanOfWeighted;
  return std::nullopt;
}

std::optional<WeightNormalization> weight_normalization_from_string(
    std::string_view s) {
  if (s == "none") return WeightNormalization::kNone;
  if (s == "column-max") return WeightNormalization::kColumnMax;
  return std::nullopt;
}

std::optional<ZeroMeanPolicy> zero_mean_policy_from_string(std::string_view s) {
  if (s == "error") return ZeroMeanPolicy::kError;
  if (s == "one-if-exact") return ZeroMeanPolicy::kQualityOneIfExact;
  return std::nullopt;
}

}  // namespace thermorank
