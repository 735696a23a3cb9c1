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
#include <string>
#include <string_view>
#include <vector>

#include "thermorank/grid.hpp"
#include "thermorank/tfn.hpp"

namespace thermorank {

enum class CriterionKind { kBenefit, kCost };

std::string_view to_string(CriterionKind kind) noexcept;
std::optional<CriterionKind> criterion_kind_from_string(std::string_view s);

struct CriterionSpec {
  std::string id;
  CriterionKind kind = CriterionKind::kBenefit;

  friend bool operator==(const CriterionSpec&, const CriterionSpec&) = default;
};

/// K decision makers rating m alternatives on n criteria with crisp scores.
///
/// `prenormalized` marks ratings and weights that are already on [0, 1] and
/// must be used as given (no per-column normalization step).
struct CrispPanel {
  std::vector<std::string> alternatives;
  std::vector<CriterionSpec> criteria;
  std::vector<std::string> decision_makers;
  Grid3<double> ratings;  // (k, i, j)
  Grid2<double> weights;  // (k, j)
  bool prenormalized = false;

  std::size_t dm_count() const noexcept { return decision_makers.size(); }
  std::size_t alternative_count() const noexcept { return alternatives.size(); }
  std::size_t criterion_count() const noexcept { return criteria.size(); }

  /// Throws Error(kValidation) naming the offending id or cell. Requires
  /// m >= min_alternatives (ranking needs at least two).
  void validate(std::size_t min_alternatives = 1) const;

  friend bool operator==(const CrispPanel&, const CrispPanel&) = default;
};

/// Fuzzy counterpart of CrispPanel. Optional source labels are kept for
/// audit and serialization; an empty string means "given as a triplet".
struct FuzzyPanel {
  std::vector<std::string> alternatives;
  std::vector<CriterionSpec> criteria;
  std::vector<std::string> decision_makers;
  Grid3<Tfn> ratings;
  Grid2<Tfn> weights;
  Grid3<std::string> rating_labels;
  Grid2<std::string> weight_labels;
  bool prenormalized = false;

  std::size_t dm_count() const noexcept { return decision_makers.size(); }
  std::size_t alternative_count() const noexcept { return alternatives.size(); }
  std::size_t criterion_count() const noexcept { return criteria.size(); }

  void validate(std::size_t min_alternatives = 1) const;

  friend bool operator==(const FuzzyPanel&, const FuzzyPanel&) = default;
};

}  // namespace thermorank
