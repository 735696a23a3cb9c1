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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "thermorank/panel.hpp"
#include "thermorank/tfn.hpp"

namespace thermorank::io {

enum class PanelMode { kCrisp, kFuzzy };

std::string_view to_string(PanelMode mode) noexcept;

/// A published ranking of the same alternatives by another method, kept for
/// side-by-side comparison only.
struct ReferenceRanking {
  std::string method;
  std::vector<int> ranks;

  friend bool operator==(const ReferenceRanking&,
                         const ReferenceRanking&) = default;
};

struct PanelMeta {
  std::string name;
  std::string description;
  std::optional<ReferenceRanking> reference;

  friend bool operator==(const PanelMeta&, const PanelMeta&) = default;
};

struct PanelDocument {
  PanelMeta meta;
  std::variant<CrispPanel, FuzzyPanel> panel;
  // Present only when the document overrides the built-in scales.
  std::optional<LinguisticScale> rating_scale;
  std::optional<LinguisticScale> weight_scale;

  PanelMode mode() const noexcept {
    return std::holds_alternative<CrispPanel>(panel) ? PanelMode::kCrisp
                                                     : PanelMode::kFuzzy;
  }
  const std::vector<std::string>& alternatives() const;
  const std::vector<std::string>& decision_makers() const;
  const std::vector<CriterionSpec>& criteria() const;

  const LinguisticScale& ratings_scale() const;
  const LinguisticScale& weights_scale() const;

  friend bool operator==(const PanelDocument&, const PanelDocument&) = default;
};

/// JSON document:
///   { "meta": {"name", "mode": "crisp"|"fuzzy", "prenormalized"?,
///              "description"?, "reference"?: {"method", "ranks"}},
///     "alternatives": [ids],
///     "criteria": [{"id", "kind": "benefit"|"cost"}],
///     "decision_makers": [ids],
///     "weights": {dm: [n values]},
///     "ratings": {dm: [m rows of n values]},
///     "scales"?: {"rating"?: {label: [a,b,c]}, "weight"?: {...}} }
/// Fuzzy values are a label string or a 3-array. Throws ParseError with
/// line/column for malformed syntax and Error(kValidation) naming the cell for
/// content problems.
PanelDocument parse_json(std::string_view text);

/// Long-format CSV `dm,alternative,criterion,value` plus a criteria sidecar
/// `criterion,kind,<dm ids...>` holding each decision maker's weights.
/// Fuzzy values are labels or `a;b;c`. The mode is fuzzy when any value is
/// not a plain number.
PanelDocument parse_csv(std::string_view ratings_csv,
                        std::string_view criteria_csv,
                        std::string_view name = "csv");

/// Canonical JSON. Doubles are written in shortest round-trip form, so
/// parse_json(serialize_json(d)) == d.
std::string serialize_json(const PanelDocument& document);

/// Canonical CSV pair (ratings, criteria sidecar).
std::pair<std::string, std::string> serialize_csv(const PanelDocument& document);

/// FNV-1a 64 of the canonical JSON.
std::uint64_t checksum(const PanelDocument& document);

/// Built-in datasets from the published worked examples and case studies.
const std::vector<std::string>& fixture_names();
/// Throws Error(kUnknownFixture).
PanelDocument load_fixture(std::string_view name);

/// One rating edit "dm:alternative:criterion=value".
struct Edit {
  std::string dm;
  std::string alternative;
  std::string criterion;
  std::string value;
};

/// Throws Error(kBadEdit) quoting the token.
Edit parse_edit(std::string_view token);

/// Replaces one rating. The value is a number for crisp panels and a label or
/// `a;b;c` triplet for fuzzy ones. Throws Error(kBadEdit) for unknown ids or
/// unusable values; the document is unchanged on failure.
void apply_edit(PanelDocument& document, const Edit& edit);

}  // namespace thermorank::io
