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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace thermorank {

/// Ranks in descending order of value: rank 1 is the largest. Equal values
/// keep input order, so the result is always a permutation of 1..size.
std::vector<int> rank_descending(std::span<const double> values);

struct Warning {
  std::string code;  // e.g. "WeightSumWarning", "NegativeQuality"
  std::string message;

  friend bool operator==(const Warning&, const Warning&) = default;
};

struct CellIndex {
  std::size_t dm = 0;
  std::size_t alternative = 0;
  std::size_t criterion = 0;

  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

/// Per-alternative energy, exergy and entropy indicators with both rankings.
struct IndicatorSummary {
  std::vector<std::string> alternatives;
  std::vector<double> energy;   // U_i
  std::vector<double> exergy;   // X_i
  std::vector<double> entropy;  // S_i = U_i - X_i
  std::vector<int> rank_by_energy;
  std::vector<int> rank_by_exergy;

  std::size_t size() const noexcept { return alternatives.size(); }
};

}  // namespace thermorank
