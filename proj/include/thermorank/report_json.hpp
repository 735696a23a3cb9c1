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

#include <string>

#include "thermorank/config.hpp"
#include "thermorank/crisp_engine.hpp"
#include "thermorank/fuzzy_engine.hpp"
#include "thermorank/panel.hpp"
#include "thermorank/topsis.hpp"

namespace thermorank {

// Report documents. Every variant carries "rows" with the keys
// {alternative, U, X, S, rank_U, rank_X}; `detail` adds per-decision-maker
// values and every per-cell intermediate.

std::string report_json(const CrispPanel& panel, const crisp::Report& report,
                        const EngineConfig& config, bool detail);

std::string report_json(const FuzzyPanel& panel, const fuzzy::Report& report,
                        const EngineConfig& config, bool detail);

/// Rows {alternative, closeness, S_plus, S_minus, rank}.
std::string topsis_json(const CrispPanel& panel,
                        const topsis::PanelResult& result,
                        topsis::Normalization normalization);

}  // namespace thermorank
