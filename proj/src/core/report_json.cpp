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

#include "thermorank/report_json.hpp"

#include <cmath>
#include <json.hpp>

namespace thermorank {
namespace {

using Json = nlohmann::ordered_json;

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json triplet(const Tfn& t) {
  return Json::array({number(t.a), number(t.b), number(t.c)});
}

Json config_json(const EngineConfig& c) {
  return {{"quality_reference", std::string(to_string(c.quality_reference))},
          {"quality_basis", std::string(to_string(c.quality_basis))},
          {"aggregation", std::string(to_string(c.criterion_aggregation))},
          {"weight_normalization",
           std::string(to_string(c.weight_normalization))},
          {"zero_mean", std::string(to_string(c.zero_mean_policy))}};
}

Json rows_json(const IndicatorSummary& s) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    rows.push_back({{"alternative", s.alternatives[i]},
                    {"U", number(s.energy[i])},
                    {"X", number(s.exergy[i])},
                    {"S", number(s.entropy[i])},
                    {"rank_U", s.rank_by_energy[i]},
                    {"rank_X", s.rank_by_exergy[i]}});
  }
  return rows;
}

Json warnings_json(const std::vector<Warning>& warnings) {
  Json out = Json::array();
  for (const auto& w : warnings) {
    out.push_back({{"code", w.code}, {"message", w.message}});
  }
  return out;
}

template <class Panel>
Json cells_list(const Panel& p, const std::vector<CellIndex>& cells) {
  Json out = Json::array();
  for (const auto& c : cells) {
    out.push_back(p.decision_makers[c.dm] + ":" + p.alternatives[c.alternative] +
                  ":" + p.criteria[c.criterion].id);
  }
  return out;
}

Json header(const char* mode, const EngineConfig& config,
            CriterionAggregation used, const IndicatorSummary& s,
            const std::vector<Warning>& warnings) {
  Json root = Json::object();
  root["mode"] = mode;
  root["config"] = config_json(config);
  root["aggregation_used"] = std::string(to_string(used));
  root["rows"] = rows_json(s);
  root["warnings"] = warnings_json(warnings);
  return root;
}

}  // namespace

std::string report_json(const CrispPanel& p, const crisp::Report& r,
                        const EngineConfig& config, bool detail) {
  Json root = header("crisp", config, r.aggregation_used, r.summary,
                     r.warnings);
  root["negative_quality_cells"] = cells_list(p, r.negative_quality_cells);
  if (detail) {
    Json by_dm = Json::array();
    Json cells = Json::array();
    for (std::size_t k = 0; k < p.dm_count(); ++k) {
      for (std::size_t i = 0; i < p.alternative_count(); ++i) {
        by_dm.push_back({{"dm", p.decision_makers[k]},
                         {"alternative", p.alternatives[i]},
                         {"U", number(r.energy_by_dm(k, i))},
                         {"X", number(r.exergy_by_dm(k, i))}});
        for (std::size_t j = 0; j < p.criterion_count(); ++j) {
          cells.push_back({{"dm", p.decision_makers[k]},
                           {"alternative", p.alternatives[i]},
                           {"criterion", p.criteria[j].id},
                           {"rating", number(p.ratings(k, i, j))},
                           {"normalized", number(r.normalized(k, i, j))},
                           {"U", number(r.energy(k, i, j))},
                           {"q", number(r.quality(k, i, j))},
                           {"X", number(r.exergy(k, i, j))}});
        }
      }
    }
    root["by_dm"] = std::move(by_dm);
    root["cells"] = std::move(cells);
  }
  return root.dump(2) + "\n";
}

std::string report_json(const FuzzyPanel& p, const fuzzy::Report& r,
                        const EngineConfig& config, bool detail) {
  Json root = header("fuzzy", config, r.aggregation_used, r.summary,
                     r.warnings);
  root["negative_quality_cells"] = cells_list(p, r.negative_quality_cells);
  root["unordered_quality_cells"] = cells_list(p, r.unordered_quality_cells);
  if (detail) {
    Json weights = Json::object();
    for (std::size_t k = 0; k < p.dm_count(); ++k) {
      Json row = Json::array();
      for (std::size_t j = 0; j < p.criterion_count(); ++j) {
        row.push_back(triplet(r.weights(k, j)));
      }
      weights[p.decision_makers[k]] = std::move(row);
    }
    root["weights_used"] = std::move(weights);
    Json by_dm = Json::array();
    Json cells = Json::array();
    for (std::size_t k = 0; k < p.dm_count(); ++k) {
      for (std::size_t i = 0; i < p.alternative_count(); ++i) {
        by_dm.push_back({{"dm", p.decision_makers[k]},
                         {"alternative", p.alternatives[i]},
                         {"U", triplet(r.energy_by_dm(k, i))},
                         {"X", triplet(r.exergy_by_dm(k, i))},
                         {"U_score", number(r.energy_score_by_dm(k, i))},
                         {"X_score", number(r.exergy_score_by_dm(k, i))}});
        for (std::size_t j = 0; j < p.criterion_count(); ++j) {
          Json cell = {{"dm", p.decision_makers[k]},
                       {"alternative", p.alternatives[i]},
                       {"criterion", p.criteria[j].id}};
          if (!p.rating_labels.values().empty() &&
              !p.rating_labels(k, i, j).empty()) {
            cell["label"] = p.rating_labels(k, i, j);
          }
          cell["rating"] = triplet(p.ratings(k, i, j));
          cell["normalized"] = triplet(r.normalized(k, i, j));
          cell["U"] = triplet(r.energy(k, i, j));
          cell["q"] = triplet(r.quality(k, i, j));
          cell["X"] = triplet(r.exergy(k, i, j));
          cell["S"] = triplet(r.entropy(k, i, j));
          cells.push_back(std::move(cell));
        }
      }
    }
    root["by_dm"] = std::move(by_dm);
    root["cells"] = std::move(cells);
  }
  return root.dump(2) + "\n";
}

std::string topsis_json(const CrispPanel& p, const topsis::PanelResult& r,
                        topsis::Normalization normalization) {
  Json root = Json::object();
  root["method"] = "topsis";
  root["normalization"] = std::string(to_string(normalization));
  root["degenerate"] = r.result.degenerate;
  Json rows = Json::array();
  for (std::size_t i = 0; i < p.alternative_count(); ++i) {
    rows.push_back({{"alternative", p.alternatives[i]},
                    {"closeness", number(r.result.closeness[i])},
                    {"S_plus", number(r.result.separation_positive[i])},
                    {"S_minus", number(r.result.separation_negative[i])},
                    {"rank", r.result.rank[i]}});
  }
  root["rows"] = std::move(rows);
  return root.dump(2) + "\n";
}

}  // namespace thermorank
