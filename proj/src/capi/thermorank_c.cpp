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

#include "thermorank.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <variant>

#include "thermorank/config.hpp"
#include "thermorank/crisp_engine.hpp"
#include "thermorank/error.hpp"
#include "thermorank/fuzzy_engine.hpp"
#include "thermorank/io_model.hpp"
#include "thermorank/report_json.hpp"
#include "thermorank/topsis.hpp"

struct tr_panel {
  thermorank::io::PanelDocument doc;
};

struct tr_report {
  std::variant<thermorank::CrispPanel, thermorank::FuzzyPanel> panel;
  std::variant<thermorank::crisp::Report, thermorank::fuzzy::Report> report;
  thermorank::EngineConfig config;

  const thermorank::IndicatorSummary& summary() const {
    return std::visit(
        [](const auto& r) -> const thermorank::IndicatorSummary& {
          return r.summary;
        },
        report);
  }
  const std::vector<thermorank::Warning>& warnings() const {
    return std::visit(
        [](const auto& r) -> const std::vector<thermorank::Warning>& {
          return r.warnings;
        },
        report);
  }
};

struct tr_topsis {
  thermorank::CrispPanel panel;
  thermorank::topsis::PanelResult result;
  thermorank::topsis::Normalization normalization;
};

namespace {

using thermorank::Error;
using thermorank::ErrorCode;

struct LastError {
  std::string message;
  std::size_t line = 0;
  std::size_t column = 0;
};

LastError& last_error() {
  thread_local LastError e;
  return e;
}

tr_status fail(tr_status status, std::string message, std::size_t line = 0,
               std::size_t column = 0) {
  auto& e = last_error();
  e.message = std::move(message);
  e.line = line;
  e.column = column;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
tr_status guarded(F&& body) {
  try {
    body();
    return TR_OK;
  } catch (const thermorank::ParseError& e) {
    return fail(TR_ERR_PARSE, e.what(), e.line(), e.column());
  } catch (const Error& e) {
    return fail(static_cast<tr_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TR_ERR_INTERNAL, "unknown failure");
  }
}

tr_status null_argument(const char* name) {
  return fail(TR_ERR_INVALID_ARGUMENT, std::string(name) + " is NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class E>
E checked_enum(int value, int count, const char* name) {
  if (value < 0 || value >= count) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(name) + " out of range: " + std::to_string(value));
  }
  return static_cast<E>(value);
}

thermorank::EngineConfig to_engine(const tr_config& c) {
  thermorank::EngineConfig e;
  e.quality_reference = checked_enum<thermorank::QualityReference>(
      c.quality_reference, 2, "quality_reference");
  e.quality_basis =
      checked_enum<thermorank::QualityBasis>(c.quality_basis, 2, "quality_basis");
  e.criterion_aggregation = checked_enum<thermorank::CriterionAggregation>(
      c.aggregation, 3, "aggregation");
  e.weight_normalization = checked_enum<thermorank::WeightNormalization>(
      c.weight_normalization, 2, "weight_normalization");
  e.zero_mean_policy = checked_enum<thermorank::ZeroMeanPolicy>(
      c.zero_mean_policy, 2, "zero_mean_policy");
  return e;
}

tr_config from_engine(const thermorank::EngineConfig& e) {
  return {static_cast<int>(e.quality_reference),
          static_cast<int>(e.quality_basis),
          static_cast<int>(e.criterion_aggregation),
          static_cast<int>(e.weight_normalization),
          static_cast<int>(e.zero_mean_policy)};
}

}  // namespace

extern "C" {

int tr_api_version(void) { return TR_API_VERSION; }

const char* tr_status_name(tr_status status) {
  if (status < TR_OK || status > TR_ERR_INTERNAL) return "UnknownStatus";
  return thermorank::to_string(static_cast<ErrorCode>(status)).data();
}

const char* tr_last_error(void) { return last_error().message.c_str(); }

void tr_last_error_position(size_t* line, size_t* column) {
  if (line != nullptr) *line = last_error().line;
  if (column != nullptr) *column = last_error().column;
}

void tr_string_free(char* s) { std::free(s); }

tr_status tr_config_defaults(tr_mode mode, tr_config* out) {
  if (out == nullptr) return null_argument("out");
  if (mode != TR_MODE_CRISP && mode != TR_MODE_FUZZY) {
    return fail(TR_ERR_INVALID_ARGUMENT, "unknown mode");
  }
  *out = from_engine(mode == TR_MODE_CRISP
                         ? thermorank::EngineConfig::crisp_defaults()
                         : thermorank::EngineConfig::fuzzy_defaults());
  return TR_OK;
}

size_t tr_fixture_count(void) {
  return thermorank::io::fixture_names().size();
}

const char* tr_fixture_name(size_t index) {
  const auto& names = thermorank::io::fixture_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

tr_status tr_panel_load_fixture(const char* name, tr_panel** out) {
  if (name == nullptr) return null_argument("name");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = new tr_panel{thermorank::io::load_fixture(name)};
  });
}

tr_status tr_panel_parse_json(const char* text, size_t length, tr_panel** out) {
  if (text == nullptr && length != 0) return null_argument("text");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = new tr_panel{
        thermorank::io::parse_json(std::string_view(text, length))};
  });
}

tr_status tr_panel_parse_csv(const char* ratings, size_t ratings_length,
                             const char* criteria, size_t criteria_length,
                             const char* name, tr_panel** out) {
  if (ratings == nullptr && ratings_length != 0) return null_argument("ratings");
  if (criteria == nullptr && criteria_length != 0) {
    return null_argument("criteria");
  }
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = new tr_panel{thermorank::io::parse_csv(
        std::string_view(ratings, ratings_length),
        std::string_view(criteria, criteria_length),
        name != nullptr ? name : "csv")};
  });
}

tr_status tr_panel_clone(const tr_panel* panel, tr_panel** out) {
  if (panel == nullptr) return null_argument("panel");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new tr_panel{panel->doc}; });
}

void tr_panel_free(tr_panel* panel) { delete panel; }

tr_status tr_panel_apply_edit(tr_panel* panel, const char* edit) {
  if (panel == nullptr) return null_argument("panel");
  if (edit == nullptr) return null_argument("edit");
  return guarded([&] {
    thermorank::io::apply_edit(panel->doc, thermorank::io::parse_edit(edit));
  });
}

tr_status tr_panel_to_json(const tr_panel* panel, char** out) {
  if (panel == nullptr) return null_argument("panel");
  if (out == nullptr) return null_argument("out");
  return guarded(
      [&] { *out = copy_string(thermorank::io::serialize_json(panel->doc)); });
}

tr_status tr_panel_to_csv(const tr_panel* panel, char** ratings,
                          char** criteria) {
  if (panel == nullptr) return null_argument("panel");
  if (ratings == nullptr || criteria == nullptr) return null_argument("out");
  return guarded([&] {
    auto [r, c] = thermorank::io::serialize_csv(panel->doc);
    std::unique_ptr<char, decltype(&std::free)> rs(copy_string(r), &std::free);
    *criteria = copy_string(c);
    *ratings = rs.release();
  });
}

uint64_t tr_panel_checksum(const tr_panel* panel) {
  return panel == nullptr ? 0 : thermorank::io::checksum(panel->doc);
}

tr_mode tr_panel_mode(const tr_panel* panel) {
  return panel != nullptr &&
                 panel->doc.mode() == thermorank::io::PanelMode::kFuzzy
             ? TR_MODE_FUZZY
             : TR_MODE_CRISP;
}

const char* tr_panel_name(const tr_panel* panel) {
  return panel == nullptr ? nullptr : panel->doc.meta.name.c_str();
}

const char* tr_panel_description(const tr_panel* panel) {
  return panel == nullptr ? nullptr : panel->doc.meta.description.c_str();
}

tr_status tr_panel_validate(const tr_panel* panel, size_t min_alternatives) {
  if (panel == nullptr) return null_argument("panel");
  return guarded([&] {
    std::visit([&](const auto& p) { p.validate(min_alternatives); },
               panel->doc.panel);
  });
}

size_t tr_panel_alternative_count(const tr_panel* panel) {
  return panel == nullptr ? 0 : panel->doc.alternatives().size();
}

size_t tr_panel_criterion_count(const tr_panel* panel) {
  return panel == nullptr ? 0 : panel->doc.criteria().size();
}

size_t tr_panel_dm_count(const tr_panel* panel) {
  return panel == nullptr ? 0 : panel->doc.decision_makers().size();
}

const char* tr_panel_alternative(const tr_panel* panel, size_t index) {
  if (panel == nullptr || index >= panel->doc.alternatives().size()) {
    return nullptr;
  }
  return panel->doc.alternatives()[index].c_str();
}

const char* tr_panel_criterion(const tr_panel* panel, size_t index) {
  if (panel == nullptr || index >= panel->doc.criteria().size()) return nullptr;
  return panel->doc.criteria()[index].id.c_str();
}

const char* tr_panel_dm(const tr_panel* panel, size_t index) {
  if (panel == nullptr || index >= panel->doc.decision_makers().size()) {
    return nullptr;
  }
  return panel->doc.decision_makers()[index].c_str();
}

tr_status tr_panel_reference(const tr_panel* panel, const char** method,
                             const int** ranks, size_t* count) {
  if (panel == nullptr) return null_argument("panel");
  const auto& ref = panel->doc.meta.reference;
  if (!ref) {
    return fail(TR_ERR_MISSING_REFERENCE,
                "panel '" + panel->doc.meta.name +
                    "' has no published reference ranking");
  }
  if (method != nullptr) *method = ref->method.c_str();
  if (ranks != nullptr) *ranks = ref->ranks.data();
  if (count != nullptr) *count = ref->ranks.size();
  return TR_OK;
}

tr_status tr_run(const tr_panel* panel, const tr_config* config,
                 tr_report** out) {
  if (panel == nullptr) return null_argument("panel");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    auto report = std::make_unique<tr_report>();
    if (const auto* p = std::get_if<thermorank::CrispPanel>(&panel->doc.panel)) {
      report->config = config != nullptr
                           ? to_engine(*config)
                           : thermorank::EngineConfig::crisp_defaults();
      report->report = thermorank::crisp::run(*p, report->config);
      report->panel = *p;
    } else {
      const auto& f = std::get<thermorank::FuzzyPanel>(panel->doc.panel);
      report->config = config != nullptr
                           ? to_engine(*config)
                           : thermorank::EngineConfig::fuzzy_defaults();
      report->report = thermorank::fuzzy::run(f, report->config);
      report->panel = f;
    }
    *out = report.release();
  });
}

void tr_report_free(tr_report* report) { delete report; }

size_t tr_report_size(const tr_report* report) {
  return report == nullptr ? 0 : report->summary().size();
}

tr_status tr_report_row(const tr_report* report, size_t index, tr_row* out) {
  if (report == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  const auto& s = report->summary();
  if (index >= s.size()) {
    return fail(TR_ERR_INVALID_ARGUMENT,
                "row " + std::to_string(index) + " out of range");
  }
  *out = {s.alternatives[index].c_str(), s.energy[index],
          s.exergy[index],              s.entropy[index],
          s.rank_by_energy[index],      s.rank_by_exergy[index]};
  return TR_OK;
}

const char* tr_report_aggregation(const tr_report* report) {
  if (report == nullptr) return nullptr;
  const auto used = std::visit(
      [](const auto& r) { return r.aggregation_used; }, report->report);
  return thermorank::to_string(used).data();
}

size_t tr_report_warning_count(const tr_report* report) {
  return report == nullptr ? 0 : report->warnings().size();
}

const char* tr_report_warning_code(const tr_report* report, size_t index) {
  if (report == nullptr || index >= report->warnings().size()) return nullptr;
  return report->warnings()[index].code.c_str();
}

const char* tr_report_warning_message(const tr_report* report, size_t index) {
  if (report == nullptr || index >= report->warnings().size()) return nullptr;
  return report->warnings()[index].message.c_str();
}

tr_status tr_report_to_json(const tr_report* report, int detail, char** out) {
  if (report == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    std::string text;
    if (const auto* r = std::get_if<thermorank::crisp::Report>(&report->report)) {
      text = thermorank::report_json(std::get<thermorank::CrispPanel>(report->panel),
                                     *r, report->config, detail != 0);
    } else {
      text = thermorank::report_json(
          std::get<thermorank::FuzzyPanel>(report->panel),
          std::get<thermorank::fuzzy::Report>(report->report), report->config,
          detail != 0);
    }
    *out = copy_string(text);
  });
}

tr_status tr_topsis_run(const tr_panel* panel, tr_normalization normalization,
                        tr_topsis** out) {
  if (panel == nullptr) return null_argument("panel");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const auto* p = std::get_if<thermorank::CrispPanel>(&panel->doc.panel);
    if (p == nullptr) {
      throw Error(ErrorCode::kValidation,
                  "the TOPSIS baseline needs a crisp panel");
    }
    const auto norm = checked_enum<thermorank::topsis::Normalization>(
        normalization, 2, "normalization");
    auto result = std::make_unique<tr_topsis>();
    result->result = thermorank::topsis::run(*p, norm);
    result->panel = *p;
    result->normalization = norm;
    *out = result.release();
  });
}

void tr_topsis_free(tr_topsis* result) { delete result; }

size_t tr_topsis_size(const tr_topsis* result) {
  return result == nullptr ? 0 : result->result.result.rank.size();
}

tr_status tr_topsis_row_at(const tr_topsis* result, size_t index,
                           tr_topsis_row* out) {
  if (result == nullptr) return null_argument("result");
  if (out == nullptr) return null_argument("out");
  const auto& r = result->result.result;
  if (index >= r.rank.size()) {
    return fail(TR_ERR_INVALID_ARGUMENT,
                "row " + std::to_string(index) + " out of range");
  }
  *out = {result->panel.alternatives[index].c_str(), r.closeness[index],
          r.separation_positive[index], r.separation_negative[index],
          r.rank[index]};
  return TR_OK;
}

int tr_topsis_degenerate(const tr_topsis* result) {
  return result != nullptr && result->result.result.degenerate ? 1 : 0;
}

tr_status tr_topsis_to_json(const tr_topsis* result, char** out) {
  if (result == nullptr) return null_argument("result");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = copy_string(thermorank::topsis_json(result->panel, result->result,
                                               result->normalization));
  });
}

}  // extern "C"
