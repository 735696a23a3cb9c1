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

// thermorank: rank decision panels by energy, exergy and entropy indicators.

#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "thermorank.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;
constexpr int kExitParse = 3;

int exit_code(tr_status status) {
  switch (status) {
    case TR_OK:
      return kExitOk;
    case TR_ERR_PARSE:
      return kExitParse;
    case TR_ERR_INTERNAL:
      return kExitInternal;
    default:
      return kExitValidation;
  }
}

struct Failure {
  int code;
  std::string message;
};

void check(tr_status status) {
  if (status != TR_OK) {
    throw Failure{exit_code(status), std::string(tr_status_name(status)) +
                                         ": " + tr_last_error()};
  }
}

[[noreturn]] void usage_error(const std::string& message) {
  throw Failure{kExitValidation, "usage: " + message};
}

struct PanelDeleter {
  void operator()(tr_panel* p) const { tr_panel_free(p); }
};
struct ReportDeleter {
  void operator()(tr_report* r) const { tr_report_free(r); }
};
struct TopsisDeleter {
  void operator()(tr_topsis* t) const { tr_topsis_free(t); }
};
using Panel = std::unique_ptr<tr_panel, PanelDeleter>;
using Report = std::unique_ptr<tr_report, ReportDeleter>;
using Topsis = std::unique_ptr<tr_topsis, TopsisDeleter>;

std::string take_string(char* s) {
  std::string out(s);
  tr_string_free(s);
  return out;
}

// ------------------------------------------------------------ options

struct Options {
  std::string fixture;
  std::string input;
  std::string criteria;
  std::vector<std::string> methods;
  std::string quality_ref;
  std::string quality_basis;
  std::string aggregation;
  std::string weight_norm;
  std::string normalization = "linear";
  std::string format = "table";
  int precision = -1;
  std::vector<std::string> edits;
};

void add_input_options(CLI::App* cmd, Options& o) {
  auto* fixture = cmd->add_option("--fixture", o.fixture,
                                  "Built-in dataset (see `fixtures`)");
  auto* input = cmd->add_option(
      "--input", o.input,
      "Panel file: JSON, or long-format CSV with --criteria ('-' reads stdin)");
  fixture->excludes(input);
  cmd->add_option("--criteria", o.criteria,
                  "Criteria sidecar CSV (criterion,kind,<dm ids...>)")
      ->needs(input);
}

void add_engine_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--quality-ref", o.quality_ref,
                  "Reference mean for quality: experts | alternatives")
      ->check(CLI::IsMember({"experts", "alternatives"}));
  cmd->add_option("--quality-basis", o.quality_basis,
                  "Ratings quality is measured on: raw | normalized "
                  "(default: raw for crisp, normalized for fuzzy)")
      ->check(CLI::IsMember({"raw", "normalized"}));
  cmd->add_option("--aggregation", o.aggregation,
                  "Criterion aggregation: auto | weighted-sum | mean")
      ->check(CLI::IsMember({"auto", "weighted-sum", "mean"}));
  cmd->add_option("--weight-norm", o.weight_norm,
                  "Weight preprocessing: none | column-max "
                  "(default: none for crisp, column-max for fuzzy)")
      ->check(CLI::IsMember({"none", "column-max"}));
}

void add_output_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format: table | json | csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--precision", o.precision,
                  "Decimals in table and CSV output "
                  "(default: 3, fuzzy triplets 2)")
      ->check(CLI::Range(0, 17));
}

void add_topsis_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--normalization", o.normalization,
                  "TOPSIS normalization: linear | vector")
      ->check(CLI::IsMember({"linear", "vector"}));
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) usage_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Panel load_panel(const Options& o) {
  if (o.fixture.empty() == o.input.empty()) {
    usage_error("give exactly one of --fixture or --input");
  }
  tr_panel* raw = nullptr;
  if (!o.fixture.empty()) {
    check(tr_panel_load_fixture(o.fixture.c_str(), &raw));
  } else if (!o.criteria.empty() || ends_with(o.input, ".csv")) {
    if (o.criteria.empty()) usage_error("CSV input needs --criteria");
    const std::string ratings = read_file(o.input);
    const std::string criteria = read_file(o.criteria);
    std::string name = o.input;
    if (const auto slash = name.find_last_of('/'); slash != std::string::npos) {
      name = name.substr(slash + 1);
    }
    check(tr_panel_parse_csv(ratings.data(), ratings.size(), criteria.data(),
                             criteria.size(), name.c_str(), &raw));
  } else {
    const std::string text = read_file(o.input);
    check(tr_panel_parse_json(text.data(), text.size(), &raw));
  }
  return Panel(raw);
}

tr_config engine_config(const tr_panel* panel, const Options& o) {
  tr_config c;
  check(tr_config_defaults(tr_panel_mode(panel), &c));
  if (!o.quality_ref.empty()) {
    c.quality_reference = o.quality_ref == "experts"
                              ? TR_QUALITY_ACROSS_EXPERTS
                              : TR_QUALITY_ACROSS_ALTERNATIVES;
  }
  if (!o.quality_basis.empty()) {
    c.quality_basis =
        o.quality_basis == "raw" ? TR_BASIS_RAW : TR_BASIS_NORMALIZED;
  }
  if (!o.aggregation.empty()) {
    c.aggregation = o.aggregation == "auto"           ? TR_AGGREGATION_AUTO
                    : o.aggregation == "weighted-sum" ? TR_AGGREGATION_WEIGHTED_SUM
                                                      : TR_AGGREGATION_MEAN_OF_WEIGHTED;
  }
  if (!o.weight_norm.empty()) {
    c.weight_normalization =
        o.weight_norm == "none" ? TR_WEIGHTS_AS_GIVEN : TR_WEIGHTS_COLUMN_MAX;
  }
  return c;
}

Report run(const tr_panel* panel, const Options& o) {
  const tr_config c = engine_config(panel, o);
  tr_report* raw = nullptr;
  check(tr_run(panel, &c, &raw));
  Report report(raw);
  for (size_t i = 0; i < tr_report_warning_count(report.get()); ++i) {
    std::cerr << "thermorank: warning: " << tr_report_warning_code(report.get(), i)
              << ": " << tr_report_warning_message(report.get(), i) << "\n";
  }
  return report;
}

Topsis run_topsis(const tr_panel* panel, const Options& o) {
  tr_topsis* raw = nullptr;
  check(tr_topsis_run(panel,
                      o.normalization == "vector" ? TR_NORMALIZATION_VECTOR
                                                  : TR_NORMALIZATION_LINEAR,
                      &raw));
  return Topsis(raw);
}

std::vector<tr_row> rows_of(const tr_report* report) {
  std::vector<tr_row> rows(tr_report_size(report));
  for (size_t i = 0; i < rows.size(); ++i) check(tr_report_row(report, i, &rows[i]));
  return rows;
}

std::vector<tr_topsis_row> rows_of(const tr_topsis* result) {
  std::vector<tr_topsis_row> rows(tr_topsis_size(result));
  for (size_t i = 0; i < rows.size(); ++i) {
    check(tr_topsis_row_at(result, i, &rows[i]));
  }
  return rows;
}

Json report_json(const tr_report* report, bool detail) {
  char* text = nullptr;
  check(tr_report_to_json(report, detail ? 1 : 0, &text));
  return Json::parse(take_string(text));
}

// ------------------------------------------------------------ formatting

bool color_enabled() {
  return std::getenv("THERMORANK_NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
}

std::string fixed(double v, int precision) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  // Avoid printing "-0.000".
  std::string s(buf);
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') {
    s.erase(0, 1);
  }
  return s;
}

std::string triplet_text(const Json& t, int precision) {
  auto part = [&](const Json& v) {
    return v.is_null() ? std::string("nan") : fixed(v.get<double>(), precision);
  };
  return "(" + part(t[0]) + ", " + part(t[1]) + ", " + part(t[2]) + ")";
}

struct Cell {
  std::string text;
  bool marked = false;
};

class Table {
 public:
  explicit Table(std::vector<std::string> headers)
      : headers_(std::move(headers)), left_(headers_.size(), false) {
    if (!left_.empty()) left_[0] = true;
  }

  /// Left-aligns identifier and free-text columns.
  Table& left(std::initializer_list<std::size_t> columns) {
    for (std::size_t c : columns) left_.at(c) = true;
    return *this;
  }

  void add(std::vector<Cell> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    const bool color = color_enabled();
    std::vector<std::size_t> width(headers_.size());
    for (std::size_t c = 0; c < headers_.size(); ++c) width[c] = headers_[c].size();
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        width[c] = std::max(width[c], shown(row[c]).size());
      }
    }
    for (std::size_t c = 0; c < headers_.size(); ++c) {
      if (c > 0) os << "  ";
      pad(os, headers_[c], width[c], c);
    }
    os << "\n";
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        const std::string text = shown(row[c]);
        if (c > 0) os << "  ";
        if (color && row[c].marked) os << "\x1b[1;33m";
        pad(os, text, width[c], c);
        if (color && row[c].marked) os << "\x1b[0m";
      }
      os << "\n";
    }
  }

 private:
  static std::string shown(const Cell& cell) {
    return cell.marked ? cell.text + "*" : cell.text;
  }

  void pad(std::ostream& os, const std::string& text, std::size_t width,
           std::size_t column) const {
    const std::string gap(width > text.size() ? width - text.size() : 0, ' ');
    if (left_[column]) {
      // No trailing padding on the last column.
      os << text << (column + 1 == left_.size() ? "" : gap);
    } else {
      os << gap << text;
    }
  }

  std::vector<std::string> headers_;
  std::vector<bool> left_;
  std::vector<std::vector<Cell>> rows_;
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string order_line(const std::vector<std::string>& names,
                       const std::vector<int>& ranks) {
  std::vector<std::size_t> order(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    order[static_cast<std::size_t>(ranks[i] - 1)] = i;
  }
  std::string out;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    out += (pos == 0 ? "" : " > ") + names[order[pos]];
  }
  return out;
}

std::vector<std::string> order_names(const std::vector<std::string>& names,
                                     const std::vector<int>& ranks) {
  std::vector<std::string> out(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    out[static_cast<std::size_t>(ranks[i] - 1)] = names[i];
  }
  return out;
}

void print_header(const tr_panel* panel, const tr_report* report,
                  const Options& o) {
  const tr_config c = engine_config(panel, o);
  auto count = [](std::size_t n, const char* one, const char* many) {
    return std::to_string(n) + " " + (n == 1 ? one : many);
  };
  std::cout << tr_panel_name(panel) << " ("
            << (tr_panel_mode(panel) == TR_MODE_FUZZY ? "fuzzy" : "crisp")
            << ", "
            << count(tr_panel_alternative_count(panel), "alternative",
                     "alternatives")
            << ", "
            << count(tr_panel_dm_count(panel), "decision maker",
                     "decision makers")
            << ", "
            << count(tr_panel_criterion_count(panel), "criterion", "criteria")
            << ")\n";
  std::cout << "quality reference: "
            << (c.quality_reference == TR_QUALITY_ACROSS_EXPERTS ? "experts"
                                                                 : "alternatives")
            << ", basis: "
            << (c.quality_basis == TR_BASIS_RAW ? "raw" : "normalized")
            << ", weights: "
            << (c.weight_normalization == TR_WEIGHTS_AS_GIVEN ? "as given"
                                                              : "column-max")
            << ", aggregation: " << tr_report_aggregation(report) << "\n\n";
}

int precision_or(const Options& o, int fallback) {
  return o.precision >= 0 ? o.precision : fallback;
}

// ------------------------------------------------------------ commands

std::string method_of(const Options& o) {
  if (o.methods.size() > 1) usage_error("rank takes a single --method");
  const std::string m = o.methods.empty() ? "exergy" : o.methods.front();
  return m;
}

int cmd_rank(const Options& o) {
  Panel panel = load_panel(o);
  check(tr_panel_validate(panel.get(), 2));
  const std::string method = method_of(o);
  const int p = precision_or(o, 3);
  std::vector<std::string> names;
  for (size_t i = 0; i < tr_panel_alternative_count(panel.get()); ++i) {
    names.emplace_back(tr_panel_alternative(panel.get(), i));
  }

  if (method == "topsis") {
    Topsis t = run_topsis(panel.get(), o);
    const auto rows = rows_of(t.get());
    std::vector<int> ranks;
    for (const auto& r : rows) ranks.push_back(r.rank);
    if (tr_topsis_degenerate(t.get())) {
      std::cerr << "thermorank: warning: DegenerateIdeals: positive and "
                   "negative ideals coincide; ranks follow input order\n";
    }
    if (o.format == "json") {
      char* text = nullptr;
      check(tr_topsis_to_json(t.get(), &text));
      Json j = Json::parse(take_string(text));
      Json out = {{"panel", tr_panel_name(panel.get())}, {"method", "topsis"}};
      for (auto& [k, v] : j.items()) {
        if (k != "method") out[k] = v;
      }
      out["order"] = order_names(names, ranks);
      std::cout << out.dump(2) << "\n";
    } else if (o.format == "csv") {
      std::cout << "alternative,closeness,S_plus,S_minus,rank\n";
      for (const auto& r : rows) {
        std::cout << csv_escape(r.alternative) << "," << fixed(r.closeness, p)
                  << "," << fixed(r.separation_positive, p) << ","
                  << fixed(r.separation_negative, p) << "," << r.rank << "\n";
      }
    } else {
      std::cout << tr_panel_name(panel.get()) << " (TOPSIS, "
                << o.normalization << " normalization, decision-maker mean)\n\n";
      Table table({"alternative", "closeness", "S+", "S-", "rank"});
      for (const auto& r : rows) {
        table.add({{r.alternative}, {fixed(r.closeness, p)},
                   {fixed(r.separation_positive, p)},
                   {fixed(r.separation_negative, p)}, {std::to_string(r.rank)}});
      }
      table.print(std::cout);
      std::cout << "\norder by topsis: " << order_line(names, ranks) << "\n";
    }
    return kExitOk;
  }

  if (method != "exergy" && method != "energy") {
    usage_error("--method must be exergy, energy or topsis");
  }
  Report report = run(panel.get(), o);
  const auto rows = rows_of(report.get());
  std::vector<int> ranks;
  for (const auto& r : rows) {
    ranks.push_back(method == "exergy" ? r.rank_exergy : r.rank_energy);
  }
  if (o.format == "json") {
    Json j = report_json(report.get(), false);
    Json out = {{"panel", tr_panel_name(panel.get())}, {"method", method}};
    for (auto& [k, v] : j.items()) out[k] = v;
    out["order"] = order_names(names, ranks);
    std::cout << out.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "alternative,U,X,S,rank_U,rank_X\n";
    for (const auto& r : rows) {
      std::cout << csv_escape(r.alternative) << "," << fixed(r.energy, p) << ","
                << fixed(r.exergy, p) << "," << fixed(r.entropy, p) << ","
                << r.rank_energy << "," << r.rank_exergy << "\n";
    }
  } else {
    print_header(panel.get(), report.get(), o);
    Table table({"alternative", "U", "X", "S", "rank_U", "rank_X"});
    for (const auto& r : rows) {
      table.add({{r.alternative}, {fixed(r.energy, p)}, {fixed(r.exergy, p)},
                 {fixed(r.entropy, p)}, {std::to_string(r.rank_energy)},
                 {std::to_string(r.rank_exergy)}});
    }
    table.print(std::cout);
    std::cout << "\norder by " << method << ": " << order_line(names, ranks)
              << "\n";
  }
  return kExitOk;
}

int cmd_indicators(const Options& o) {
  Panel panel = load_panel(o);
  Report report = run(panel.get(), o);
  Json j = report_json(report.get(), true);
  const bool fuzzy = tr_panel_mode(panel.get()) == TR_MODE_FUZZY;
  const int p = precision_or(o, 3);
  const int tp = precision_or(o, 2);

  if (o.format == "json") {
    Json out = {{"panel", tr_panel_name(panel.get())}};
    for (auto& [k, v] : j.items()) out[k] = v;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  auto value = [&](const Json& v) {
    if (v.is_array()) return triplet_text(v, tp);
    return v.is_null() ? std::string("nan") : fixed(v.get<double>(), p);
  };
  std::vector<std::string> cols = {"dm", "alternative", "criterion", "rating",
                                   "normalized", "U", "q", "X"};
  if (fuzzy) cols.push_back("S");

  if (o.format == "csv") {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::cout << (c ? "," : "") << cols[c];
    }
    std::cout << "\n";
    for (const auto& cell : j["cells"]) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const Json& v = cell[cols[c]];
        std::string text = v.is_string() ? v.get<std::string>() : value(v);
        if (v.is_array()) {
          text = triplet_text(v, tp);
          text = text.substr(1, text.size() - 2);
          std::replace(text.begin(), text.end(), ',', ';');
          text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
        }
        std::cout << (c ? "," : "") << csv_escape(text);
      }
      std::cout << "\n";
    }
    return kExitOk;
  }

  print_header(panel.get(), report.get(), o);
  std::cout << "cells\n";
  Table cells(cols);
  cells.left({1, 2});
  for (const auto& cell : j["cells"]) {
    std::vector<Cell> row;
    for (const auto& c : cols) {
      const Json& v = cell[c];
      std::string text = v.is_string() ? v.get<std::string>() : value(v);
      if (c == "rating" && cell.contains("label")) {
        text = cell["label"].get<std::string>() + " " + text;
      }
      row.push_back({text});
    }
    cells.add(std::move(row));
  }
  cells.print(std::cout);

  std::cout << "\nper decision maker\n";
  std::vector<std::string> dm_cols = {"dm", "alternative", "U", "X"};
  if (fuzzy) {
    dm_cols.push_back("s(U)");
    dm_cols.push_back("s(X)");
  }
  Table by_dm(dm_cols);
  by_dm.left({1});
  for (const auto& r : j["by_dm"]) {
    std::vector<Cell> row = {{r["dm"].get<std::string>()},
                             {r["alternative"].get<std::string>()},
                             {value(r["U"])},
                             {value(r["X"])}};
    if (fuzzy) {
      row.push_back({value(r["U_score"])});
      row.push_back({value(r["X_score"])});
    }
    by_dm.add(std::move(row));
  }
  by_dm.print(std::cout);

  std::cout << "\nsummary\n";
  Table summary({"alternative", "U", "X", "S", "rank_U", "rank_X"});
  for (const auto& r : rows_of(report.get())) {
    summary.add({{r.alternative}, {fixed(r.energy, p)}, {fixed(r.exergy, p)},
                 {fixed(r.entropy, p)}, {std::to_string(r.rank_energy)},
                 {std::to_string(r.rank_exergy)}});
  }
  summary.print(std::cout);
  if (!j["negative_quality_cells"].empty()) {
    std::cout << "\nnegative quality: ";
    for (std::size_t i = 0; i < j["negative_quality_cells"].size(); ++i) {
      std::cout << (i ? ", " : "")
                << j["negative_quality_cells"][i].get<std::string>();
    }
    std::cout << "\n";
  }
  return kExitOk;
}

struct Column {
  std::string header;
  std::vector<int> ranks;
};

int cmd_compare(const Options& o) {
  Panel panel = load_panel(o);
  check(tr_panel_validate(panel.get(), 2));

  const char* ref_method = nullptr;
  const int* ref_ranks = nullptr;
  size_t ref_count = 0;
  const bool has_reference =
      tr_panel_reference(panel.get(), &ref_method, &ref_ranks, &ref_count) ==
      TR_OK;
  std::vector<std::string> methods = o.methods;
  if (methods.empty()) methods = {"energy", "exergy"};
  if (!has_reference && methods.size() < 2) {
    throw Failure{kExitValidation,
                  std::string("MissingReference: panel '") +
                      tr_panel_name(panel.get()) +
                      "' has no published ranking; give two --method flags"};
  }

  const std::size_t m = tr_panel_alternative_count(panel.get());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    names.emplace_back(tr_panel_alternative(panel.get(), i));
  }

  Report report = run(panel.get(), o);
  const auto rows = rows_of(report.get());
  std::optional<std::vector<tr_topsis_row>> topsis_rows;

  std::vector<Column> columns;
  for (const auto& method : methods) {
    Column col;
    if (method == "energy" || method == "exergy") {
      col.header = method == "energy" ? "rank_U" : "rank_X";
      for (const auto& r : rows) {
        col.ranks.push_back(method == "energy" ? r.rank_energy : r.rank_exergy);
      }
    } else if (method == "topsis") {
      if (!topsis_rows) {
        Topsis t = run_topsis(panel.get(), o);
        topsis_rows = rows_of(t.get());
      }
      col.header = "rank_topsis";
      for (const auto& r : *topsis_rows) col.ranks.push_back(r.rank);
    } else {
      usage_error("--method must be exergy, energy or topsis");
    }
    columns.push_back(std::move(col));
  }
  std::optional<Column> reference;
  if (has_reference) {
    reference = Column{"reference", std::vector<int>(ref_ranks, ref_ranks + ref_count)};
  }
  // Cells are marked where they disagree with the reference ranking, or with
  // the first method when no reference is stored.
  const std::vector<int>& baseline =
      reference ? reference->ranks : columns.front().ranks;
  std::size_t marked = 0;
  auto is_marked = [&](const Column& col, std::size_t i) {
    return &col.ranks != &baseline && col.ranks[i] != baseline[i];
  };

  if (o.format == "json") {
    Json out = {{"panel", tr_panel_name(panel.get())}};
    if (reference) out["reference_method"] = ref_method;
    Json jrows = Json::array();
    Json disagreements = Json::array();
    for (std::size_t i = 0; i < m; ++i) {
      Json row = {{"alternative", names[i]},   {"U", rows[i].energy},
                  {"X", rows[i].exergy},       {"S", rows[i].entropy},
                  {"rank_U", rows[i].rank_energy}, {"rank_X", rows[i].rank_exergy}};
      for (const auto& col : columns) {
        row[col.header] = col.ranks[i];
        if (is_marked(col, i)) {
          disagreements.push_back({{"alternative", names[i]}, {"column", col.header}});
        }
      }
      if (reference) row["rank_reference"] = reference->ranks[i];
      jrows.push_back(std::move(row));
    }
    out["rows"] = std::move(jrows);
    out["disagreements"] = std::move(disagreements);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  std::vector<std::string> headers = {"alternative"};
  for (const auto& col : columns) headers.push_back(col.header);
  if (reference) headers.push_back("reference");
  if (o.format == "csv") {
    for (std::size_t c = 0; c < headers.size(); ++c) {
      std::cout << (c ? "," : "") << headers[c];
    }
    std::cout << "\n";
    for (std::size_t i = 0; i < m; ++i) {
      std::cout << csv_escape(names[i]);
      for (const auto& col : columns) std::cout << "," << col.ranks[i];
      if (reference) std::cout << "," << reference->ranks[i];
      std::cout << "\n";
    }
    return kExitOk;
  }

  print_header(panel.get(), report.get(), o);
  if (reference) std::cout << "reference: " << ref_method << "\n\n";
  Table table(headers);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Cell> row = {{names[i]}};
    for (const auto& col : columns) {
      const bool mark = is_marked(col, i);
      marked += mark ? 1 : 0;
      row.push_back({std::to_string(col.ranks[i]), mark});
    }
    if (reference) row.push_back({std::to_string(reference->ranks[i])});
    table.add(std::move(row));
  }
  table.print(std::cout);
  std::cout << "\n"
            << marked << " cell(s) marked * differ from the "
            << (reference ? "reference" : columns.front().header) << " ranking\n";
  return kExitOk;
}

int cmd_whatif(const Options& o) {
  Panel before_panel = load_panel(o);
  check(tr_panel_validate(before_panel.get(), 2));
  tr_panel* raw = nullptr;
  check(tr_panel_clone(before_panel.get(), &raw));
  Panel after_panel(raw);
  for (const auto& edit : o.edits) {
    check(tr_panel_apply_edit(after_panel.get(), edit.c_str()));
  }
  Report before = run(before_panel.get(), o);
  Report after = run(after_panel.get(), o);
  const auto b = rows_of(before.get());
  const auto a = rows_of(after.get());
  const int p = precision_or(o, 3);

  if (o.format == "json") {
    Json out = {{"panel", tr_panel_name(before_panel.get())},
                {"edits", o.edits},
                {"before", report_json(before.get(), false)["rows"]},
                {"after", report_json(after.get(), false)["rows"]}};
    Json delta = Json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
      delta.push_back({{"alternative", a[i].alternative},
                       {"dU", a[i].energy - b[i].energy},
                       {"dX", a[i].exergy - b[i].exergy},
                       {"dS", a[i].entropy - b[i].entropy},
                       {"d_rank_U", a[i].rank_energy - b[i].rank_energy},
                       {"d_rank_X", a[i].rank_exergy - b[i].rank_exergy}});
    }
    out["delta"] = std::move(delta);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  const std::vector<std::string> headers = {
      "alternative", "U_before", "U_after",       "X_before",
      "X_after",     "S_before", "S_after",       "rank_U_before",
      "rank_U_after", "rank_X_before", "rank_X_after"};
  if (o.format == "csv") {
    for (std::size_t c = 0; c < headers.size(); ++c) {
      std::cout << (c ? "," : "") << headers[c];
    }
    std::cout << "\n";
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::cout << csv_escape(a[i].alternative) << "," << fixed(b[i].energy, p)
                << "," << fixed(a[i].energy, p) << "," << fixed(b[i].exergy, p)
                << "," << fixed(a[i].exergy, p) << "," << fixed(b[i].entropy, p)
                << "," << fixed(a[i].entropy, p) << "," << b[i].rank_energy
                << "," << a[i].rank_energy << "," << b[i].rank_exergy << ","
                << a[i].rank_exergy << "\n";
    }
    return kExitOk;
  }

  print_header(before_panel.get(), after.get(), o);
  std::cout << "edits: ";
  if (o.edits.empty()) std::cout << "none";
  for (std::size_t i = 0; i < o.edits.size(); ++i) {
    std::cout << (i ? ", " : "") << o.edits[i];
  }
  std::cout << "\n\n";
  Table table(headers);
  for (std::size_t i = 0; i < a.size(); ++i) {
    table.add({{a[i].alternative},
               {fixed(b[i].energy, p)},
               {fixed(a[i].energy, p)},
               {fixed(b[i].exergy, p)},
               {fixed(a[i].exergy, p)},
               {fixed(b[i].entropy, p)},
               {fixed(a[i].entropy, p)},
               {std::to_string(b[i].rank_energy)},
               {std::to_string(a[i].rank_energy),
                a[i].rank_energy != b[i].rank_energy},
               {std::to_string(b[i].rank_exergy)},
               {std::to_string(a[i].rank_exergy),
                a[i].rank_exergy != b[i].rank_exergy}});
  }
  table.print(std::cout);
  std::vector<std::string> names;
  std::vector<int> rb;
  std::vector<int> ra;
  for (std::size_t i = 0; i < a.size(); ++i) {
    names.emplace_back(a[i].alternative);
    rb.push_back(b[i].rank_exergy);
    ra.push_back(a[i].rank_exergy);
  }
  std::cout << "\norder by exergy before: " << order_line(names, rb)
            << "\norder by exergy after:  " << order_line(names, ra) << "\n";
  return kExitOk;
}

int cmd_fixtures(const Options& o) {
  Json list = Json::array();
  Table table({"name", "mode", "m", "n", "K", "reference", "description"});
  table.left({1, 5, 6});
  for (size_t f = 0; f < tr_fixture_count(); ++f) {
    tr_panel* raw = nullptr;
    check(tr_panel_load_fixture(tr_fixture_name(f), &raw));
    Panel panel(raw);
    const char* method = nullptr;
    const bool ref = tr_panel_reference(panel.get(), &method, nullptr, nullptr) == TR_OK;
    const std::string mode =
        tr_panel_mode(panel.get()) == TR_MODE_FUZZY ? "fuzzy" : "crisp";
    list.push_back({{"name", tr_panel_name(panel.get())},
                    {"mode", mode},
                    {"alternatives", tr_panel_alternative_count(panel.get())},
                    {"criteria", tr_panel_criterion_count(panel.get())},
                    {"decision_makers", tr_panel_dm_count(panel.get())},
                    {"reference", ref ? Json(method) : Json(nullptr)},
                    {"description", tr_panel_description(panel.get())}});
    table.add({{tr_panel_name(panel.get())},
               {mode},
               {std::to_string(tr_panel_alternative_count(panel.get()))},
               {std::to_string(tr_panel_criterion_count(panel.get()))},
               {std::to_string(tr_panel_dm_count(panel.get()))},
               {ref ? method : "-"},
               {tr_panel_description(panel.get())}});
  }
  if (o.format == "json") {
    std::cout << list.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "name,mode,alternatives,criteria,decision_makers,reference\n";
    for (const auto& f : list) {
      std::cout << f["name"].get<std::string>() << "," << f["mode"].get<std::string>()
                << "," << f["alternatives"] << "," << f["criteria"] << ","
                << f["decision_makers"] << ","
                << (f["reference"].is_null() ? "" : csv_escape(f["reference"].get<std::string>()))
                << "\n";
    }
  } else {
    table.print(std::cout);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank decision panels by energy, exergy and entropy indicators"};
  app.name("thermorank");
  app.require_subcommand(1);
  app.set_version_flag("--version", "thermorank 0.1.0");
  Options o;

  auto* rank = app.add_subcommand("rank", "Rank alternatives by one method");
  add_input_options(rank, o);
  rank->add_option("--method", o.methods, "exergy (default) | energy | topsis")
      ->check(CLI::IsMember({"exergy", "energy", "topsis"}));
  add_engine_options(rank, o);
  add_topsis_options(rank, o);
  add_output_options(rank, o);

  auto* indicators = app.add_subcommand(
      "indicators", "Dump per-cell, per-decision-maker and summary indicators");
  add_input_options(indicators, o);
  add_engine_options(indicators, o);
  add_output_options(indicators, o);

  auto* compare = app.add_subcommand(
      "compare", "Side-by-side rankings, with the published ranking if stored");
  add_input_options(compare, o);
  compare
      ->add_option("--method", o.methods,
                   "Methods to compare (repeatable; default energy and exergy)")
      ->check(CLI::IsMember({"exergy", "energy", "topsis"}));
  add_engine_options(compare, o);
  add_topsis_options(compare, o);
  add_output_options(compare, o);

  auto* whatif = app.add_subcommand(
      "whatif", "Apply rating edits and show before/after indicators");
  add_input_options(whatif, o);
  whatif->add_option("edits", o.edits, "Edits dm:alternative:criterion=value");
  add_engine_options(whatif, o);
  add_output_options(whatif, o);

  auto* fixtures = app.add_subcommand("fixtures", "List built-in datasets");
  add_output_options(fixtures, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "thermorank: error: usage: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (*rank) return cmd_rank(o);
    if (*indicators) return cmd_indicators(o);
    if (*compare) return cmd_compare(o);
    if (*whatif) return cmd_whatif(o);
    if (*fixtures) return cmd_fixtures(o);
    return kExitInternal;
  } catch (const Failure& f) {
    std::cerr << "thermorank: error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "thermorank: error: internal: " << e.what() << "\n";
    return kExitInternal;
  }
}
