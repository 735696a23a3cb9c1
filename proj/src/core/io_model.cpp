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

#include "thermorank/io_model.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <json.hpp>

#include "thermorank/error.hpp"

namespace thermorank::io {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::kValidation, message);
}

// ---------------------------------------------------------------- numbers

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Locale-independent decimal parse of the whole token.
std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(s.data(), s.data() + s.size(), value,
                      std::chars_format::general);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return value;
}

std::string format_number(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ec == std::errc() ? end : buf);
}

std::optional<Tfn> parse_triplet(std::string_view s) {
  const auto p1 = s.find(';');
  if (p1 == std::string_view::npos) return std::nullopt;
  const auto p2 = s.find(';', p1 + 1);
  if (p2 == std::string_view::npos || s.find(';', p2 + 1) != s.npos) {
    return std::nullopt;
  }
  const auto a = parse_number(s.substr(0, p1));
  const auto b = parse_number(s.substr(p1 + 1, p2 - p1 - 1));
  const auto c = parse_number(s.substr(p2 + 1));
  if (!a || !b || !c) return std::nullopt;
  return Tfn{*a, *b, *c};
}

std::string format_triplet(const Tfn& t) {
  return format_number(t.a) + ";" + format_number(t.b) + ";" +
         format_number(t.c);
}

// Resolved fuzzy value plus the label it came from (empty for triplets).
struct FuzzyValue {
  Tfn value;
  std::string label;
};

// ------------------------------------------------------------------- JSON

std::pair<std::size_t, std::size_t> position_of(std::string_view text,
                                                std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) invalid(where + ": missing key '" + key + "'");
  return *it;
}

std::string require_string(const Json& j, const std::string& where) {
  if (!j.is_string()) invalid(where + " must be a string");
  return j.get<std::string>();
}

const Json& require_array(const Json& j, const std::string& where) {
  if (!j.is_array()) invalid(where + " must be an array");
  return j;
}

const Json& require_object(const Json& j, const std::string& where) {
  if (!j.is_object()) invalid(where + " must be an object");
  return j;
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < require_array(j, where).size(); ++i) {
    out.push_back(
        require_string(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

double crisp_value(const Json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() || j.is_string()) {
    invalid(where + " must be a number in a crisp panel "
                    "(labels and triplets need mode \"fuzzy\")");
  }
  invalid(where + " must be a number");
}

FuzzyValue fuzzy_value(const Json& j, const LinguisticScale& scale,
                       const std::string& where) {
  if (j.is_string()) {
    const std::string label = j.get<std::string>();
    const Tfn* t = scale.find(label);
    if (t == nullptr) {
      invalid(where + ": unknown " + std::string(to_string(scale.kind())) +
              " label '" + label + "'");
    }
    return {*t, label};
  }
  if (j.is_array() && j.size() == 3 && j[0].is_number() && j[1].is_number() &&
      j[2].is_number()) {
    return {{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()}, ""};
  }
  invalid(where + " must be a label or a 3-array [a, b, c]");
}

LinguisticScale scale_from_json(const Json& j, ScaleKind kind,
                                const std::string& where) {
  require_object(j, where);
  std::vector<LinguisticScale::Entry> entries;
  for (const auto& [label, value] : j.items()) {
    const std::string at = where + "." + label;
    if (!value.is_array() || value.size() != 3) {
      invalid(at + " must be a 3-array [a, b, c]");
    }
    entries.emplace_back(label, Tfn{crisp_value(value[0], at + "[0]"),
                                    crisp_value(value[1], at + "[1]"),
                                    crisp_value(value[2], at + "[2]")});
  }
  try {
    return LinguisticScale(kind, std::move(entries));
  } catch (const Error& e) {
    invalid(where + ": " + e.what());
  }
}

// Checks that an object keyed by decision maker has exactly the listed ids.
void check_dm_keys(const Json& obj, const std::vector<std::string>& dms,
                   const std::string& where) {
  require_object(obj, where);
  const std::set<std::string> known(dms.begin(), dms.end());
  for (const auto& [key, value] : obj.items()) {
    if (known.count(key) == 0) {
      invalid(where + ": unknown decision maker '" + key + "'");
    }
  }
  for (const auto& dm : dms) {
    if (!obj.contains(dm)) {
      invalid(where + ": missing decision maker '" + dm + "'");
    }
  }
}

// Visits each weight and rating cell after checking the matrix shapes.
template <class OnWeight, class OnRating>
void walk_cells(const Json& root, const std::vector<std::string>& alternatives,
                const std::vector<CriterionSpec>& criteria,
                const std::vector<std::string>& dms, OnWeight on_weight,
                OnRating on_rating) {
  const std::size_t m = alternatives.size();
  const std::size_t n = criteria.size();
  const Json& weights = member(root, "weights", "document");
  const Json& ratings = member(root, "ratings", "document");
  check_dm_keys(weights, dms, "weights");
  check_dm_keys(ratings, dms, "ratings");
  for (std::size_t k = 0; k < dms.size(); ++k) {
    const std::string wat = "weights." + dms[k];
    const Json& wrow = require_array(weights.at(dms[k]), wat);
    if (wrow.size() != n) {
      invalid(wat + " has " + std::to_string(wrow.size()) +
              " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      on_weight(k, j, wrow[j], "weight " + dms[k] + ":" + criteria[j].id);
    }
    const std::string rat = "ratings." + dms[k];
    const Json& rows = require_array(ratings.at(dms[k]), rat);
    if (rows.size() != m) {
      invalid(rat + " has " + std::to_string(rows.size()) +
              " rows, expected " + std::to_string(m));
    }
    for (std::size_t i = 0; i < m; ++i) {
      const std::string at = rat + "[" + std::to_string(i) + "]";
      const Json& row = require_array(rows[i], at);
      if (row.size() != n) {
        invalid(at + " (alternative " + alternatives[i] + ") has " +
                std::to_string(row.size()) + " entries, expected " +
                std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        on_rating(k, i, j, row[j],
                  "rating " + dms[k] + ":" + alternatives[i] + ":" +
                      criteria[j].id);
      }
    }
  }
}

PanelDocument document_from_json(const Json& root) {
  require_object(root, "document");
  const Json& meta = require_object(member(root, "meta", "document"), "meta");

  PanelDocument doc;
  doc.meta.name = require_string(member(meta, "name", "meta"), "meta.name");
  if (meta.contains("description")) {
    doc.meta.description =
        require_string(meta.at("description"), "meta.description");
  }
  const std::string mode =
      require_string(member(meta, "mode", "meta"), "meta.mode");
  if (mode != "crisp" && mode != "fuzzy") {
    invalid("meta.mode must be \"crisp\" or \"fuzzy\" (got \"" + mode + "\")");
  }
  bool prenormalized = false;
  if (meta.contains("prenormalized")) {
    if (!meta.at("prenormalized").is_boolean()) {
      invalid("meta.prenormalized must be a boolean");
    }
    prenormalized = meta.at("prenormalized").get<bool>();
  }

  const auto alternatives =
      string_list(member(root, "alternatives", "document"), "alternatives");
  const auto dms = string_list(member(root, "decision_makers", "document"),
                               "decision_makers");
  std::vector<CriterionSpec> criteria;
  const Json& cj =
      require_array(member(root, "criteria", "document"), "criteria");
  for (std::size_t j = 0; j < cj.size(); ++j) {
    const std::string at = "criteria[" + std::to_string(j) + "]";
    require_object(cj[j], at);
    CriterionSpec spec;
    spec.id = require_string(member(cj[j], "id", at), at + ".id");
    const std::string kind =
        require_string(member(cj[j], "kind", at), at + ".kind");
    const auto parsed = criterion_kind_from_string(kind);
    if (!parsed) {
      invalid(at + ".kind must be \"benefit\" or \"cost\" (got \"" + kind +
              "\")");
    }
    spec.kind = *parsed;
    criteria.push_back(std::move(spec));
  }

  if (meta.contains("reference")) {
    const Json& ref = require_object(meta.at("reference"), "meta.reference");
    ReferenceRanking r;
    r.method = require_string(member(ref, "method", "meta.reference"),
                              "meta.reference.method");
    const Json& ranks = require_array(member(ref, "ranks", "meta.reference"),
                                      "meta.reference.ranks");
    for (const auto& v : ranks) {
      if (!v.is_number_integer()) invalid("meta.reference.ranks must be integers");
      r.ranks.push_back(v.get<int>());
    }
    if (r.ranks.size() != alternatives.size()) {
      invalid("meta.reference.ranks has " + std::to_string(r.ranks.size()) +
              " entries, expected " + std::to_string(alternatives.size()));
    }
    doc.meta.reference = std::move(r);
  }

  if (root.contains("scales")) {
    const Json& scales = require_object(root.at("scales"), "scales");
    for (const auto& [key, value] : scales.items()) {
      if (key == "rating") {
        doc.rating_scale = scale_from_json(value, ScaleKind::kRating,
                                           "scales.rating");
      } else if (key == "weight") {
        doc.weight_scale = scale_from_json(value, ScaleKind::kWeight,
                                           "scales.weight");
      } else {
        invalid("scales: unknown key '" + key + "'");
      }
    }
  }

  const std::size_t k = dms.size();
  const std::size_t m = alternatives.size();
  const std::size_t n = criteria.size();
  if (mode == "crisp") {
    if (doc.rating_scale || doc.weight_scale) {
      invalid("scales are only allowed in fuzzy panels");
    }
    CrispPanel p;
    p.ratings = Grid3<double>(k, m, n);
    p.weights = Grid2<double>(k, n);
    walk_cells(
        root, alternatives, criteria, dms,
        [&](std::size_t kk, std::size_t j, const Json& v, const std::string& at) {
          p.weights(kk, j) = crisp_value(v, at);
        },
        [&](std::size_t kk, std::size_t i, std::size_t j, const Json& v,
            const std::string& at) { p.ratings(kk, i, j) = crisp_value(v, at); });
    p.alternatives = alternatives;
    p.criteria = criteria;
    p.decision_makers = dms;
    p.prenormalized = prenormalized;
    p.validate();
    doc.panel = std::move(p);
  } else {
    FuzzyPanel p;
    p.ratings = Grid3<Tfn>(k, m, n);
    p.weights = Grid2<Tfn>(k, n);
    p.rating_labels = Grid3<std::string>(k, m, n);
    p.weight_labels = Grid2<std::string>(k, n);
    const LinguisticScale& rscale = doc.ratings_scale();
    const LinguisticScale& wscale = doc.weights_scale();
    walk_cells(
        root, alternatives, criteria, dms,
        [&](std::size_t kk, std::size_t j, const Json& v, const std::string& at) {
          auto f = fuzzy_value(v, wscale, at);
          p.weights(kk, j) = f.value;
          p.weight_labels(kk, j) = std::move(f.label);
        },
        [&](std::size_t kk, std::size_t i, std::size_t j, const Json& v,
            const std::string& at) {
          auto f = fuzzy_value(v, rscale, at);
          p.ratings(kk, i, j) = f.value;
          p.rating_labels(kk, i, j) = std::move(f.label);
        });
    p.alternatives = alternatives;
    p.criteria = criteria;
    p.decision_makers = dms;
    p.prenormalized = prenormalized;
    p.validate();
    doc.panel = std::move(p);
  }
  return doc;
}

Json fuzzy_json(const Tfn& t, const std::string& label,
                const LinguisticScale& scale) {
  if (!label.empty()) {
    const Tfn* known = scale.find(label);
    if (known != nullptr && *known == t) return label;
  }
  return Json::array({t.a, t.b, t.c});
}

Json scale_json(const LinguisticScale& scale) {
  Json out = Json::object();
  for (const auto& [label, t] : scale.entries()) {
    out[label] = Json::array({t.a, t.b, t.c});
  }
  return out;
}

// -------------------------------------------------------------------- CSV

struct CsvRow {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

// RFC 4180 style: comma separated, double quotes escape by doubling.
// Blank lines are skipped.
std::vector<CsvRow> read_csv(std::string_view text, const std::string& what) {
  std::vector<CsvRow> rows;
  std::size_t line = 1;
  std::size_t pos = 0;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") pos = 3;
  while (pos < text.size()) {
    CsvRow row;
    row.line = line;
    std::string field;
    std::size_t line_start = pos;
    bool quoted = false;
    bool was_quoted = false;
    for (;;) {
      if (pos >= text.size()) {
        if (quoted) {
          throw ParseError(what + ": unterminated quoted field", row.line,
                           pos - line_start + 1);
        }
        row.fields.push_back(std::move(field));
        break;
      }
      const char ch = text[pos];
      if (quoted) {
        if (ch == '"') {
          if (pos + 1 < text.size() && text[pos + 1] == '"') {
            field += '"';
            pos += 2;
          } else {
            quoted = false;
            ++pos;
          }
        } else {
          if (ch == '\n') {
            ++line;
            line_start = pos + 1;
          }
          field += ch;
          ++pos;
        }
        continue;
      }
      if (ch == '"') {
        if (was_quoted || !trim(field).empty()) {
          throw ParseError(what + ": unexpected quote", line,
                           pos - line_start + 1);
        }
        field.clear();
        quoted = true;
        was_quoted = true;
        ++pos;
      } else if (ch == ',') {
        row.fields.push_back(std::move(field));
        field.clear();
        was_quoted = false;
        ++pos;
      } else if (ch == '\n') {
        row.fields.push_back(std::move(field));
        ++pos;
        ++line;
        break;
      } else {
        if (was_quoted && ch != ' ' && ch != '\t' && ch != '\r') {
          throw ParseError(what + ": text after closing quote", line,
                           pos - line_start + 1);
        }
        field += ch;
        ++pos;
      }
    }
    for (auto& f : row.fields) f = std::string(trim(f));
    const bool blank = row.fields.size() == 1 && row.fields[0].empty();
    if (!blank) rows.push_back(std::move(row));
  }
  return rows;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos && trim(s) == s) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// Column of field `index` in a row, for diagnostics.
std::size_t column_of(const CsvRow& row, std::size_t index) {
  std::size_t col = 1;
  for (std::size_t f = 0; f < index && f < row.fields.size(); ++f) {
    col += row.fields[f].size() + 1;
  }
  return col;
}

std::size_t index_of(const std::vector<std::string>& ids,
                     const std::string& id) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == id) return i;
  }
  return ids.size();
}

std::size_t criterion_index(const std::vector<CriterionSpec>& criteria,
                            const std::string& id) {
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    if (criteria[j].id == id) return j;
  }
  return criteria.size();
}

FuzzyValue fuzzy_token(const std::string& token, const LinguisticScale& scale,
                       const std::string& where) {
  if (auto t = parse_triplet(token)) return {*t, ""};
  if (const Tfn* t = scale.find(token)) return {*t, token};
  if (parse_number(token)) {
    invalid(where + ": plain number '" + token +
            "' in a fuzzy panel (use a label or a;b;c)");
  }
  invalid(where + ": unknown " + std::string(to_string(scale.kind())) +
          " label '" + token + "'");
}

double crisp_token(const std::string& token, const std::string& where) {
  const auto v = parse_number(token);
  if (!v) invalid(where + ": '" + token + "' is not a number");
  return *v;
}

}  // namespace

std::string_view to_string(PanelMode mode) noexcept {
  return mode == PanelMode::kCrisp ? "crisp" : "fuzzy";
}

const std::vector<std::string>& PanelDocument::alternatives() const {
  return std::visit(
      [](const auto& p) -> const std::vector<std::string>& {
        return p.alternatives;
      },
      panel);
}

const std::vector<std::string>& PanelDocument::decision_makers() const {
  return std::visit(
      [](const auto& p) -> const std::vector<std::string>& {
        return p.decision_makers;
      },
      panel);
}

const std::vector<CriterionSpec>& PanelDocument::criteria() const {
  return std::visit(
      [](const auto& p) -> const std::vector<CriterionSpec>& {
        return p.criteria;
      },
      panel);
}

const LinguisticScale& PanelDocument::ratings_scale() const {
  return rating_scale ? *rating_scale : LinguisticScale::ratings();
}

const LinguisticScale& PanelDocument::weights_scale() const {
  return weight_scale ? *weight_scale : LinguisticScale::weights();
}

PanelDocument parse_json(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = position_of(text, e.byte);
    std::string what = e.what();
    // Drop the library's "[json.exception.parse_error.101] " prefix.
    if (const auto cut = what.find("] "); cut != std::string::npos) {
      what = what.substr(cut + 2);
    }
    // The position is reported separately.
    if (what.rfind("parse error at ", 0) == 0) {
      if (const auto cut = what.find(": "); cut != std::string::npos) {
        what = "parse error: " + what.substr(cut + 2);
      }
    }
    throw ParseError("malformed JSON: " + what, line, column);
  }
  try {
    return document_from_json(root);
  } catch (const nlohmann::json::exception& e) {
    invalid(std::string("invalid document: ") + e.what());
  }
}

std::string serialize_json(const PanelDocument& doc) {
  Json root = Json::object();
  Json meta = Json::object();
  meta["name"] = doc.meta.name;
  meta["mode"] = std::string(to_string(doc.mode()));
  const bool prenormalized =
      std::visit([](const auto& p) { return p.prenormalized; }, doc.panel);
  if (prenormalized) meta["prenormalized"] = true;
  if (!doc.meta.description.empty()) meta["description"] = doc.meta.description;
  if (doc.meta.reference) {
    meta["reference"] = {{"method", doc.meta.reference->method},
                         {"ranks", doc.meta.reference->ranks}};
  }
  root["meta"] = std::move(meta);
  root["alternatives"] = doc.alternatives();
  Json criteria = Json::array();
  for (const auto& c : doc.criteria()) {
    criteria.push_back({{"id", c.id}, {"kind", std::string(to_string(c.kind))}});
  }
  root["criteria"] = std::move(criteria);
  root["decision_makers"] = doc.decision_makers();

  Json weights = Json::object();
  Json ratings = Json::object();
  if (const auto* p = std::get_if<CrispPanel>(&doc.panel)) {
    for (std::size_t k = 0; k < p->dm_count(); ++k) {
      Json w = Json::array();
      for (double v : p->weights.row(k)) w.push_back(v);
      weights[p->decision_makers[k]] = std::move(w);
      Json rows = Json::array();
      for (std::size_t i = 0; i < p->alternative_count(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < p->criterion_count(); ++j) {
          row.push_back(p->ratings(k, i, j));
        }
        rows.push_back(std::move(row));
      }
      ratings[p->decision_makers[k]] = std::move(rows);
    }
  } else {
    const auto& f = std::get<FuzzyPanel>(doc.panel);
    const bool wlabels = !f.weight_labels.values().empty();
    const bool rlabels = !f.rating_labels.values().empty();
    static const std::string kNone;
    for (std::size_t k = 0; k < f.dm_count(); ++k) {
      Json w = Json::array();
      for (std::size_t j = 0; j < f.criterion_count(); ++j) {
        w.push_back(fuzzy_json(f.weights(k, j),
                               wlabels ? f.weight_labels(k, j) : kNone,
                               doc.weights_scale()));
      }
      weights[f.decision_makers[k]] = std::move(w);
      Json rows = Json::array();
      for (std::size_t i = 0; i < f.alternative_count(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < f.criterion_count(); ++j) {
          row.push_back(fuzzy_json(f.ratings(k, i, j),
                                   rlabels ? f.rating_labels(k, i, j) : kNone,
                                   doc.ratings_scale()));
        }
        rows.push_back(std::move(row));
      }
      ratings[f.decision_makers[k]] = std::move(rows);
    }
  }
  root["weights"] = std::move(weights);
  root["ratings"] = std::move(ratings);
  if (doc.rating_scale || doc.weight_scale) {
    Json scales = Json::object();
    if (doc.rating_scale) scales["rating"] = scale_json(*doc.rating_scale);
    if (doc.weight_scale) scales["weight"] = scale_json(*doc.weight_scale);
    root["scales"] = std::move(scales);
  }
  return root.dump(2) + "\n";
}

PanelDocument parse_csv(std::string_view ratings_csv,
                        std::string_view criteria_csv, std::string_view name) {
  const auto crows = read_csv(criteria_csv, "criteria file");
  const auto rrows = read_csv(ratings_csv, "ratings file");
  if (crows.empty()) throw ParseError("criteria file: empty", 1, 1);
  if (rrows.empty()) throw ParseError("ratings file: empty", 1, 1);

  const CsvRow& cheader = crows.front();
  if (cheader.fields.size() < 3 || cheader.fields[0] != "criterion" ||
      cheader.fields[1] != "kind") {
    throw ParseError(
        "criteria file: header must be 'criterion,kind,<decision maker ids>'",
        cheader.line, 1);
  }
  const CsvRow& rheader = rrows.front();
  const std::vector<std::string> expected = {"dm", "alternative", "criterion",
                                             "value"};
  if (rheader.fields != expected) {
    throw ParseError(
        "ratings file: header must be 'dm,alternative,criterion,value'",
        rheader.line, 1);
  }

  std::vector<std::string> dms(cheader.fields.begin() + 2,
                               cheader.fields.end());
  std::vector<CriterionSpec> criteria;
  for (std::size_t r = 1; r < crows.size(); ++r) {
    const CsvRow& row = crows[r];
    if (row.fields.size() != cheader.fields.size()) {
      throw ParseError("criteria file: expected " +
                           std::to_string(cheader.fields.size()) +
                           " fields, got " + std::to_string(row.fields.size()),
                       row.line, column_of(row, row.fields.size()));
    }
    const auto kind = criterion_kind_from_string(row.fields[1]);
    if (!kind) {
      invalid("criteria file line " + std::to_string(row.line) +
              ": kind must be benefit or cost (got '" + row.fields[1] + "')");
    }
    criteria.push_back({row.fields[0], *kind});
  }

  std::vector<std::string> alternatives;
  for (std::size_t r = 1; r < rrows.size(); ++r) {
    const CsvRow& row = rrows[r];
    if (row.fields.size() != 4) {
      throw ParseError("ratings file: expected 4 fields, got " +
                           std::to_string(row.fields.size()),
                       row.line, column_of(row, row.fields.size()));
    }
    if (index_of(alternatives, row.fields[1]) == alternatives.size()) {
      alternatives.push_back(row.fields[1]);
    }
  }

  bool fuzzy = false;
  for (std::size_t r = 1; r < rrows.size() && !fuzzy; ++r) {
    fuzzy = !parse_number(rrows[r].fields[3]).has_value();
  }
  for (std::size_t r = 1; r < crows.size() && !fuzzy; ++r) {
    for (std::size_t f = 2; f < crows[r].fields.size(); ++f) {
      if (!parse_number(crows[r].fields[f])) fuzzy = true;
    }
  }

  const std::size_t k = dms.size();
  const std::size_t m = alternatives.size();
  const std::size_t n = criteria.size();
  Grid3<char> seen(k, m, n, 0);
  auto locate = [&](const CsvRow& row) {
    const std::string where = "ratings file line " + std::to_string(row.line);
    const std::size_t kk = index_of(dms, row.fields[0]);
    if (kk == k) invalid(where + ": unknown decision maker '" + row.fields[0] + "'");
    const std::size_t i = index_of(alternatives, row.fields[1]);
    const std::size_t j = criterion_index(criteria, row.fields[2]);
    if (j == n) invalid(where + ": unknown criterion '" + row.fields[2] + "'");
    if (seen(kk, i, j)) {
      invalid(where + ": duplicate rating " + row.fields[0] + ":" +
              row.fields[1] + ":" + row.fields[2]);
    }
    seen(kk, i, j) = 1;
    return std::tuple{kk, i, j, where};
  };
  auto check_complete = [&]() {
    for (std::size_t kk = 0; kk < k; ++kk) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!seen(kk, i, j)) {
            invalid("ratings file: missing rating " + dms[kk] + ":" +
                    alternatives[i] + ":" + criteria[j].id);
          }
        }
      }
    }
  };
  auto weight_where = [&](std::size_t r, std::size_t f) {
    return "weight " + dms[f - 2] + ":" + crows[r].fields[0];
  };

  PanelDocument doc;
  doc.meta.name = std::string(name);
  if (!fuzzy) {
    CrispPanel p;
    p.alternatives = alternatives;
    p.criteria = criteria;
    p.decision_makers = dms;
    p.ratings = Grid3<double>(k, m, n);
    p.weights = Grid2<double>(k, n);
    for (std::size_t r = 1; r < crows.size(); ++r) {
      for (std::size_t f = 2; f < crows[r].fields.size(); ++f) {
        p.weights(f - 2, r - 1) =
            crisp_token(crows[r].fields[f], weight_where(r, f));
      }
    }
    for (std::size_t r = 1; r < rrows.size(); ++r) {
      const auto [kk, i, j, where] = locate(rrows[r]);
      p.ratings(kk, i, j) = crisp_token(rrows[r].fields[3], where);
    }
    check_complete();
    p.validate();
    doc.panel = std::move(p);
  } else {
    FuzzyPanel p;
    p.alternatives = alternatives;
    p.criteria = criteria;
    p.decision_makers = dms;
    p.ratings = Grid3<Tfn>(k, m, n);
    p.weights = Grid2<Tfn>(k, n);
    p.rating_labels = Grid3<std::string>(k, m, n);
    p.weight_labels = Grid2<std::string>(k, n);
    for (std::size_t r = 1; r < crows.size(); ++r) {
      for (std::size_t f = 2; f < crows[r].fields.size(); ++f) {
        auto v = fuzzy_token(crows[r].fields[f], LinguisticScale::weights(),
                             weight_where(r, f));
        p.weights(f - 2, r - 1) = v.value;
        p.weight_labels(f - 2, r - 1) = std::move(v.label);
      }
    }
    for (std::size_t r = 1; r < rrows.size(); ++r) {
      const auto [kk, i, j, where] = locate(rrows[r]);
      auto v = fuzzy_token(rrows[r].fields[3], LinguisticScale::ratings(),
                           where + " (" + rrows[r].fields[0] + ":" +
                               rrows[r].fields[1] + ":" + rrows[r].fields[2] +
                               ")");
      p.ratings(kk, i, j) = v.value;
      p.rating_labels(kk, i, j) = std::move(v.label);
    }
    check_complete();
    p.validate();
    doc.panel = std::move(p);
  }
  return doc;
}

std::pair<std::string, std::string> serialize_csv(const PanelDocument& doc) {
  std::string ratings = "dm,alternative,criterion,value\n";
  std::string criteria = "criterion,kind";
  for (const auto& dm : doc.decision_makers()) criteria += "," + csv_field(dm);
  criteria += "\n";

  const auto& alts = doc.alternatives();
  const auto& crit = doc.criteria();
  const auto& dms = doc.decision_makers();
  auto fuzzy_text = [](const Tfn& t, const std::string* label,
                       const LinguisticScale& scale) {
    if (label != nullptr && !label->empty()) {
      const Tfn* known = scale.find(*label);
      if (known != nullptr && *known == t) return *label;
    }
    return format_triplet(t);
  };

  const auto* crisp = std::get_if<CrispPanel>(&doc.panel);
  const auto* fuzzy = std::get_if<FuzzyPanel>(&doc.panel);
  for (std::size_t j = 0; j < crit.size(); ++j) {
    criteria += csv_field(crit[j].id) + "," + std::string(to_string(crit[j].kind));
    for (std::size_t k = 0; k < dms.size(); ++k) {
      std::string v;
      if (crisp != nullptr) {
        v = format_number(crisp->weights(k, j));
      } else {
        const std::string* label = fuzzy->weight_labels.values().empty()
                                       ? nullptr
                                       : &fuzzy->weight_labels(k, j);
        v = fuzzy_text(fuzzy->weights(k, j), label,
                       LinguisticScale::weights());
      }
      criteria += "," + csv_field(v);
    }
    criteria += "\n";
  }
  for (std::size_t k = 0; k < dms.size(); ++k) {
    for (std::size_t i = 0; i < alts.size(); ++i) {
      for (std::size_t j = 0; j < crit.size(); ++j) {
        std::string v;
        if (crisp != nullptr) {
          v = format_number(crisp->ratings(k, i, j));
        } else {
          const std::string* label = fuzzy->rating_labels.values().empty()
                                         ? nullptr
                                         : &fuzzy->rating_labels(k, i, j);
          v = fuzzy_text(fuzzy->ratings(k, i, j), label,
                         LinguisticScale::ratings());
        }
        ratings += csv_field(dms[k]) + "," + csv_field(alts[i]) + "," +
                   csv_field(crit[j].id) + "," + csv_field(v) + "\n";
      }
    }
  }
  return {std::move(ratings), std::move(criteria)};
}

std::uint64_t checksum(const PanelDocument& doc) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize_json(doc)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Edit parse_edit(std::string_view token) {
  auto bad = [&](const std::string& why) -> Edit {
    throw Error(ErrorCode::kBadEdit,
                "bad edit '" + std::string(token) + "': " + why);
  };
  const auto eq = token.find('=');
  if (eq == std::string_view::npos) {
    return bad("expected dm:alternative:criterion=value");
  }
  const std::string_view cell = token.substr(0, eq);
  const std::string_view value = trim(token.substr(eq + 1));
  const auto c1 = cell.find(':');
  const auto c2 = c1 == cell.npos ? cell.npos : cell.find(':', c1 + 1);
  if (c1 == cell.npos || c2 == cell.npos || cell.find(':', c2 + 1) != cell.npos) {
    return bad("expected dm:alternative:criterion=value");
  }
  Edit e{std::string(trim(cell.substr(0, c1))),
         std::string(trim(cell.substr(c1 + 1, c2 - c1 - 1))),
         std::string(trim(cell.substr(c2 + 1))), std::string(value)};
  if (e.dm.empty() || e.alternative.empty() || e.criterion.empty() ||
      e.value.empty()) {
    return bad("empty field");
  }
  return e;
}

void apply_edit(PanelDocument& doc, const Edit& edit) {
  const std::string token =
      edit.dm + ":" + edit.alternative + ":" + edit.criterion + "=" + edit.value;
  auto bad = [&](const std::string& why) {
    throw Error(ErrorCode::kBadEdit, "bad edit '" + token + "': " + why);
  };
  const std::size_t k = index_of(doc.decision_makers(), edit.dm);
  if (k == doc.decision_makers().size()) bad("unknown decision maker '" + edit.dm + "'");
  const std::size_t i = index_of(doc.alternatives(), edit.alternative);
  if (i == doc.alternatives().size()) {
    bad("unknown alternative '" + edit.alternative + "'");
  }
  const std::size_t j = criterion_index(doc.criteria(), edit.criterion);
  if (j == doc.criteria().size()) bad("unknown criterion '" + edit.criterion + "'");

  PanelDocument copy = doc;
  try {
    if (auto* p = std::get_if<CrispPanel>(&copy.panel)) {
      const auto v = parse_number(edit.value);
      if (!v) bad("'" + edit.value + "' is not a number");
      p->ratings(k, i, j) = *v;
      p->validate();
    } else {
      auto& f = std::get<FuzzyPanel>(copy.panel);
      FuzzyValue v;
      if (auto triplet = parse_triplet(edit.value)) {
        v = {*triplet, ""};
      } else if (const Tfn* known = copy.ratings_scale().find(edit.value)) {
        v = {*known, edit.value};
      } else {
        bad("'" + edit.value + "' is neither a rating label nor an a;b;c triplet");
      }
      f.ratings(k, i, j) = v.value;
      if (f.rating_labels.values().empty()) {
        f.rating_labels = Grid3<std::string>(f.dm_count(), f.alternative_count(),
                                             f.criterion_count());
      }
      f.rating_labels(k, i, j) = v.label;
      f.validate();
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kBadEdit) throw;
    bad(e.what());
  }
  doc = std::move(copy);
}

}  // namespace thermorank::io
