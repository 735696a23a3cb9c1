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

#include <string_view>
#include <utility>

#include "thermorank/error.hpp"
#include "thermorank/io_model.hpp"

namespace thermorank::io {
namespace {

struct Source {
  std::string_view name;
  std::string_view json;
};

constexpr Source kSources[] = {
#include "fixture_data.inc"
};

std::string_view source(std::string_view name) {
  for (const auto& s : kSources) {
    if (s.name == name) return s.json;
  }
  throw Error(ErrorCode::kInternal,
              "fixture source '" + std::string(name) + "' is not embedded");
}

// The perturbation experiment: DM1 downgrades A2 on C1 and C2.
PanelDocument case2_modified() {
  PanelDocument doc = parse_json(source("case2"));
  apply_edit(doc, parse_edit("DM1:A2:C1=VP"));
  apply_edit(doc, parse_edit("DM1:A2:C2=VP"));
  doc.meta.name = "case2_modified";
  doc.meta.description =
      "case2 with DM1's A2 ratings on C1, C2 changed from (G, VG) to (VP, VP)";
  doc.meta.reference = ReferenceRanking{"fuzzy TOPSIS", {3, 2, 1}};
  return doc;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "example1_a1", "example1_a2", "example2_a1", "example2_a2",
      "case1",       "case2",       "case2_modified"};
  return names;
}

PanelDocument load_fixture(std::string_view name) {
  if (name == "case2_modified") return case2_modified();
  for (const auto& known : fixture_names()) {
    if (known == name) return parse_json(source(name));
  }
  std::string list;
  for (const auto& known : fixture_names()) {
    list += (list.empty() ? "" : ", ") + known;
  }
  throw Error(ErrorCode::kUnknownFixture,
              "unknown fixture '" + std::string(name) + "' (known: " + list +
                  ")");
}

}  // namespace thermorank::io
