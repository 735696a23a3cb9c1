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

#include "thermorank/tfn.hpp"

#include <cmath>
#include <set>

#include "thermorank/error.hpp"

namespace thermorank {

double membership(const Tfn& x, double value) noexcept {
  if (value < x.a || value > x.c) return 0.0;
  if (value == x.b) return 1.0;
  if (value < x.b) return (value - x.a) / (x.b - x.a);
  return (value - x.c) / (x.b - x.c);
}

Tfn operator+(const Tfn& x, const Tfn& y) noexcept {
  return {x.a + y.a, x.b + y.b, x.c + y.c};
}

Tfn operator-(const Tfn& x, const Tfn& y) noexcept {
  return {x.a - y.a, x.b - y.b, x.c - y.c};
}

Tfn operator*(const Tfn& x, const Tfn& y) noexcept {
  return {x.a * y.a, x.b * y.b, x.c * y.c};
}

Tfn operator/(const Tfn& x, const Tfn& y) {
  static constexpr const char* kNames[] = {"a", "b", "c"};
  const double divisors[] = {y.a, y.b, y.c};
  for (int i = 0; i < 3; ++i) {
    if (divisors[i] == 0.0) {
      throw Error(ErrorCode::kDivisionByZero,
                  std::string("fuzzy division by zero in component ") +
                      kNames[i]);
    }
  }
  return {x.a / y.a, x.b / y.b, x.c / y.c};
}

Tfn scale(const Tfn& x, double k) noexcept { return {x.a * k, x.b * k, x.c * k}; }

Tfn distance(const Tfn& x, const Tfn& y) noexcept {
  return {std::fabs(x.a - y.a), std::fabs(x.b - y.b), std::fabs(x.c - y.c)};
}

double defuzzify(const Tfn& x) noexcept {
  return std::sqrt((x.a * x.a + x.b * x.b + x.c * x.c) / 3.0);
}

std::string_view to_string(ScaleKind kind) noexcept {
  return kind == ScaleKind::kRating ? "rating" : "weight";
}

LinguisticScale::LinguisticScale(ScaleKind kind, std::vector<Entry> entries)
    : kind_(kind), entries_(std::move(entries)) {
  std::set<std::string_view> seen;
  for (const auto& [label, value] : entries_) {
    if (label.empty()) {
      throw Error(ErrorCode::kValidation,
                  std::string(to_string(kind_)) + " scale: empty label");
    }
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::kValidation, std::string(to_string(kind_)) +
                                              " scale: duplicate label '" +
                                              label + "'");
    }
    if (!value.is_ordered() || !std::isfinite(value.a) ||
        !std::isfinite(value.c)) {
      throw Error(ErrorCode::kValidation,
                  std::string(to_string(kind_)) + " scale: label '" + label +
                      "' is not an ordered finite triplet");
    }
  }
}

const LinguisticScale& LinguisticScale::ratings() {
  static const LinguisticScale scale(ScaleKind::kRating,
                                     {{"VP", {0, 0, 1}},
                                      {"P", {0, 1, 3}},
                                      {"MP", {1, 3, 5}},
                                      {"F", {3, 5, 7}},
                                      {"MG", {5, 7, 9}},
                                      {"G", {7, 9, 10}},
                                      {"VG", {9, 10, 10}}});
  return scale;
}

const LinguisticScale& LinguisticScale::weights() {
  static const LinguisticScale scale(ScaleKind::kWeight,
                                     {{"VL", {0, 0, 0.1}},
                                      {"L", {0, 0.1, 0.3}},
                                      {"ML", {0.1, 0.3, 0.5}},
                                      {"M", {0.3, 0.5, 0.7}},
                                      {"MH", {0.5, 0.7, 0.9}},
                                      {"H", {0.7, 0.9, 1.0}},
                                      {"VH", {0.9, 1.0, 1.0}}});
  return scale;
}

const Tfn* LinguisticScale::find(std::string_view label) const noexcept {
  for (const auto& [name, value] : entries_) {
    if (name == label) return &value;
  }
  return nullptr;
}

int LinguisticScale::position(std::string_view label) const noexcept {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].first == label) return static_cast<int>(i);
  }
  return -1;
}

Tfn from_linguistic(std::string_view label, const LinguisticScale& scale) {
  if (const Tfn* value = scale.find(label)) return *value;
  throw Error(ErrorCode::kUnknownLabel,
              "unknown " + std::string(to_string(scale.kind())) + " label '" +
                  std::string(label) + "'");
}

}  // namespace thermorank
