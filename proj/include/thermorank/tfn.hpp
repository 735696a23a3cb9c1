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
#include <string_view>
#include <utility>
#include <vector>

namespace thermorank {

/// Triangular fuzzy number (a, b, c): left support, mode, right support.
///
/// Values built from user input or a linguistic scale satisfy a <= b <= c.
/// Values derived by the engines (quality, exergy, entropy) are formal
/// triplets and may break that ordering; is_ordered() reports it. They are
/// never re-sorted because later steps multiply positionally.
struct Tfn {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  constexpr Tfn() = default;
  constexpr Tfn(double left, double mode, double right)
      : a(left), b(mode), c(right) {}
  static constexpr Tfn crisp(double x) { return {x, x, x}; }

  constexpr bool is_ordered() const noexcept { return a <= b && b <= c; }

  friend constexpr bool operator==(const Tfn&, const Tfn&) = default;
};

/// Membership degree of x; 1 at a degenerate leg's shared point.
double membership(const Tfn& x, double value) noexcept;

// Componentwise arithmetic. Subtraction and division deliberately do not
// follow interval rules: (a1-a2, b1-b2, c1-c2), not (a1-c2, ...).
Tfn operator+(const Tfn& x, const Tfn& y) noexcept;
Tfn operator-(const Tfn& x, const Tfn& y) noexcept;
Tfn operator*(const Tfn& x, const Tfn& y) noexcept;
/// Throws Error(kDivisionByZero) naming the zero component of the divisor.
Tfn operator/(const Tfn& x, const Tfn& y);
Tfn scale(const Tfn& x, double k) noexcept;

/// (|a1-a2|, |b1-b2|, |c1-c2|).
Tfn distance(const Tfn& x, const Tfn& y) noexcept;

/// sqrt((a^2 + b^2 + c^2) / 3). Insensitive to component order.
double defuzzify(const Tfn& x) noexcept;

enum class ScaleKind { kRating, kWeight };

std::string_view to_string(ScaleKind kind) noexcept;

/// Ordered label -> fuzzy number mapping. Labels are unique and every entry
/// is ordered; the constructor throws Error(kValidation) otherwise.
class LinguisticScale {
 public:
  using Entry = std::pair<std::string, Tfn>;

  LinguisticScale(ScaleKind kind, std::vector<Entry> entries);

  /// VP..VG on [0, 10].
  static const LinguisticScale& ratings();
  /// VL..VH on [0, 1].
  static const LinguisticScale& weights();

  ScaleKind kind() const noexcept { return kind_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  const Tfn* find(std::string_view label) const noexcept;
  /// Position of the label in declaration order, or -1.
  int position(std::string_view label) const noexcept;

  friend bool operator==(const LinguisticScale&,
                         const LinguisticScale&) = default;

 private:
  ScaleKind kind_;
  std::vector<Entry> entries_;
};

/// Throws Error(kUnknownLabel) with the label and scale kind.
Tfn from_linguistic(std::string_view label, const LinguisticScale& scale);

}  // namespace thermorank
