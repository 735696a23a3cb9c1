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

#include "thermorank/topsis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "thermorank/error.hpp"
#include "thermorank/report.hpp"

namespace thermorank::topsis {

std::string_view to_string(Normalization n) noexcept {
  return n == Normalization::kLinear ? "linear" : "vector";
}

std::optional<Normalization> normalization_from_string(std::string_view s) {
  if (s == "linear") return Normalization::kLinear;
  if (s == "vector") return Normalization::kVector;
  return std::nullopt;
}

std::vector<CriterionKind> orientation(std::span<const CriterionSpec> criteria,
                                       Normalization normalization) {
  std::vector<CriterionKind> kinds;
  kinds.reserve(criteria.size());
  for (const auto& c : criteria) {
    kinds.push_back(normalization == Normalization::kLinear
                        ? CriterionKind::kBenefit
                        : c.kind);
  }
  return kinds;
}

Grid2<double> weighted_normalized(const Grid2<double>& decision,
                                  std::span<const double> weights,
                                  std::span<const CriterionSpec> criteria,
                                  Normalization normalization) {
  const std::size_t m = decision.rows();
  const std::size_t n = decision.cols();
  if (weights.size() != n || criteria.size() != n) {
    throw Error(ErrorCode::kShapeMismatch,
                "weights or criteria do not match the decision matrix");
  }
  Grid2<double> v(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::string& id = criteria[j].id;
    if (normalization == Normalization::kVector) {
      double sq = 0.0;
      for (std::size_t i = 0; i < m; ++i) sq += decision(i, j) * decision(i, j);
      if (sq == 0.0) {
        throw Error(ErrorCode::kAllZeroColumn,
                    "criterion '" + id + "' has an all-zero column");
      }
      const double norm = std::sqrt(sq);
      for (std::size_t i = 0; i < m; ++i) {
        v(i, j) = weights[j] * (decision(i, j) / norm);
      }
    } else if (criteria[j].kind == CriterionKind::kBenefit) {
      double top = 0.0;
      for (std::size_t i = 0; i < m; ++i) top = std::max(top, decision(i, j));
      if (top <= 0.0) {
        throw Error(ErrorCode::kAllZeroColumn,
                    "criterion '" + id + "' has an all-zero column");
      }
      for (std::size_t i = 0; i < m; ++i) {
        v(i, j) = weights[j] * (decision(i, j) / top);
      }
    } else {
      double bottom = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m; ++i) {
        if (decision(i, j) <= 0.0) {
          throw Error(ErrorCode::kDivisionByZero,
                      "cost criterion '" + id + "' has a non-positive value");
        }
        bottom = std::min(bottom, decision(i, j));
      }
      for (std::size_t i = 0; i < m; ++i) {
        v(i, j) = weights[j] * (bottom / decision(i, j));
      }
    }
  }
  return v;
}

Result rank(const Grid2<double>& weighted,
            std::span<const CriterionKind> kinds) {
  const std::size_t m = weighted.rows();
  const std::size_t n = weighted.cols();
  if (kinds.size() != n) {
    throw Error(ErrorCode::kShapeMismatch, "criterion kinds do not match");
  }
  if (m < 2) {
    throw Error(ErrorCode::kValidation, "m ≥ 2 required for TOPSIS");
  }

  std::vector<double> best(n);
  std::vector<double> worst(n);
  bool degenerate = true;
  for (std::size_t j = 0; j < n; ++j) {
    double hi = weighted(0, j);
    double lo = weighted(0, j);
    for (std::size_t i = 1; i < m; ++i) {
      hi = std::max(hi, weighted(i, j));
      lo = std::min(lo, weighted(i, j));
    }
    const bool benefit = kinds[j] == CriterionKind::kBenefit;
    best[j] = benefit ? hi : lo;
    worst[j] = benefit ? lo : hi;
    if (hi != lo) degenerate = false;
  }

  Result out;
  out.degenerate = degenerate;
  out.closeness.resize(m);
  out.separation_positive.resize(m);
  out.separation_negative.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    double plus = 0.0;
    double minus = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      plus += (weighted(i, j) - best[j]) * (weighted(i, j) - best[j]);
      minus += (weighted(i, j) - worst[j]) * (weighted(i, j) - worst[j]);
    }
    out.separation_positive[i] = std::sqrt(plus);
    out.separation_negative[i] = std::sqrt(minus);
    out.closeness[i] =
        degenerate ? std::numeric_limits<double>::quiet_NaN()
                   : out.separation_negative[i] /
                         (out.separation_positive[i] + out.separation_negative[i]);
  }
  if (degenerate) {
    out.rank.resize(m);
    std::iota(out.rank.begin(), out.rank.end(), 1);
  } else {
    out.rank = rank_descending(out.closeness);
  }
  return out;
}

PanelResult run(const CrispPanel& panel, Normalization normalization) {
  panel.validate(2);
  const std::size_t dms = panel.dm_count();
  const std::size_t m = panel.alternative_count();
  const std::size_t n = panel.criterion_count();

  PanelResult out;
  out.decision = Grid2<double>(m, n);
  out.weights.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < dms; ++k) out.weights[j] += panel.weights(k, j);
    out.weights[j] /= static_cast<double>(dms);
    for (std::size_t i = 0; i < m; ++i) {
      double sum = 0.0;
      for (std::size_t k = 0; k < dms; ++k) sum += panel.ratings(k, i, j);
      out.decision(i, j) = sum / static_cast<double>(dms);
    }
  }

  std::vector<CriterionKind> kinds;
  if (panel.prenormalized) {
    out.weighted = Grid2<double>(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out.weighted(i, j) = out.weights[j] * out.decision(i, j);
      }
    }
    // Already normalized ratings are benefit-oriented.
    kinds = orientation(panel.criteria, Normalization::kLinear);
  } else {
    out.weighted = weighted_normalized(out.decision, out.weights,
                                       panel.criteria, normalization);
    kinds = orientation(panel.criteria, normalization);
  }
  out.result = rank(out.weighted, kinds);
  return out;
}

}  // namespace thermorank::topsis
