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

#include "thermorank/panel.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "thermorank/error.hpp"

namespace thermorank {
namespace {

[[noreturn]] void fail(const std::string& message) {
  throw Error(ErrorCode::kValidation, message);
}

void check_ids(const std::vector<std::string>& ids, const char* what) {
  std::set<std::string_view> seen;
  for (const auto& id : ids) {
    if (id.empty()) fail(std::string("empty ") + what + " id");
    if (!seen.insert(id).second) {
      fail(std::string("duplicate ") + what + " id '" + id + "'");
    }
  }
}

template <class Panel>
void check_structure(const Panel& p, std::size_t min_alternatives) {
  const std::size_t m = p.alternative_count();
  if (m == 0) fail("no alternatives given (m ≥ 2 required for ranking)");
  if (m < min_alternatives) {
    fail("m ≥ " + std::to_string(min_alternatives) + " required (got " +
         std::to_string(m) + " alternative" + (m == 1 ? "" : "s") + ")");
  }
  if (p.criteria.empty()) fail("no criteria given (n ≥ 1 required)");
  if (p.decision_makers.empty()) {
    fail("no decision makers given (K ≥ 1 required)");
  }
  check_ids(p.alternatives, "alternative");
  check_ids(p.decision_makers, "decision maker");
  std::set<std::string_view> seen;
  for (const auto& c : p.criteria) {
    if (c.id.empty()) fail("empty criterion id");
    if (!seen.insert(c.id).second) fail("duplicate criterion id '" + c.id + "'");
  }

  const std::size_t k = p.dm_count();
  const std::size_t n = p.criterion_count();
  if (p.ratings.dms() != k || p.ratings.alternatives() != m ||
      p.ratings.criteria() != n) {
    fail("ratings shape does not match K x m x n");
  }
  if (p.weights.rows() != k || p.weights.cols() != n) {
    fail("weights shape does not match K x n");
  }
}

template <class Panel>
std::string cell_name(const Panel& p, std::size_t k, std::size_t i,
                      std::size_t j) {
  return "rating " + p.decision_makers[k] + ":" + p.alternatives[i] + ":" +
         p.criteria[j].id;
}

template <class Panel>
std::string weight_name(const Panel& p, std::size_t k, std::size_t j) {
  return "weight " + p.decision_makers[k] + ":" + p.criteria[j].id;
}

std::string show(const Tfn& t) {
  std::ostringstream os;
  os << "(" << t.a << ", " << t.b << ", " << t.c << ")";
  return os.str();
}

bool finite(const Tfn& t) {
  return std::isfinite(t.a) && std::isfinite(t.b) && std::isfinite(t.c);
}

}  // namespace

void CrispPanel::validate(std::size_t min_alternatives) const {
  check_structure(*this, min_alternatives);
  for (std::size_t k = 0; k < dm_count(); ++k) {
    for (std::size_t j = 0; j < criterion_count(); ++j) {
      const double w = weights(k, j);
      if (!std::isfinite(w) || w < 0.0) {
        fail(weight_name(*this, k, j) + " must be a finite value >= 0 (got " +
             std::to_string(w) + ")");
      }
      const bool cost = criteria[j].kind == CriterionKind::kCost;
      for (std::size_t i = 0; i < alternative_count(); ++i) {
        const double x = ratings(k, i, j);
        if (!std::isfinite(x) || x < 0.0) {
          fail(cell_name(*this, k, i, j) +
               " must be a finite value >= 0 (got " + std::to_string(x) + ")");
        }
        if (cost && x == 0.0) {
          fail(cell_name(*this, k, i, j) +
               " is 0 on a cost criterion (min/x undefined)");
        }
      }
    }
  }
}

void FuzzyPanel::validate(std::size_t min_alternatives) const {
  check_structure(*this, min_alternatives);
  if (!rating_labels.values().empty() &&
      (rating_labels.dms() != dm_count() ||
       rating_labels.alternatives() != alternative_count() ||
       rating_labels.criteria() != criterion_count())) {
    fail("rating label shape does not match K x m x n");
  }
  if (!weight_labels.values().empty() &&
      (weight_labels.rows() != dm_count() ||
       weight_labels.cols() != criterion_count())) {
    fail("weight label shape does not match K x n");
  }
  for (std::size_t k = 0; k < dm_count(); ++k) {
    for (std::size_t j = 0; j < criterion_count(); ++j) {
      const Tfn& w = weights(k, j);
      if (!finite(w) || !w.is_ordered() || w.a < 0.0) {
        fail(weight_name(*this, k, j) +
             " must be an ordered nonnegative triplet (got " + show(w) + ")");
      }
      const bool cost = criteria[j].kind == CriterionKind::kCost;
      for (std::size_t i = 0; i < alternative_count(); ++i) {
        const Tfn& x = ratings(k, i, j);
        if (!finite(x) || !x.is_ordered() || x.a < 0.0) {
          fail(cell_name(*this, k, i, j) +
               " must be an ordered nonnegative triplet (got " + show(x) + ")");
        }
        if (cost && x.a == 0.0) {
          fail(cell_name(*this, k, i, j) +
               " has a zero component on a cost criterion");
        }
      }
    }
  }
}

}  // namespace thermorank
