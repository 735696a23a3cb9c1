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

#include <doctest.h>

#include <algorithm>
#include <cstdint>

#include "generators.hpp"
#include "properties.hpp"
#include "thermorank/crisp_engine.hpp"
#include "thermorank/fuzzy_engine.hpp"

using namespace thermorank;

namespace {

constexpr std::size_t kCases = 1000;

void require(const props::Outcome& o) {
  INFO(o.first_failure);
  CHECK(o.cases >= kCases);
  CHECK(o.failures == 0);
}

}  // namespace

TEST_CASE("(a) exergy never exceeds energy where quality is in [0, 1]") {
  require(props::exergy_bounded_by_energy(0xA11CE, kCases));
}

TEST_CASE("(b) entropy is energy minus exergy") {
  require(props::entropy_identity(0xB0B, kCases));
}

TEST_CASE("(c) consensus panels carry no entropy") {
  require(props::consensus(0xC0FFEE, kCases));
}

TEST_CASE("(d) benefit-column scale invariance") {
  require(props::scale_invariance(0xD1CE, kCases));
}

TEST_CASE("(e) rankings are permutations") {
  require(props::ranks_are_permutations(0xE1F, kCases));
}

TEST_CASE("(f) pipelines agree with the straight-line oracle") {
  require(props::oracle_equivalence(0xF00D, kCases));
}

TEST_CASE("crisp normalization lands in (0, 1] with a 1 in every column") {
  gen::Rng rng(101);
  for (std::size_t t = 0; t < kCases; ++t) {
    const auto p = gen::crisp_panel(rng);
    const auto r = crisp::normalize(p);
    for (std::size_t k = 0; k < p.dm_count(); ++k) {
      for (std::size_t j = 0; j < p.criterion_count(); ++j) {
        bool has_one = false;
        for (std::size_t i = 0; i < p.alternative_count(); ++i) {
          CHECK(r(k, i, j) > 0.0);
          CHECK(r(k, i, j) <= 1.0);
          has_one |= r(k, i, j) == 1.0;
        }
        CHECK(has_one);
      }
    }
  }
}

TEST_CASE("fuzzy normalization preserves triplet ordering") {
  gen::Rng rng(102);
  for (std::size_t t = 0; t < kCases; ++t) {
    const auto p = gen::fuzzy_panel(rng);
    const auto r = fuzzy::normalize(p);
    for (const Tfn& x : r.values()) {
      CHECK(x.is_ordered());
      CHECK(x.a >= 0.0);
      CHECK(x.c <= 1.0);
    }
  }
}

TEST_CASE("raising a rating label never lowers that alternative's energy") {
  gen::Rng rng(103);
  gen::Options benefit_only;
  benefit_only.allow_cost = false;
  const auto& scale = LinguisticScale::ratings();
  std::size_t checked = 0;
  std::size_t attempts = 0;
  while (checked < kCases && attempts < 50 * kCases) {
    ++attempts;
    const auto p = gen::fuzzy_panel(rng, benefit_only);
    const std::size_t k = gen::pick(rng, 0, p.dm_count() - 1);
    const std::size_t i = gen::pick(rng, 0, p.alternative_count() - 1);
    const std::size_t j = gen::pick(rng, 0, p.criterion_count() - 1);
    const int from = scale.position(p.rating_labels(k, i, j));
    if (from + 1 >= static_cast<int>(scale.entries().size())) continue;
    const int to = static_cast<int>(
        gen::pick(rng, static_cast<std::size_t>(from + 1), scale.entries().size() - 1));
    auto raised = p;
    raised.ratings(k, i, j) = scale.entries()[static_cast<std::size_t>(to)].second;
    raised.rating_labels(k, i, j) = scale.entries()[static_cast<std::size_t>(to)].first;

    double before_max = 0.0;
    double after_max = 0.0;
    for (std::size_t ii = 0; ii < p.alternative_count(); ++ii) {
      before_max = std::max(before_max, p.ratings(k, ii, j).c);
      after_max = std::max(after_max, raised.ratings(k, ii, j).c);
    }
    if (before_max != after_max) continue;
    ++checked;
    EngineConfig config = EngineConfig::fuzzy_defaults();
    config.zero_mean_policy = ZeroMeanPolicy::kQualityOneIfExact;
    const auto a = fuzzy::run(p, config);
    const auto b = fuzzy::run(raised, config);
    CHECK(b.summary.energy[i] >= a.summary.energy[i]);
  }
  CHECK(checked >= kCases);
}
