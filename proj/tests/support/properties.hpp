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

#include <cstddef>
#include <cstdint>
#include <string>

// Randomized invariant checks shared by the property and acceptance suites.
// Each case draws one crisp and one fuzzy panel with m, n, K <= 5.
namespace props {

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed(std::size_t min_cases) const {
    return failures == 0 && cases >= min_cases;
  }
};

/// (a) X <= U cellwise wherever quality lies in [0, 1].
Outcome exergy_bounded_by_energy(std::uint64_t seed, std::size_t cases);
/// (b) S = U - X to 1e-12.
Outcome entropy_identity(std::uint64_t seed, std::size_t cases);
/// (c) Identical ratings across experts give S = 0 and X = U.
Outcome consensus(std::uint64_t seed, std::size_t cases);
/// (d) Rescaling a benefit column leaves the report unchanged to 1e-12.
Outcome scale_invariance(std::uint64_t seed, std::size_t cases);
/// (e) Every ranking is a permutation of 1..m agreeing with a sort oracle.
Outcome ranks_are_permutations(std::uint64_t seed, std::size_t cases);
/// (f) Both pipelines match the straight-line oracle on every intermediate.
Outcome oracle_equivalence(std::uint64_t seed, std::size_t cases);

}  // namespace props
