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

#include "oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {
namespace {

using thermorank::CriterionAggregation;
using thermorank::CriterionKind;
using thermorank::QualityBasis;
using thermorank::QualityReference;
using thermorank::WeightNormalization;
using thermorank::ZeroMeanPolicy;

Cube cube(std::size_t K, std::size_t m, std::size_t n) {
  return Cube(K, Mat(m, std::vector<double>(n, 0.0)));
}

TripCube trip_cube(std::size_t K, std::size_t m, std::size_t n) {
  return TripCube(K, TripMat(m, std::vector<Trip>(n, Trip{0, 0, 0})));
}

double quality(double value, double mean,
               const thermorank::EngineConfig& config) {
  if (mean == 0.0) {
    if (config.zero_mean_policy == ZeroMeanPolicy::kQualityOneIfExact &&
        value == 0.0) {
      return 1.0;
    }
    throw std::runtime_error("oracle: zero reference mean");
  }
  return 1.0 - std::fabs(value - mean) / mean;
}

// Mean used for the quality of source[k][i][j].
double reference(const Cube& source, std::size_t k, std::size_t i,
                 std::size_t j, QualityReference ref) {
  double total = 0.0;
  if (ref == QualityReference::kAcrossExperts) {
    for (std::size_t kk = 0; kk < source.size(); ++kk) total += source[kk][i][j];
    return total / static_cast<double>(source.size());
  }
  for (std::size_t ii = 0; ii < source[k].size(); ++ii) total += source[k][ii][j];
  return total / static_cast<double>(source[k].size());
}

}  // namespace

Crisp run_crisp(const thermorank::CrispPanel& p,
                const thermorank::EngineConfig& config) {
  const std::size_t K = p.decision_makers.size();
  const std::size_t m = p.alternatives.size();
  const std::size_t n = p.criteria.size();
  Crisp o;

  Cube raw = cube(K, m, n);
  for (std::size_t k = 0; k < K; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) raw[k][i][j] = p.ratings(k, i, j);

  // Step 2: per decision maker, per criterion.
  o.r = cube(K, m, n);
  for (std::size_t k = 0; k < K; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      double hi = raw[k][0][j];
      double lo = raw[k][0][j];
      for (std::size_t i = 0; i < m; ++i) {
        if (raw[k][i][j] > hi) hi = raw[k][i][j];
        if (raw[k][i][j] < lo) lo = raw[k][i][j];
      }
      for (std::size_t i = 0; i < m; ++i) {
        if (p.prenormalized) {
          o.r[k][i][j] = raw[k][i][j];
        } else if (p.criteria[j].kind == CriterionKind::kBenefit) {
          o.r[k][i][j] = raw[k][i][j] / hi;
        } else {
          o.r[k][i][j] = lo / raw[k][i][j];
        }
      }
    }
  }

  // Weights.
  o.weights = Mat(K, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    double hi = 0.0;
    for (std::size_t k = 0; k < K; ++k) hi = std::max(hi, p.weights(k, j));
    for (std::size_t k = 0; k < K; ++k) {
      const bool scale = !p.prenormalized &&
                         config.weight_normalization == WeightNormalization::kColumnMax;
      o.weights[k][j] = scale ? p.weights(k, j) / hi : p.weights(k, j);
    }
  }

  // Steps 4-6.
  const Cube& basis = config.quality_basis == QualityBasis::kRaw ? raw : o.r;
  o.u = cube(K, m, n);
  o.q = cube(K, m, n);
  o.x = cube(K, m, n);
  for (std::size_t k = 0; k < K; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        o.u[k][i][j] = o.weights[k][j] * o.r[k][i][j];
        const double mean = reference(basis, k, i, j, config.quality_reference);
        o.q[k][i][j] = quality(basis[k][i][j], mean, config);
        o.x[k][i][j] = o.q[k][i][j] * o.u[k][i][j];
      }

  // Step 7.
  bool sums_to_one = true;
  for (std::size_t k = 0; k < K; ++k) {
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) total += o.weights[k][j];
    if (std::fabs(total - 1.0) > 1e-6) sums_to_one = false;
  }
  o.weighted_sum =
      config.criterion_aggregation == CriterionAggregation::kWeightedSum ||
      (config.criterion_aggregation == CriterionAggregation::kAuto && sums_to_one);
  const double div = o.weighted_sum ? 1.0 : static_cast<double>(n);
  o.u_dm = Mat(K, std::vector<double>(m, 0.0));
  o.x_dm = Mat(K, std::vector<double>(m, 0.0));
  for (std::size_t k = 0; k < K; ++k)
    for (std::size_t i = 0; i < m; ++i) {
      double su = 0.0;
      double sx = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        su += o.u[k][i][j];
        sx += o.x[k][i][j];
      }
      o.u_dm[k][i] = su / div;
      o.x_dm[k][i] = sx / div;
    }

  // Steps 8-9.
  for (std::size_t i = 0; i < m; ++i) {
    double su = 0.0;
    double sx = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      su += o.u_dm[k][i];
      sx += o.x_dm[k][i];
    }
    o.U.push_back(su / static_cast<double>(K));
    o.X.push_back(sx / static_cast<double>(K));
    o.S.push_back(o.U.back() - o.X.back());
  }
  return o;
}

Fuzzy run_fuzzy(const thermorank::FuzzyPanel& p,
                const thermorank::EngineConfig& config) {
  const std::size_t K = p.decision_makers.size();
  const std::size_t m = p.alternatives.size();
  const std::size_t n = p.criteria.size();
  Fuzzy o;

  auto get = [](const thermorank::Tfn& t) { return Trip{t.a, t.b, t.c}; };
  TripCube raw = trip_cube(K, m, n);
  for (std::size_t k = 0; k < K; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) raw[k][i][j] = get(p.ratings(k, i, j));

  o.r = trip_cube(K, m, n);
  for (std::size_t k = 0; k < K; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      double c_plus = 0.0;
      double a_minus = raw[k][0][j][0];
      for (std::size_t i = 0; i < m; ++i) {
        c_plus = std::max(c_plus, raw[k][i][j][2]);
        a_minus = std::min(a_minus, raw[k][i][j][0]);
      }
      for (std::size_t i = 0; i < m; ++i) {
        const Trip& v = raw[k][i][j];
        if (p.prenormalized) {
          o.r[k][i][j] = v;
        } else if (p.criteria[j].kind == CriterionKind::kBenefit) {
          o.r[k][i][j] = {v[0] / c_plus, v[1] / c_plus, v[2] / c_plus};
        } else {
          o.r[k][i][j] = {a_minus / v[2], a_minus / v[1], a_minus / v[0]};
        }
      }
    }
  }

  o.weights = TripMat(K, std::vector<Trip>(n));
  for (std::size_t j = 0; j < n; ++j) {
    double hi = 0.0;
    for (std::size_t k = 0; k < K; ++k) hi = std::max(hi, p.weights(k, j).c);
    const bool scale = !p.prenormalized &&
                       config.weight_normalization == WeightNormalization::kColumnMax;
    for (std::size_t k = 0; k < K; ++k) {
      const Trip w = get(p.weights(k, j));
      o.weights[k][j] = scale ? Trip{w[0] / hi, w[1] / hi, w[2] / hi} : w;
    }
  }

  const TripCube& basis = config.quality_basis == QualityBasis::kRaw ? raw : o.r;
  o.u = trip_cube(K, m, n);
  o.q = trip_cube(K, m, n);
  o.x = trip_cube(K, m, n);
  o.s = trip_cube(K, m, n);
  for (std::size_t c = 0; c < 3; ++c) {
    // One component at a time, as independent crisp problems.
    Cube comp = cube(K, m, n);
    for (std::size_t k = 0; k < K; ++k)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) comp[k][i][j] = basis[k][i][j][c];
    for (std::size_t k = 0; k < K; ++k)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          o.u[k][i][j][c] = o.weights[k][j][c] * o.r[k][i][j][c];
          const double mean = reference(comp, k, i, j, config.quality_reference);
          o.q[k][i][j][c] = quality(comp[k][i][j], mean, config);
          o.x[k][i][j][c] = o.q[k][i][j][c] * o.u[k][i][j][c];
          o.s[k][i][j][c] = o.u[k][i][j][c] - o.x[k][i][j][c];
        }
  }

  bool sums_to_one = true;
  for (std::size_t k = 0; k < K; ++k)
    for (std::size_t c = 0; c < 3; ++c) {
      double total = 0.0;
      for (std::size_t j = 0; j < n; ++j) total += o.weights[k][j][c];
      if (std::fabs(total - 1.0) > 1e-6) sums_to_one = false;
    }
  o.weighted_sum =
      config.criterion_aggregation == CriterionAggregation::kWeightedSum ||
      (config.criterion_aggregation == CriterionAggregation::kAuto && sums_to_one);
  const double div = o.weighted_sum ? 1.0 : static_cast<double>(n);

  auto score = [](const Trip& t) {
    return std::sqrt((t[0] * t[0] + t[1] * t[1] + t[2] * t[2]) / 3.0);
  };
  o.u_dm = TripMat(K, std::vector<Trip>(m));
  o.x_dm = TripMat(K, std::vector<Trip>(m));
  o.u_score = Mat(K, std::vector<double>(m));
  o.x_score = Mat(K, std::vector<double>(m));
  for (std::size_t k = 0; k < K; ++k)
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t c = 0; c < 3; ++c) {
        double su = 0.0;
        double sx = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          su += o.u[k][i][j][c];
          sx += o.x[k][i][j][c];
        }
        o.u_dm[k][i][c] = su / div;
        o.x_dm[k][i][c] = sx / div;
      }
      o.u_score[k][i] = score(o.u_dm[k][i]);
      o.x_score[k][i] = score(o.x_dm[k][i]);
    }
  for (std::size_t i = 0; i < m; ++i) {
    double su = 0.0;
    double sx = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      su += o.u_score[k][i];
      sx += o.x_score[k][i];
    }
    o.U.push_back(su / static_cast<double>(K));
    o.X.push_back(sx / static_cast<double>(K));
    o.S.push_back(o.U.back() - o.X.back());
  }
  return o;
}

std::vector<int> ranks_by_selection(const std::vector<double>& values) {
  std::vector<int> ranks(values.size(), 0);
  for (int next = 1; next <= static_cast<int>(values.size()); ++next) {
    std::size_t best = values.size();
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (ranks[i] != 0) continue;
      if (best == values.size() || values[i] > values[best]) best = i;
    }
    ranks[best] = next;
  }
  return ranks;
}

}  // namespace oracle
