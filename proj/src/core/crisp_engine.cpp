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

#include "thermorank/crisp_engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "thermorank/error.hpp"

namespace thermorank::crisp {
namespace {

std::string cell(std::size_t k, std::size_t i, std::size_t j) {
  return "(dm " + std::to_string(k + 1) + ", alternative " +
         std::to_string(i + 1) + ", criterion " + std::to_string(j + 1) + ")";
}

void require_same_shape(const Grid3<double>& x, const Grid3<double>& y) {
  if (x.dms() != y.dms() || x.alternatives() != y.alternatives() ||
      x.criteria() != y.criteria()) {
    throw Error(ErrorCode::kShapeMismatch, "cell matrices differ in shape");
  }
}

Grid2<double> prepare_weights(const CrispPanel& panel,
                              const EngineConfig& config) {
  if (panel.prenormalized ||
      config.weight_normalization == WeightNormalization::kNone) {
    return panel.weights;
  }
  Grid2<double> out = panel.weights;
  for (std::size_t j = 0; j < out.cols(); ++j) {
    double top = 0.0;
    for (std::size_t k = 0; k < out.rows(); ++k) top = std::max(top, out(k, j));
    if (top == 0.0) {
      throw Error(ErrorCode::kAllZeroColumn,
                  "weights of criterion '" + panel.criteria[j].id +
                      "' are all zero");
    }
    for (std::size_t k = 0; k < out.rows(); ++k) out(k, j) /= top;
  }
  return out;
}

}  // namespace

Grid3<double> normalize(const CrispPanel& panel) {
  if (panel.prenormalized) return panel.ratings;
  const auto& x = panel.ratings;
  Grid3<double> r(x.dms(), x.alternatives(), x.criteria());
  for (std::size_t k = 0; k < x.dms(); ++k) {
    for (std::size_t j = 0; j < x.criteria(); ++j) {
      if (panel.criteria[j].kind == CriterionKind::kBenefit) {
        double top = 0.0;
        for (std::size_t i = 0; i < x.alternatives(); ++i) {
          top = std::max(top, x(k, i, j));
        }
        if (top <= 0.0) {
          throw Error(ErrorCode::kAllZeroColumn,
                      "benefit criterion '" + panel.criteria[j].id +
                          "' of decision maker '" + panel.decision_makers[k] +
                          "' has maximum rating 0");
        }
        for (std::size_t i = 0; i < x.alternatives(); ++i) {
          r(k, i, j) = x(k, i, j) / top;
        }
      } else {
        double bottom = x(k, 0, j);
        for (std::size_t i = 1; i < x.alternatives(); ++i) {
          bottom = std::min(bottom, x(k, i, j));
        }
        for (std::size_t i = 0; i < x.alternatives(); ++i) {
          if (x(k, i, j) == 0.0) {
            throw Error(ErrorCode::kDivisionByZero,
                        "cost criterion '" + panel.criteria[j].id +
                            "' has a zero rating " + cell(k, i, j));
          }
          r(k, i, j) = bottom / x(k, i, j);
        }
      }
    }
  }
  return r;
}

Grid3<double> energy_matrix(const Grid3<double>& normalized,
                            const Grid2<double>& weights) {
  if (weights.rows() != normalized.dms() ||
      weights.cols() != normalized.criteria()) {
    throw Error(ErrorCode::kShapeMismatch, "weights do not match ratings");
  }
  Grid3<double> u(normalized.dms(), normalized.alternatives(),
                  normalized.criteria());
  for (std::size_t k = 0; k < u.dms(); ++k) {
    for (std::size_t i = 0; i < u.alternatives(); ++i) {
      for (std::size_t j = 0; j < u.criteria(); ++j) {
        u(k, i, j) = weights(k, j) * normalized(k, i, j);
      }
    }
  }
  return u;
}

Grid3<double> quality_matrix(const Grid3<double>& ratings,
                             const EngineConfig& config) {
  const std::size_t dms = ratings.dms();
  const std::size_t m = ratings.alternatives();
  const std::size_t n = ratings.criteria();
  Grid3<double> q(dms, m, n);

  // Shifted mean: exact when every value is equal, so consensus cells get
  // q == 1 without roundoff.
  auto reference_mean = [&](std::size_t k, std::size_t i, std::size_t j) {
    double shift = 0.0;
    if (config.quality_reference == QualityReference::kAcrossExperts) {
      const double base = ratings(0, i, j);
      for (std::size_t kk = 0; kk < dms; ++kk) shift += ratings(kk, i, j) - base;
      return base + shift / static_cast<double>(dms);
    }
    const double base = ratings(k, 0, j);
    for (std::size_t ii = 0; ii < m; ++ii) shift += ratings(k, ii, j) - base;
    return base + shift / static_cast<double>(m);
  };

  for (std::size_t k = 0; k < dms; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double r = ratings(k, i, j);
        const double mean = reference_mean(k, i, j);
        if (mean == 0.0) {
          if (config.zero_mean_policy == ZeroMeanPolicy::kQualityOneIfExact &&
              r == 0.0) {
            q(k, i, j) = 1.0;
            continue;
          }
          throw Error(ErrorCode::kZeroReferenceMean,
                      "reference mean is zero at " + cell(k, i, j));
        }
        q(k, i, j) = 1.0 - std::fabs(r - mean) / mean;
      }
    }
  }
  return q;
}

Grid3<double> exergy_matrix(const Grid3<double>& quality,
                            const Grid3<double>& energy) {
  require_same_shape(quality, energy);
  Grid3<double> x(energy.dms(), energy.alternatives(), energy.criteria());
  for (std::size_t k = 0; k < x.dms(); ++k) {
    for (std::size_t i = 0; i < x.alternatives(); ++i) {
      for (std::size_t j = 0; j < x.criteria(); ++j) {
        x(k, i, j) = quality(k, i, j) * energy(k, i, j);
      }
    }
  }
  return x;
}

double work(double weight, double r1, double r2) noexcept {
  return weight * std::fabs(r1 - r2);
}

CriterionAggregation resolve_aggregation(const Grid2<double>& weights,
                                         CriterionAggregation requested) {
  if (requested != CriterionAggregation::kAuto) return requested;
  for (std::size_t k = 0; k < weights.rows(); ++k) {
    double sum = 0.0;
    for (double w : weights.row(k)) sum += w;
    if (std::fabs(sum - 1.0) > kWeightSumTolerance) {
      return CriterionAggregation::kMeanOfWeighted;
    }
  }
  return CriterionAggregation::kWeightedSum;
}

Aggregate aggregate(const Grid3<double>& energy, const Grid3<double>& exergy,
                    const Grid2<double>& weights, const EngineConfig& config) {
  require_same_shape(energy, exergy);
  if (weights.rows() != energy.dms() || weights.cols() != energy.criteria()) {
    throw Error(ErrorCode::kShapeMismatch, "weights do not match ratings");
  }
  const std::size_t dms = energy.dms();
  const std::size_t m = energy.alternatives();
  const std::size_t n = energy.criteria();

  Aggregate out;
  out.mode_used = resolve_aggregation(weights, config.criterion_aggregation);
  if (config.criterion_aggregation == CriterionAggregation::kWeightedSum) {
    for (std::size_t k = 0; k < dms; ++k) {
      double sum = 0.0;
      for (double w : weights.row(k)) sum += w;
      if (std::fabs(sum - 1.0) > kWeightSumTolerance) {
        out.warnings.push_back(
            {"WeightSumWarning", "weights of decision maker " +
                                     std::to_string(k + 1) + " sum to " +
                                     std::to_string(sum) + ", not 1"});
      }
    }
  }

  const double divisor = out.mode_used == CriterionAggregation::kWeightedSum
                             ? 1.0
                             : static_cast<double>(n);
  out.energy_by_dm = Grid2<double>(dms, m);
  out.exergy_by_dm = Grid2<double>(dms, m);
  out.energy.assign(m, 0.0);
  out.exergy.assign(m, 0.0);
  for (std::size_t k = 0; k < dms; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      double u = 0.0;
      double x = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        u += energy(k, i, j);
        x += exergy(k, i, j);
      }
      out.energy_by_dm(k, i) = u / divisor;
      out.exergy_by_dm(k, i) = x / divisor;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    double u = 0.0;
    double x = 0.0;
    for (std::size_t k = 0; k < dms; ++k) {
      u += out.energy_by_dm(k, i);
      x += out.exergy_by_dm(k, i);
    }
    out.energy[i] = u / static_cast<double>(dms);
    out.exergy[i] = x / static_cast<double>(dms);
  }
  return out;
}

Report run(const CrispPanel& panel, const EngineConfig& config) {
  panel.validate();

  Report report;
  report.normalized = normalize(panel);
  const Grid2<double> weights = prepare_weights(panel, config);
  report.energy = energy_matrix(report.normalized, weights);
  report.quality = quality_matrix(
      config.quality_basis == QualityBasis::kRaw ? panel.ratings
                                                 : report.normalized,
      config);
  report.exergy = exergy_matrix(report.quality, report.energy);

  Aggregate agg = aggregate(report.energy, report.exergy, weights, config);
  report.energy_by_dm = std::move(agg.energy_by_dm);
  report.exergy_by_dm = std::move(agg.exergy_by_dm);
  report.aggregation_used = agg.mode_used;
  report.warnings = std::move(agg.warnings);

  const auto& q = report.quality;
  for (std::size_t k = 0; k < q.dms(); ++k) {
    for (std::size_t i = 0; i < q.alternatives(); ++i) {
      for (std::size_t j = 0; j < q.criteria(); ++j) {
        if (q(k, i, j) < 0.0) report.negative_quality_cells.push_back({k, i, j});
      }
    }
  }
  if (!report.negative_quality_cells.empty()) {
    report.warnings.push_back(
        {"NegativeQuality",
         std::to_string(report.negative_quality_cells.size()) +
             " cell(s) deviate from the reference mean by more than the mean"});
  }

  auto& s = report.summary;
  s.alternatives = panel.alternatives;
  s.energy = std::move(agg.energy);
  s.exergy = std::move(agg.exergy);
  s.entropy.resize(s.energy.size());
  for (std::size_t i = 0; i < s.energy.size(); ++i) {
    s.entropy[i] = entropy(s.energy[i], s.exergy[i]);
  }
  s.rank_by_energy = rank_descending(s.energy);
  s.rank_by_exergy = rank_descending(s.exergy);
  return report;
}

}  // namespace thermorank::crisp
