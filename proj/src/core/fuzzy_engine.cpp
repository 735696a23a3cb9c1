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

#include "thermorank/fuzzy_engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "thermorank/error.hpp"

namespace thermorank::fuzzy {
namespace {

std::string cell(std::size_t k, std::size_t i, std::size_t j) {
  return "(dm " + std::to_string(k + 1) + ", alternative " +
         std::to_string(i + 1) + ", criterion " + std::to_string(j + 1) + ")";
}

template <class T>
void require_same_shape(const Grid3<T>& x, const Grid3<T>& y) {
  if (x.dms() != y.dms() || x.alternatives() != y.alternatives() ||
      x.criteria() != y.criteria()) {
    throw Error(ErrorCode::kShapeMismatch, "cell matrices differ in shape");
  }
}

template <class F>
Grid3<Tfn> cellwise(const Grid3<Tfn>& x, const Grid3<Tfn>& y, F op) {
  require_same_shape(x, y);
  Grid3<Tfn> out(x.dms(), x.alternatives(), x.criteria());
  for (std::size_t k = 0; k < x.dms(); ++k) {
    for (std::size_t i = 0; i < x.alternatives(); ++i) {
      for (std::size_t j = 0; j < x.criteria(); ++j) {
        out(k, i, j) = op(x(k, i, j), y(k, i, j));
      }
    }
  }
  return out;
}

// One component of the quality triplet.
double quality_component(double r, double mean, const EngineConfig& config,
                         std::size_t k, std::size_t i, std::size_t j) {
  if (mean == 0.0) {
    if (config.zero_mean_policy == ZeroMeanPolicy::kQualityOneIfExact &&
        r == 0.0) {
      return 1.0;
    }
    throw Error(ErrorCode::kZeroReferenceMean,
                "reference mean has a zero component at " + cell(k, i, j));
  }
  return 1.0 - std::fabs(r - mean) / mean;
}

}  // namespace

Grid3<Tfn> normalize(const FuzzyPanel& panel) {
  if (panel.prenormalized) return panel.ratings;
  const auto& x = panel.ratings;
  Grid3<Tfn> r(x.dms(), x.alternatives(), x.criteria());
  for (std::size_t k = 0; k < x.dms(); ++k) {
    for (std::size_t j = 0; j < x.criteria(); ++j) {
      if (panel.criteria[j].kind == CriterionKind::kBenefit) {
        double top = 0.0;
        for (std::size_t i = 0; i < x.alternatives(); ++i) {
          top = std::max(top, x(k, i, j).c);
        }
        if (top <= 0.0) {
          throw Error(ErrorCode::kAllZeroColumn,
                      "benefit criterion '" + panel.criteria[j].id +
                          "' of decision maker '" + panel.decision_makers[k] +
                          "' has maximum right support 0");
        }
        for (std::size_t i = 0; i < x.alternatives(); ++i) {
          r(k, i, j) = {x(k, i, j).a / top, x(k, i, j).b / top, x(k, i, j).c / top};
        }
      } else {
        double bottom = x(k, 0, j).a;
        for (std::size_t i = 1; i < x.alternatives(); ++i) {
          bottom = std::min(bottom, x(k, i, j).a);
        }
        for (std::size_t i = 0; i < x.alternatives(); ++i) {
          const Tfn& v = x(k, i, j);
          if (v.a == 0.0 || v.b == 0.0 || v.c == 0.0) {
            throw Error(ErrorCode::kDivisionByZero,
                        "cost criterion '" + panel.criteria[j].id +
                            "' has a zero component " + cell(k, i, j));
          }
          r(k, i, j) = {bottom / v.c, bottom / v.b, bottom / v.a};
        }
      }
    }
  }
  return r;
}

Grid2<Tfn> prepare_weights(const FuzzyPanel& panel, const EngineConfig& config) {
  if (panel.prenormalized ||
      config.weight_normalization == WeightNormalization::kNone) {
    return panel.weights;
  }
  Grid2<Tfn> out = panel.weights;
  for (std::size_t j = 0; j < out.cols(); ++j) {
    double top = 0.0;
    for (std::size_t k = 0; k < out.rows(); ++k) top = std::max(top, out(k, j).c);
    if (top <= 0.0) {
      throw Error(ErrorCode::kAllZeroColumn,
                  "weights of criterion '" + panel.criteria[j].id +
                      "' are all zero");
    }
    for (std::size_t k = 0; k < out.rows(); ++k) {
      out(k, j) = {out(k, j).a / top, out(k, j).b / top, out(k, j).c / top};
    }
  }
  return out;
}

Grid3<Tfn> energy_matrix(const Grid3<Tfn>& normalized,
                         const Grid2<Tfn>& weights) {
  if (weights.rows() != normalized.dms() ||
      weights.cols() != normalized.criteria()) {
    throw Error(ErrorCode::kShapeMismatch, "weights do not match ratings");
  }
  Grid3<Tfn> u(normalized.dms(), normalized.alternatives(),
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

Grid3<Tfn> quality_matrix(const Grid3<Tfn>& ratings, const EngineConfig& config) {
  const std::size_t dms = ratings.dms();
  const std::size_t m = ratings.alternatives();
  const std::size_t n = ratings.criteria();
  Grid3<Tfn> q(dms, m, n);

  // Shifted mean, exact for identical triplets (see the crisp engine).
  auto reference_mean = [&](std::size_t k, std::size_t i, std::size_t j) {
    Tfn shift;
    Tfn base;
    double count = 0.0;
    if (config.quality_reference == QualityReference::kAcrossExperts) {
      base = ratings(0, i, j);
      for (std::size_t kk = 0; kk < dms; ++kk) {
        shift = shift + (ratings(kk, i, j) - base);
      }
      count = static_cast<double>(dms);
    } else {
      base = ratings(k, 0, j);
      for (std::size_t ii = 0; ii < m; ++ii) {
        shift = shift + (ratings(k, ii, j) - base);
      }
      count = static_cast<double>(m);
    }
    return base + Tfn{shift.a / count, shift.b / count, shift.c / count};
  };

  for (std::size_t k = 0; k < dms; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Tfn& r = ratings(k, i, j);
        const Tfn mean = reference_mean(k, i, j);
        q(k, i, j) = {quality_component(r.a, mean.a, config, k, i, j),
                      quality_component(r.b, mean.b, config, k, i, j),
                      quality_component(r.c, mean.c, config, k, i, j)};
      }
    }
  }
  return q;
}

Grid3<Tfn> exergy_matrix(const Grid3<Tfn>& quality, const Grid3<Tfn>& energy) {
  return cellwise(quality, energy,
                  [](const Tfn& q, const Tfn& u) { return q * u; });
}

Grid3<Tfn> entropy_matrix(const Grid3<Tfn>& energy, const Grid3<Tfn>& exergy) {
  return cellwise(energy, exergy,
                  [](const Tfn& u, const Tfn& x) { return u - x; });
}

CriterionAggregation resolve_aggregation(const Grid2<Tfn>& weights,
                                         CriterionAggregation requested) {
  if (requested != CriterionAggregation::kAuto) return requested;
  for (std::size_t k = 0; k < weights.rows(); ++k) {
    Tfn sum;
    for (const Tfn& w : weights.row(k)) sum = sum + w;
    if (std::fabs(sum.a - 1.0) > kWeightSumTolerance ||
        std::fabs(sum.b - 1.0) > kWeightSumTolerance ||
        std::fabs(sum.c - 1.0) > kWeightSumTolerance) {
      return CriterionAggregation::kMeanOfWeighted;
    }
  }
  return CriterionAggregation::kWeightedSum;
}

Aggregate aggregate(const Grid3<Tfn>& energy, const Grid3<Tfn>& exergy,
                    const Grid2<Tfn>& weights, const EngineConfig& config) {
  require_same_shape(energy, exergy);
  if (weights.rows() != energy.dms() || weights.cols() != energy.criteria()) {
    throw Error(ErrorCode::kShapeMismatch, "weights do not match ratings");
  }
  const std::size_t dms = energy.dms();
  const std::size_t m = energy.alternatives();
  const std::size_t n = energy.criteria();

  Aggregate out;
  out.mode_used = resolve_aggregation(weights, config.criterion_aggregation);
  if (config.criterion_aggregation == CriterionAggregation::kWeightedSum &&
      resolve_aggregation(weights, CriterionAggregation::kAuto) !=
          CriterionAggregation::kWeightedSum) {
    out.warnings.push_back(
        {"WeightSumWarning",
         "weighted-sum aggregation used but fuzzy weights do not sum to 1"});
  }

  const double divisor = out.mode_used == CriterionAggregation::kWeightedSum
                             ? 1.0
                             : static_cast<double>(n);
  out.energy_by_dm = Grid2<Tfn>(dms, m);
  out.exergy_by_dm = Grid2<Tfn>(dms, m);
  out.energy_score_by_dm = Grid2<double>(dms, m);
  out.exergy_score_by_dm = Grid2<double>(dms, m);
  out.energy.assign(m, 0.0);
  out.exergy.assign(m, 0.0);
  for (std::size_t k = 0; k < dms; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      Tfn u;
      Tfn x;
      for (std::size_t j = 0; j < n; ++j) {
        u = u + energy(k, i, j);
        x = x + exergy(k, i, j);
      }
      out.energy_by_dm(k, i) = {u.a / divisor, u.b / divisor, u.c / divisor};
      out.exergy_by_dm(k, i) = {x.a / divisor, x.b / divisor, x.c / divisor};
      out.energy_score_by_dm(k, i) = defuzzify(out.energy_by_dm(k, i));
      out.exergy_score_by_dm(k, i) = defuzzify(out.exergy_by_dm(k, i));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    double u = 0.0;
    double x = 0.0;
    for (std::size_t k = 0; k < dms; ++k) {
      u += out.energy_score_by_dm(k, i);
      x += out.exergy_score_by_dm(k, i);
    }
    out.energy[i] = u / static_cast<double>(dms);
    out.exergy[i] = x / static_cast<double>(dms);
  }
  return out;
}

Report run(const FuzzyPanel& panel, const EngineConfig& config) {
  panel.validate();

  Report report;
  report.normalized = normalize(panel);
  report.weights = prepare_weights(panel, config);
  report.energy = energy_matrix(report.normalized, report.weights);
  report.quality = quality_matrix(config.quality_basis == QualityBasis::kRaw
                                      ? panel.ratings
                                      : report.normalized,
                                  config);
  report.exergy = exergy_matrix(report.quality, report.energy);
  report.entropy = entropy_matrix(report.energy, report.exergy);

  Aggregate agg =
      aggregate(report.energy, report.exergy, report.weights, config);
  report.energy_by_dm = std::move(agg.energy_by_dm);
  report.exergy_by_dm = std::move(agg.exergy_by_dm);
  report.energy_score_by_dm = std::move(agg.energy_score_by_dm);
  report.exergy_score_by_dm = std::move(agg.exergy_score_by_dm);
  report.aggregation_used = agg.mode_used;
  report.warnings = std::move(agg.warnings);

  const auto& q = report.quality;
  for (std::size_t k = 0; k < q.dms(); ++k) {
    for (std::size_t i = 0; i < q.alternatives(); ++i) {
      for (std::size_t j = 0; j < q.criteria(); ++j) {
        const Tfn& v = q(k, i, j);
        if (v.a < 0.0 || v.b < 0.0 || v.c < 0.0) {
          report.negative_quality_cells.push_back({k, i, j});
        }
        if (!v.is_ordered()) report.unordered_quality_cells.push_back({k, i, j});
      }
    }
  }
  if (!report.negative_quality_cells.empty()) {
    report.warnings.push_back(
        {"NegativeQuality",
         std::to_string(report.negative_quality_cells.size()) +
             " cell(s) have a negative quality component"});
  }

  auto& s = report.summary;
  s.alternatives = panel.alternatives;
  s.energy = std::move(agg.energy);
  s.exergy = std::move(agg.exergy);
  s.entropy.resize(s.energy.size());
  for (std::size_t i = 0; i < s.energy.size(); ++i) {
    s.entropy[i] = s.energy[i] - s.exergy[i];
  }
  s.rank_by_energy = rank_descending(s.energy);
  s.rank_by_exergy = rank_descending(s.exergy);
  return report;
}

}  // namespace thermorank::fuzzy
