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

#include "properties.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "generators.hpp"
#include "oracle.hpp"
#include "thermorank/crisp_engine.hpp"
#include "thermorank/fuzzy_engine.hpp"
#include "thermorank/topsis.hpp"

namespace props {
namespace {

using namespace thermorank;

constexpr double kTol = 1e-12;

class Recorder {
 public:
  explicit Recorder(Outcome& out) : out_(out) {}

  void fail(std::size_t iteration, const std::string& what) {
    if (out_.failures++ == 0) {
      std::ostringstream os;
      os << "case " << iteration << ": " << what;
      out_.first_failure = os.str();
    }
  }

 private:
  Outcome& out_;
};

bool close(double a, double b, double tol = kTol) { return std::fabs(a - b) <= tol; }

bool close(const Tfn& a, const Tfn& b, double tol = kTol) {
  return close(a.a, b.a, tol) && close(a.b, b.b, tol) && close(a.c, b.c, tol);
}

bool close(const Tfn& a, const oracle::Trip& b) {
  return close(a.a, b[0]) && close(a.b, b[1]) && close(a.c, b[2]);
}

template <class T>
bool close_grid(const Grid3<T>& a, const Grid3<T>& b) {
  if (a.values().size() != b.values().size()) return false;
  for (std::size_t x = 0; x < a.values().size(); ++x) {
    if (!close(a.values()[x], b.values()[x])) return false;
  }
  return true;
}

bool is_permutation(const std::vector<int>& ranks) {
  std::vector<int> sorted = ranks;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

// Rank vectors may differ only where the underlying values tie within kTol.
bool same_order(const std::vector<double>& values, const std::vector<int>& a,
                const std::vector<int>& b) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = 0; j < values.size(); ++j) {
      if ((a[i] < a[j]) != (b[i] < b[j]) && !close(values[i], values[j])) return false;
    }
  }
  return true;
}

bool same_summary(const IndicatorSummary& a, const IndicatorSummary& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!close(a.energy[i], b.energy[i]) || !close(a.exergy[i], b.exergy[i]) ||
        !close(a.entropy[i], b.entropy[i])) {
      return false;
    }
  }
  return same_order(a.energy, a.rank_by_energy, b.rank_by_energy) &&
         same_order(a.exergy, a.rank_by_exergy, b.rank_by_exergy);
}

EngineConfig random_config(gen::Rng& rng) {
  EngineConfig c;
  c.quality_reference = gen::pick(rng, 0, 1) == 0 ? QualityReference::kAcrossExperts
                                                   : QualityReference::kAcrossAlternatives;
  c.quality_basis = gen::pick(rng, 0, 1) == 0 ? QualityBasis::kRaw : QualityBasis::kNormalized;
  c.criterion_aggregation = static_cast<CriterionAggregation>(gen::pick(rng, 0, 2));
  c.weight_normalization =
      gen::pick(rng, 0, 1) == 0 ? WeightNormalization::kNone : WeightNormalization::kColumnMax;
  // All-VP columns have a zero left-support mean.
  c.zero_mean_policy = ZeroMeanPolicy::kQualityOneIfExact;
  return c;
}

void ensure_benefit(CriterionSpec& c) { c.kind = CriterionKind::kBenefit; }

}  // namespace

Outcome exergy_bounded_by_energy(std::uint64_t seed, std::size_t cases) {
  Outcome out;
  Recorder rec(out);
  gen::Rng rng(seed);
  for (std::size_t t = 0; t < cases; ++t, ++out.cases) {
    const EngineConfig config = random_config(rng);
    const auto cp = gen::crisp_panel(rng);
    const auto cr = crisp::run(cp, config);
    bool all_unit = true;
    for (std::size_t x = 0; x < cr.quality.values().size(); ++x) {
      const double q = cr.quality.values()[x];
      if (q < 0.0 || q > 1.0) {
        all_unit = false;
        continue;
      }
      if (cr.exergy.values()[x] > cr.energy.values()[x]) rec.fail(t, "crisp X > U in a cell");
    }
    if (all_unit) {
      for (double s : cr.summary.entropy) {
        if (s < 0.0) rec.fail(t, "crisp S < 0 with unit qualities");
      }
    }

    const auto fp = gen::fuzzy_panel(rng);
    const auto fr = fuzzy::run(fp, config);
    all_unit = true;
    for (std::size_t x = 0; x < fr.quality.values().size(); ++x) {
      const Tfn& q = fr.quality.values()[x];
      const Tfn& u = fr.energy.values()[x];
      const Tfn& e = fr.exergy.values()[x];
      const double qs[] = {q.a, q.b, q.c};
      const double us[] = {u.a, u.b, u.c};
      const double es[] = {e.a, e.b, e.c};
      for (int c = 0; c < 3; ++c) {
        if (qs[c] < 0.0 || qs[c] > 1.0) {
          all_unit = false;
          continue;
        }
        if (es[c] > us[c]) rec.fail(t, "fuzzy X > U in a cell component");
      }
    }
    if (all_unit) {
      for (double s : fr.summary.entropy) {
        if (s < 0.0) rec.fail(t, "fuzzy S < 0 with unit qualities");
      }
    }
  }
  return out;
}

Outcome entropy_identity(std::uint64_t seed, std::size_t cases) {
  Outcome out;
  Recorder rec(out);
  gen::Rng rng(seed);
  for (std::size_t t = 0; t < cases; ++t, ++out.cases) {
    const EngineConfig config = random_config(rng);
    const auto cr = crisp::run(gen::crisp_panel(rng), config);
    for (std::size_t i = 0; i < cr.summary.size(); ++i) {
      const auto& s = cr.summary;
      if (!close(s.entropy[i], s.energy[i] - s.exergy[i])) rec.fail(t, "crisp S != U - X");
    }
    const auto fr = fuzzy::run(gen::fuzzy_panel(rng), config);
    for (std::size_t i = 0; i < fr.summary.size(); ++i) {
      const auto& s = fr.summary;
      if (!close(s.entropy[i], s.energy[i] - s.exergy[i])) rec.fail(t, "fuzzy S != U - X");
    }
    for (std::size_t x = 0; x < fr.entropy.values().size(); ++x) {
      if (!close(fr.entropy.values()[x], fr.energy.values()[x] - fr.exergy.values()[x])) {
        rec.fail(t, "fuzzy cell entropy != U - X");
      }
    }
  }
  return out;
}

Outcome consensus(std::uint64_t seed, std::size_t cases) {
  Outcome out;
  Recorder rec(out);
  gen::Rng rng(seed);
  for (std::size_t t = 0; t < cases; ++t, ++out.cases) {
    EngineConfig config = random_config(rng);
    config.quality_reference = QualityReference::kAcrossExperts;

    auto cp = gen::crisp_panel(rng);
    gen::make_consensus(cp);
    const auto cr = crisp::run(cp, config);
    for (double q : cr.quality.values()) {
      if (q != 1.0) rec.fail(t, "crisp consensus quality != 1");
    }
    for (std::size_t i = 0; i < cr.summary.size(); ++i) {
      if (!close(cr.summary.entropy[i], 0.0) ||
          !close(cr.summary.exergy[i], cr.summary.energy[i])) {
        rec.fail(t, "crisp consensus S != 0");
      }
    }

    auto fp = gen::fuzzy_panel(rng);
    gen::make_consensus(fp);
    const auto fr = fuzzy::run(fp, config);
    for (const Tfn& q : fr.quality.values()) {
      if (!(q == Tfn{1, 1, 1})) rec.fail(t, "fuzzy consensus quality != (1,1,1)");
    }
    for (std::size_t i = 0; i < fr.summary.size(); ++i) {
      if (!close(fr.summary.entropy[i], 0.0) ||
          !close(fr.summary.exergy[i], fr.summary.energy[i])) {
        rec.fail(t, "fuzzy consensus S != 0");
      }
    }
  }
  return out;
}

Outcome scale_invariance(std::uint64_t seed, std::size_t cases) {
  Outcome out;
  Recorder rec(out);
  gen::Rng rng(seed);
  for (std::size_t t = 0; t < cases; ++t, ++out.cases) {
    const double lambda = gen::pick(rng, 0, 1) == 0 ? gen::uniform(rng, 0.1, 10.0)
                                                    : std::pow(10.0, gen::uniform(rng, -3, 3));

    // One decision maker's column. The quality basis must be the normalized
    // ratings (or the reference must stay within that decision maker),
    // otherwise the raw spread across experts legitimately changes.
    {
      EngineConfig config = random_config(rng);
      if (config.quality_reference == QualityReference::kAcrossExperts) {
        config.quality_basis = QualityBasis::kNormalized;
      }
      auto cp = gen::crisp_panel(rng);
      const std::size_t j = gen::pick(rng, 0, cp.criterion_count() - 1);
      const std::size_t k = gen::pick(rng, 0, cp.dm_count() - 1);
      ensure_benefit(cp.criteria[j]);
      auto scaled = cp;
      for (std::size_t i = 0; i < cp.alternative_count(); ++i) scaled.ratings(k, i, j) *= lambda;
      const auto a = crisp::run(cp, config);
      const auto b = crisp::run(scaled, config);
      if (!close_grid(a.normalized, b.normalized) || !close_grid(a.energy, b.energy) ||
          !close_grid(a.quality, b.quality) || !close_grid(a.exergy, b.exergy) ||
          !same_summary(a.summary, b.summary)) {
        rec.fail(t, "crisp report changed after scaling one decision maker's column");
      }

      auto fp = gen::fuzzy_panel(rng);
      const std::size_t fj = gen::pick(rng, 0, fp.criterion_count() - 1);
      const std::size_t fk = gen::pick(rng, 0, fp.dm_count() - 1);
      ensure_benefit(fp.criteria[fj]);
      auto fscaled = fp;
      for (std::size_t i = 0; i < fp.alternative_count(); ++i) {
        fscaled.ratings(fk, i, fj) = scale(fp.ratings(fk, i, fj), lambda);
      }
      const auto fa = fuzzy::run(fp, config);
      const auto fb = fuzzy::run(fscaled, config);
      if (!close_grid(fa.normalized, fb.normalized) || !close_grid(fa.energy, fb.energy) ||
          !close_grid(fa.quality, fb.quality) || !close_grid(fa.exergy, fb.exergy) ||
          !same_summary(fa.summary, fb.summary)) {
        rec.fail(t, "fuzzy report changed after scaling one decision maker's column");
      }
    }

    // Every decision maker's column under the shipped defaults, which measure
    // quality on the shared raw scale.
    {
      auto cp = gen::crisp_panel(rng);
      const std::size_t j = gen::pick(rng, 0, cp.criterion_count() - 1);
      ensure_benefit(cp.criteria[j]);
      auto scaled = cp;
      for (std::size_t k = 0; k < cp.dm_count(); ++k)
        for (std::size_t i = 0; i < cp.alternative_count(); ++i) scaled.ratings(k, i, j) *= lambda;
      const auto a = crisp::run(cp);
      const auto b = crisp::run(scaled);
      if (!close_grid(a.normalized, b.normalized) || !close_grid(a.energy, b.energy) ||
          !close_grid(a.quality, b.quality) || !close_grid(a.exergy, b.exergy) ||
          !same_summary(a.summary, b.summary)) {
        rec.fail(t, "crisp default report changed after scaling a whole column");
      }

      EngineConfig raw = EngineConfig::fuzzy_defaults();
      raw.quality_basis = QualityBasis::kRaw;
      raw.zero_mean_policy = ZeroMeanPolicy::kQualityOneIfExact;
      auto fp = gen::fuzzy_panel(rng);
      const std::size_t fj = gen::pick(rng, 0, fp.criterion_count() - 1);
      ensure_benefit(fp.criteria[fj]);
      auto fscaled = fp;
      for (std::size_t k = 0; k < fp.dm_count(); ++k)
        for (std::size_t i = 0; i < fp.alternative_count(); ++i) {
          fscaled.ratings(k, i, fj) = scale(fp.ratings(k, i, fj), lambda);
        }
      const auto fa = fuzzy::run(fp, raw);
      const auto fb = fuzzy::run(fscaled, raw);
      if (!close_grid(fa.normalized, fb.normalized) || !close_grid(fa.energy, fb.energy) ||
          !close_grid(fa.quality, fb.quality) || !close_grid(fa.exergy, fb.exergy) ||
          !same_summary(fa.summary, fb.summary)) {
        rec.fail(t, "fuzzy raw-basis report changed after scaling a whole column");
      }
    }
  }
  return out;
}

Outcome ranks_are_permutations(std::uint64_t seed, std::size_t cases) {
  Outcome out;
  Recorder rec(out);
  gen::Rng rng(seed);
  for (std::size_t t = 0; t < cases; ++t, ++out.cases) {
    const EngineConfig config = random_config(rng);
    const auto cp = gen::crisp_panel(rng);
    const auto cr = crisp::run(cp, config);
    const auto fr = fuzzy::run(gen::fuzzy_panel(rng), config);
    for (const IndicatorSummary* s : {&cr.summary, &fr.summary}) {
      if (!is_permutation(s->rank_by_energy) || !is_permutation(s->rank_by_exergy)) {
        rec.fail(t, "ranking is not a permutation");
      }
      if (s->rank_by_energy != oracle::ranks_by_selection(s->energy) ||
          s->rank_by_exergy != oracle::ranks_by_selection(s->exergy)) {
        rec.fail(t, "ranking disagrees with the selection-sort oracle");
      }
    }
    if (cp.alternative_count() >= 2) {
      const auto norm = gen::pick(rng, 0, 1) == 0 ? topsis::Normalization::kLinear
                                                  : topsis::Normalization::kVector;
      const auto tr = topsis::run(cp, norm);
      if (!is_permutation(tr.result.rank)) rec.fail(t, "TOPSIS ranking is not a permutation");
    }
  }
  return out;
}

Outcome oracle_equivalence(std::uint64_t seed, std::size_t cases) {
  Outcome out;
  Recorder rec(out);
  gen::Rng rng(seed);
  for (std::size_t t = 0; t < cases; ++t, ++out.cases) {
    const EngineConfig config = random_config(rng);

    const auto cp = gen::crisp_panel(rng);
    const auto cr = crisp::run(cp, config);
    const auto co = oracle::run_crisp(cp, config);
    bool ok = true;
    for (std::size_t k = 0; k < cp.dm_count(); ++k) {
      for (std::size_t i = 0; i < cp.alternative_count(); ++i) {
        for (std::size_t j = 0; j < cp.criterion_count(); ++j) {
          ok = ok && close(cr.normalized(k, i, j), co.r[k][i][j]) &&
               close(cr.energy(k, i, j), co.u[k][i][j]) &&
               close(cr.quality(k, i, j), co.q[k][i][j]) &&
               close(cr.exergy(k, i, j), co.x[k][i][j]);
        }
        ok = ok && close(cr.energy_by_dm(k, i), co.u_dm[k][i]) &&
             close(cr.exergy_by_dm(k, i), co.x_dm[k][i]);
      }
    }
    for (std::size_t i = 0; i < cp.alternative_count(); ++i) {
      ok = ok && close(cr.summary.energy[i], co.U[i]) && close(cr.summary.exergy[i], co.X[i]) &&
           close(cr.summary.entropy[i], co.S[i]);
    }
    ok = ok && (cr.aggregation_used == CriterionAggregation::kWeightedSum) == co.weighted_sum;
    if (!ok) rec.fail(t, "crisp pipeline differs from the oracle");

    const auto fp = gen::fuzzy_panel(rng);
    const auto fr = fuzzy::run(fp, config);
    const auto fo = oracle::run_fuzzy(fp, config);
    ok = true;
    for (std::size_t k = 0; k < fp.dm_count(); ++k) {
      for (std::size_t j = 0; j < fp.criterion_count(); ++j) {
        ok = ok && close(fr.weights(k, j), fo.weights[k][j]);
      }
      for (std::size_t i = 0; i < fp.alternative_count(); ++i) {
        for (std::size_t j = 0; j < fp.criterion_count(); ++j) {
          ok = ok && close(fr.normalized(k, i, j), fo.r[k][i][j]) &&
               close(fr.energy(k, i, j), fo.u[k][i][j]) &&
               close(fr.quality(k, i, j), fo.q[k][i][j]) &&
               close(fr.exergy(k, i, j), fo.x[k][i][j]) &&
               close(fr.entropy(k, i, j), fo.s[k][i][j]);
        }
        ok = ok && close(fr.energy_by_dm(k, i), fo.u_dm[k][i]) &&
             close(fr.exergy_by_dm(k, i), fo.x_dm[k][i]) &&
             close(fr.energy_score_by_dm(k, i), fo.u_score[k][i]) &&
             close(fr.exergy_score_by_dm(k, i), fo.x_score[k][i]);
      }
    }
    for (std::size_t i = 0; i < fp.alternative_count(); ++i) {
      ok = ok && close(fr.summary.energy[i], fo.U[i]) && close(fr.summary.exergy[i], fo.X[i]) &&
           close(fr.summary.entropy[i], fo.S[i]);
    }
    ok = ok && (fr.aggregation_used == CriterionAggregation::kWeightedSum) == fo.weighted_sum;
    if (!ok) rec.fail(t, "fuzzy pipeline differs from the oracle");
  }
  return out;
}

}  // namespace props
