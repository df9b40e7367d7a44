// Copyright 2026 The Plexflow Authors
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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "plexflow/fixture/openpredict.hpp"
#include "plexflow/predict/cross_validation.hpp"
#include "plexflow/predict/features.hpp"
#include "plexflow/predict/logistic.hpp"
#include "plexflow/predict/metrics.hpp"
#include "plexflow/predict/similarity.hpp"
#include "plexflow/trace/tracer.hpp"

namespace plexflow::predict {
namespace {

// One drug measure / disease measure pattern copied into every slot.
SimilarityBundle toy_bundle(const SquareMatrix& drug, const SquareMatrix& disease) {
  SimilarityBundle b;
  b.drug_sims.assign(kDrugMeasures, drug);
  b.disease_sims.assign(kDiseaseMeasures, disease);
  for (std::size_t i = 0; i < drug.size(); ++i) b.drug_ids.push_back("d" + std::to_string(i));
  for (std::size_t i = 0; i < disease.size(); ++i) b.disease_ids.push_back("s" + std::to_string(i));
  return b;
}

SquareMatrix matrix(std::initializer_list<std::initializer_list<double>> rows) {
  SquareMatrix m(rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

CvConfig config(Scheme scheme) {
  CvConfig c;
  c.scheme = scheme;
  c.threads = 2;
  return c;
}

TEST(GeometricMean, Examples) {
  EXPECT_DOUBLE_EQ(weighted_geometric_mean(0.25, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(weighted_geometric_mean(0.16, 0.04), 0.08);
  for (double x : {0.0, 0.1, 0.37, 1.0}) EXPECT_NEAR(weighted_geometric_mean(x, x), x, 1e-15);
  EXPECT_EQ(weighted_geometric_mean(0.0, 0.9), 0.0);
  EXPECT_NEAR(weighted_geometric_mean(0.5, 0.8, {1.0, 0.0}), 0.5, 1e-15);
  EXPECT_THROW(weighted_geometric_mean(0.5, 0.5, {0.6, 0.6}), PredictError);
  EXPECT_THROW(weighted_geometric_mean(1.5, 0.5), PredictError);
}

TEST(Features, ToyValues) {
  const SquareMatrix drug = matrix({{1.0, 0.64}, {0.64, 1.0}});
  const SquareMatrix disease = matrix({{1.0, 0.25}, {0.25, 1.0}});
  const SimilarityBundle b = toy_bundle(drug, disease);
  const GoldStandard gold = make_gold({{0, 0}}, b);
  const FeatureMatrix f = build_features(b, gold, {{1, 1}, {1, 0}, {0, 1}, {0, 0}}, false);
  ASSERT_EQ(f.size(), 4u);
  for (double v : f.rows[0]) EXPECT_NEAR(v, std::sqrt(0.64 * 0.25), 1e-12);
  for (double v : f.rows[1]) EXPECT_NEAR(v, 0.8, 1e-12);
  for (double v : f.rows[2]) EXPECT_NEAR(v, 0.5, 1e-12);
  for (double v : f.rows[3]) EXPECT_NEAR(v, 1.0, 1e-12);
  EXPECT_EQ(f.labels, (std::vector<int>{0, 0, 0, 1}));

  // The only known pair is the candidate itself.
  const FeatureMatrix self = build_features(b, gold, {{0, 0}}, true);
  for (double v : self.rows[0]) EXPECT_EQ(v, 0.0);
}

TEST(Features, IdenticalMeasuresGiveIdenticalColumns) {
  SyntheticData data = make_synthetic({.drugs = 20, .diseases = 16, .clusters = 4});
  for (auto& m : data.bundle.drug_sims) m = data.bundle.drug_sims[0];
  for (auto& m : data.bundle.disease_sims) m = data.bundle.disease_sims[0];
  std::vector<Pair> candidates;
  for (std::size_t d = 0; d < 20; ++d) candidates.emplace_back(d, d % 16);
  const FeatureMatrix f = build_features(data.bundle, data.gold, candidates, true);
  for (const FeatureRow& row : f.rows) {
    for (double v : row) EXPECT_EQ(v, row[0]);
  }
}

TEST(Features, MonotoneInSimilarity) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int round = 0; round < 50; ++round) {
    SyntheticData data = make_synthetic({.drugs = 12, .diseases = 10, .clusters = 3,
                                         .seed = static_cast<std::uint64_t>(round)});
    std::vector<Pair> candidates;
    for (std::size_t d = 0; d < 12; ++d) candidates.emplace_back(d, (d * 7) % 10);
    const FeatureMatrix before = build_features(data.bundle, data.gold, candidates, true);
    // Raise one off-diagonal drug similarity.
    const std::size_t m = round % kDrugMeasures;
    const std::size_t i = rng() % 12, j = (i + 1 + rng() % 11) % 12;
    auto& sim = data.bundle.drug_sims[m];
    sim.set_symmetric(i, j, sim(i, j) + (1.0 - sim(i, j)) * u(rng));
    const FeatureMatrix after = build_features(data.bundle, data.gold, candidates, true);
    for (std::size_t r = 0; r < candidates.size(); ++r) {
      for (std::size_t c = 0; c < kFeatureCount; ++c) EXPECT_GE(after.rows[r][c], before.rows[r][c]);
    }
  }
}

TEST(Logistic, SeparableToyIsFitExactly) {
  const std::vector<std::vector<double>> x = {{0.1, 0.2}, {0.2, 0.1}, {0.15, 0.3},
                                              {0.8, 0.9}, {0.9, 0.7}, {0.85, 0.95}};
  const std::vector<int> y = {0, 0, 0, 1, 1, 1};
  const LogisticModel model = train_logistic(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_EQ(predict_proba(model, x[i]) >= 0.5, y[i] == 1) << i;
  }
}

TEST(Logistic, RandomLabelsGiveChanceHeldOutAuc) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  auto sample = [&](std::size_t n, std::vector<std::vector<double>>& x, std::vector<int>& y) {
    for (std::size_t i = 0; i < n; ++i) {
      x.push_back({u(rng), u(rng), u(rng), u(rng)});
      y.push_back(coin(rng));
    }
  };
  std::vector<std::vector<double>> xtr, xte;
  std::vector<int> ytr, yte;
  sample(500, xtr, ytr);
  sample(500, xte, yte);
  const LogisticModel model = train_logistic(xtr, ytr);
  std::vector<double> scores;
  for (const auto& row : xte) scores.push_back(predict_proba(model, row));
  const double auc = roc_auc(scores, yte);
  EXPECT_GE(auc, 0.40);
  EXPECT_LE(auc, 0.60);
}

TEST(Logistic, GradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::vector<double>> x;
  std::vector<int> y;
  for (int i = 0; i < 40; ++i) {
    x.push_back({u(rng), u(rng), u(rng)});
    y.push_back(u(rng) > 0.0);
  }
  for (int point = 0; point < 10; ++point) {
    std::vector<double> theta = {u(rng), u(rng), u(rng), u(rng)};
    std::vector<double> grad;
    logistic_loss(x, y, theta, 0.01, &grad);
    ASSERT_EQ(grad.size(), theta.size());
    for (std::size_t k = 0; k < theta.size(); ++k) {
      const double eps = 1e-5;
      std::vector<double> hi = theta, lo = theta;
      hi[k] += eps;
      lo[k] -= eps;
      const double numeric =
          (logistic_loss(x, y, hi, 0.01) - logistic_loss(x, y, lo, 0.01)) / (2 * eps);
      EXPECT_LT(std::abs(numeric - grad[k]) / std::max(1e-8, std::abs(grad[k])), 1e-6)
          << "point " << point << " coordinate " << k;
    }
  }
}

TEST(Logistic, LossNeverIncreases) {
  const SyntheticData data = make_synthetic({.drugs = 30, .diseases = 24, .clusters = 4});
  std::vector<Pair> candidates;
  for (std::size_t d = 0; d < 30; ++d) {
    for (std::size_t s = 0; s < 24; s += 3) candidates.emplace_back(d, s);
  }
  const FeatureMatrix f = build_features(data.bundle, data.gold, candidates, true);
  std::vector<double> losses;
  train_logistic(to_rows(f), f.labels, {.iterations = 300}, &losses);
  ASSERT_EQ(losses.size(), 301u);
  for (std::size_t i = 1; i < losses.size(); ++i) EXPECT_LE(losses[i], losses[i - 1] + 1e-15) << i;
}

TEST(Logistic, PredictProbaExamples) {
  LogisticModel m;
  m.weights = {1.0, -2.0};
  m.bias = 0.5;
  EXPECT_DOUBLE_EQ(predict_proba(m, std::vector<double>{0.0, 0.25}), 0.5);
  EXPECT_NEAR(predict_proba(m, std::vector<double>{1.0, 0.0}), 1.0 / (1.0 + std::exp(-1.5)), 1e-15);
  const std::vector<std::vector<double>> x = {{0.0}, {1.0}};
  EXPECT_THROW(train_logistic(x, std::vector<int>{1, 1}), PredictError);
}

TEST(Metrics, AucExamples) {
  EXPECT_DOUBLE_EQ(roc_auc({0.1, 0.4, 0.35, 0.8}, {0, 0, 1, 1}), 0.75);
  const Metrics perfect = compute_metrics({0.1, 0.2, 0.8, 0.9}, {0, 0, 1, 1});
  EXPECT_EQ(perfect.roc_auc, 1.0);
  EXPECT_EQ(perfect.aupr, 1.0);
  EXPECT_EQ(perfect.accuracy, 1.0);
  EXPECT_EQ(perfect.f1, 1.0);
  EXPECT_DOUBLE_EQ(roc_auc({0.5, 0.5, 0.5, 0.5}, {0, 1, 0, 1}), 0.5);
}

TEST(Metrics, AucMatchesPairCounting) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> size(2, 50);
  std::uniform_int_distribution<int> level(0, 9);  // coarse scores force ties
  for (int round = 0; round < 1000; ++round) {
    const int n = size(rng);
    std::vector<double> scores;
    std::vector<int> labels;
    for (int i = 0; i < n; ++i) {
      scores.push_back(level(rng) / 10.0);
      labels.push_back(i == 0 ? 0 : i == 1 ? 1 : static_cast<int>(rng() % 2));
    }
    EXPECT_NEAR(roc_auc(scores, labels), testing::auc_by_pair_count(scores, labels), 1e-12);
  }
}

TEST(Metrics, F1IsHarmonicMean) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int round = 0; round < 100; ++round) {
    std::vector<double> scores;
    std::vector<int> labels;
    for (int i = 0; i < 30; ++i) {
      scores.push_back(u(rng));
      labels.push_back(i < 2 ? i : static_cast<int>(rng() % 2));
    }
    const Metrics m = compute_metrics(scores, labels);
    if (m.precision + m.recall == 0.0) {
      EXPECT_EQ(m.f1, 0.0);
    } else {
      EXPECT_NEAR(m.f1, 2 * m.precision * m.recall / (m.precision + m.recall), 1e-12);
    }
  }
}

TEST(Metrics, RankMetricsIgnoreMonotoneTransforms) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int round = 0; round < 100; ++round) {
    std::vector<double> scores, squashed;
    std::vector<int> labels;
    for (int i = 0; i < 40; ++i) {
      const double s = std::round(u(rng) * 20) / 20;
      scores.push_back(s);
      squashed.push_back(std::exp(3 * s) - 7);
      labels.push_back(i < 2 ? i : static_cast<int>(rng() % 2));
    }
    EXPECT_DOUBLE_EQ(roc_auc(scores, labels), roc_auc(squashed, labels));
    EXPECT_DOUBLE_EQ(average_precision(scores, labels), average_precision(squashed, labels));
  }
}

TEST(Metrics, SummaryUsesPopulationDeviation) {
  Metrics a, b;
  a.roc_auc = 0.6;
  b.roc_auc = 0.8;
  const MetricsRecord r = summarize({a, b});
  EXPECT_DOUBLE_EQ(r.mean.roc_auc, 0.7);
  EXPECT_NEAR(r.stddev.roc_auc, 0.1, 1e-12);
  EXPECT_EQ(r.folds.size(), 2u);
}

TEST(CrossValidation, PlantedSignalIsRecovered) {
  const SyntheticData data = make_synthetic({});
  const MetricsRecord drugs = cross_validate(data.bundle, data.gold, config(Scheme::kHideDrugs));
  const MetricsRecord assoc =
      cross_validate(data.bundle, data.gold, config(Scheme::kHideAssociations));
  EXPECT_EQ(drugs.folds.size(), 10u);
  EXPECT_GE(drugs.mean.roc_auc, 0.80);
  EXPECT_GE(assoc.mean.roc_auc, 0.80);
  // Hiding whole drugs is not easier than hiding single associations.
  EXPECT_LE(drugs.mean.roc_auc, assoc.mean.roc_auc + 0.05);
}

TEST(CrossValidation, PermutedLabelsScoreAtChance) {
  const SyntheticData data = permute_labels(make_synthetic({}), 42);
  const MetricsRecord r = cross_validate(data.bundle, data.gold, config(Scheme::kHideAssociations));
  EXPECT_GE(r.mean.roc_auc, 0.45);
  EXPECT_LE(r.mean.roc_auc, 0.55);
}

TEST(CrossValidation, DeterministicAcrossThreadCounts) {
  const SyntheticData data = make_synthetic({.drugs = 40, .diseases = 32, .clusters = 4});
  CvConfig c = config(Scheme::kHideDrugs);
  c.folds = 5;
  c.repetitions = 2;
  c.threads = 1;
  const MetricsRecord one = cross_validate(data.bundle, data.gold, c);
  c.threads = 3;
  EXPECT_EQ(cross_validate(data.bundle, data.gold, c), one);
  EXPECT_EQ(one.folds.size(), 10u);
  c.seed = 43;
  EXPECT_NE(cross_validate(data.bundle, data.gold, c), one);
}

TEST(CrossValidation, RejectsBadConfigurations) {
  const SyntheticData data = make_synthetic({.drugs = 20, .diseases = 16, .clusters = 4});
  CvConfig c;
  c.folds = 1;
  EXPECT_THROW(cross_validate(data.bundle, data.gold, c), PredictError);
  c.folds = 1000;  // more folds than associations leaves some empty
  EXPECT_THROW(cross_validate(data.bundle, data.gold, c), PredictError);
  EXPECT_THROW(parse_scheme("pairs"), PredictError);
  EXPECT_EQ(parse_scheme("drugs"), Scheme::kHideDrugs);
  EXPECT_EQ(scheme_name(Scheme::kHideAssociations), "associations");
}

// A held-out association must not feed its own feature: two drugs and two
// diseases, all similarities zero except the diagonal. With only (0,0) and
// (1,1) known, hiding (1,1) leaves it with all-zero features.
TEST(CrossValidation, HeldOutPairDoesNotSeeItself) {
  const SquareMatrix eye = matrix({{1.0, 0.0}, {0.0, 1.0}});
  const SimilarityBundle b = toy_bundle(eye, eye);
  const GoldStandard train = make_gold({{0, 0}}, b);
  const FeatureMatrix f = build_features(b, train, {{1, 1}}, true);
  for (double v : f.rows[0]) EXPECT_EQ(v, 0.0);
}

TEST(RunAndTrace, EmitsSixEvaluations) {
  const SyntheticData data = make_synthetic({.drugs = 40, .diseases = 32, .clusters = 4});
  const rdf::Graph workflows = fixture::generate_fixture();
  CvConfig c = config(Scheme::kHideAssociations);
  c.folds = 5;
  const auto start = trace::Timestamp::from_epoch_seconds(1700000000);
  const TracedRun run = run_and_trace(data.bundle, data.gold, c, workflows, start);
  EXPECT_EQ(run.metrics, cross_validate(data.bundle, data.gold, c));

  rdf::Graph merged = workflows;
  for (const rdf::Triple& t : run.trace.triples()) merged.insert(t);
  const trace::Trace loaded = trace::load_trace(merged);
  ASSERT_EQ(loaded.activities.count(run.activity), 1u);
  const trace::ActivityRecord& activity = loaded.activities.at(run.activity);
  EXPECT_EQ(activity.step.value(), fixture::kModelStep);
  EXPECT_EQ(activity.start, start);
  EXPECT_EQ(activity.associations.size(), 2u);
  ASSERT_EQ(activity.generated.size(), 6u);
  char expected[32];
  std::snprintf(expected, sizeof expected, "%.6f", run.metrics.mean.accuracy);
  std::set<std::string> measures;
  for (const rdf::Term& iri : activity.generated) {
    const trace::ArtifactRecord& e = loaded.artifacts.at(iri);
    ASSERT_TRUE(e.measure.has_value());
    measures.insert(e.measure->value());
    ASSERT_NE(e.value.find('.'), std::string::npos);
    EXPECT_EQ(e.value.size() - e.value.find('.') - 1, 6u) << e.value;
    if (e.measure->value() == fixture::kMeasureAccuracy) EXPECT_EQ(e.value, expected);
  }
  EXPECT_EQ(measures.size(), 6u);
  EXPECT_TRUE(measures.count(std::string(fixture::kMeasureRocAuc)));
}

TEST(Csv, ParsesSimilarityAndGold) {
  const LabeledMatrix m = parse_similarity_csv("id,A,B\nA,1,0.25\r\nB,0.25,1\n");
  EXPECT_EQ(m.ids, (std::vector<std::string>{"A", "B"}));
  EXPECT_DOUBLE_EQ(m.values(0, 1), 0.25);
  EXPECT_THROW(parse_similarity_csv("id,A,B\nA,1,x\nB,0,1\n"), ParseError);
  EXPECT_THROW(parse_similarity_csv("id,A,B\nA,1,0\n"), ParseError);
  EXPECT_THROW(parse_similarity_csv("id,A,B\nB,1,0\nA,0,1\n"), ParseError);

  const SimilarityBundle b = toy_bundle(m.values, m.values);
  const GoldStandard g = parse_gold_csv("drug,disease\nd1,s0\nd0,s1\n", b);
  EXPECT_EQ(g.positives, (std::vector<Pair>{{0, 1}, {1, 0}}));
  EXPECT_THROW(parse_gold_csv("drug,disease\nd9,s0\n", b), ParseError);
  EXPECT_THROW(parse_gold_csv("drug,disease\nd1,s0\nd1,s0\n", b), PredictError);
}

}  // namespace
}  // namespace plexflow::predict
