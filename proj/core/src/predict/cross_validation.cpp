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

#include "plexflow/predict/cross_validation.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "plexflow/fixture/openpredict.hpp"
#include "plexflow/trace/tracer.hpp"

namespace plexflow::predict {
namespace {

struct FoldSplit {
  std::set<Pair> test_positives;
  std::set<std::size_t> test_drugs;  // kHideDrugs only
};

std::mt19937_64 stream(std::uint64_t seed, std::size_t rep, std::size_t fold) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(rep), static_cast<std::uint32_t>(fold)};
  return std::mt19937_64(seq);
}

// All folds of one repetition.
std::vector<FoldSplit> split(const SimilarityBundle& b, const GoldStandard& gold,
                             const CvConfig& cfg, std::size_t rep) {
  std::mt19937_64 rng = stream(cfg.seed, rep, cfg.folds);  // fold index past the last fold
  std::vector<FoldSplit> folds(cfg.folds);
  if (cfg.scheme == Scheme::kHideAssociations) {
    std::vector<Pair> pos = gold.positives;
    std::shuffle(pos.begin(), pos.end(), rng);
    for (std::size_t i = 0; i < pos.size(); ++i) folds[i % cfg.folds].test_positives.insert(pos[i]);
  } else {
    std::vector<std::size_t> drugs(b.drugs());
    for (std::size_t i = 0; i < drugs.size(); ++i) drugs[i] = i;
    std::shuffle(drugs.begin(), drugs.end(), rng);
    for (std::size_t i = 0; i < drugs.size(); ++i) folds[i % cfg.folds].test_drugs.insert(drugs[i]);
    for (FoldSplit& f : folds) {
      for (const Pair& p : gold.positives) {
        if (f.test_drugs.count(p.first) != 0) f.test_positives.insert(p);
      }
    }
  }
  for (const FoldSplit& f : folds) {
    if (f.test_positives.empty()) throw PredictError("a cross-validation fold has no positive");
  }
  return folds;
}

// Up to `count` distinct unlabeled pairs accepted by `allowed`, not in `taken`.
template <typename Allowed>
std::vector<Pair> sample_negatives(const SimilarityBundle& b, const GoldStandard& gold,
                                   std::size_t count, Allowed allowed, std::set<Pair>& taken,
                                   std::mt19937_64& rng) {
  std::vector<Pair> pool;
  for (std::size_t d = 0; d < b.drugs(); ++d) {
    if (!allowed(d)) continue;
    for (std::size_t s = 0; s < b.diseases(); ++s) {
      const Pair p{d, s};
      if (taken.count(p) == 0 &&
          !std::binary_search(gold.positives.begin(), gold.positives.end(), p)) {
        pool.push_back(p);
      }
    }
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min(count, pool.size()));
  taken.insert(pool.begin(), pool.end());
  return pool;
}

Metrics run_fold(const SimilarityBundle& b, const GoldStandard& gold, const CvConfig& cfg,
                 const FoldSplit& fold, std::mt19937_64 rng) {
  GoldStandard train_gold;
  for (const Pair& p : gold.positives) {
    if (fold.test_positives.count(p) == 0) train_gold.positives.push_back(p);
  }
  if (train_gold.positives.empty()) throw PredictError("a training fold has no positive");

  const bool hide_drugs = cfg.scheme == Scheme::kHideDrugs;
  auto is_test_drug = [&](std::size_t d) { return fold.test_drugs.count(d) != 0; };
  std::set<Pair> taken;
  std::vector<Pair> train = train_gold.positives;
  for (const Pair& p : sample_negatives(
           b, gold, train_gold.positives.size(),
           [&](std::size_t d) { return !hide_drugs || !is_test_drug(d); }, taken, rng)) {
    train.push_back(p);
  }
  std::vector<Pair> test(fold.test_positives.begin(), fold.test_positives.end());
  for (const Pair& p : sample_negatives(
           b, gold, fold.test_positives.size(),
           [&](std::size_t d) { return !hide_drugs || is_test_drug(d); }, taken, rng)) {
    test.push_back(p);
  }

  // Features come from the training gold only; labels from the full one.
  auto label = [&](FeatureMatrix& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      f.labels[i] = std::binary_search(gold.positives.begin(), gold.positives.end(), f.pairs[i]);
    }
  };
  FeatureMatrix train_f = build_features(b, train_gold, train, true, cfg.weights);
  FeatureMatrix test_f = build_features(b, train_gold, test, true, cfg.weights);
  label(train_f);
  label(test_f);

  const LogisticModel model = train_logistic(train_f, cfg.hyper);
  std::vector<double> scores;
  scores.reserve(test_f.size());
  for (const FeatureRow& row : test_f.rows) scores.push_back(predict_proba(model, row));
  return compute_metrics(scores, test_f.labels, cfg.threshold);
}

std::string six_decimals(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

Scheme parse_scheme(std::string_view name) {
  if (name == "drugs") return Scheme::kHideDrugs;
  if (name == "associations") return Scheme::kHideAssociations;
  throw PredictError("unknown scheme '" + std::string(name) + "' (drugs|associations)");
}

std::string_view scheme_name(Scheme scheme) {
  return scheme == Scheme::kHideDrugs ? "drugs" : "associations";
}

MetricsRecord cross_validate(const SimilarityBundle& b, const GoldStandard& gold,
                             const CvConfig& cfg) {
  if (cfg.folds < 2) throw PredictError("cross-validation needs at least 2 folds");
  if (cfg.repetitions < 1) throw PredictError("cross-validation needs at least 1 repetition");
  validate(b);
  if (gold.positives.empty()) throw PredictError("empty gold standard");

  std::vector<std::vector<FoldSplit>> splits;
  for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) splits.push_back(split(b, gold, cfg, rep));

  const std::size_t jobs = cfg.repetitions * cfg.folds;
  std::vector<Metrics> results(jobs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      const std::size_t rep = job / cfg.folds;
      const std::size_t fold = job % cfg.folds;
      try {
        results[job] = run_fold(b, gold, cfg, splits[rep][fold], stream(cfg.seed, rep, fold));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::size_t threads = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, jobs);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return summarize(std::move(results));
}

TracedRun run_and_trace(const SimilarityBundle& b, const GoldStandard& gold,
                        const CvConfig& cfg, const rdf::Graph& workflows,
                        trace::Timestamp started_at) {
  using rdf::Term;
  TracedRun out;
  out.metrics = cross_validate(b, gold, cfg);
  trace::Tracer tracer(workflows);
  out.activity = tracer.begin_activity(Term::iri(fixture::kModelStep),
                                       Term::iri(fixture::kAgentJoao),
                                       Term::iri(fixture::kRoleExecutor), started_at);
  tracer.associate(out.activity, Term::iri(fixture::kAgentJupyter),
                   Term::iri(fixture::kRoleExecutionEnvironment));
  const auto done = trace::Timestamp::from_epoch_ms(started_at.epoch_ms() + 1000);
  const Metrics& m = out.metrics.mean;
  const std::pair<std::string_view, double> evaluations[] = {
      {fixture::kMeasureAccuracy, m.accuracy}, {fixture::kMeasureAveragePrecision, m.aupr},
      {fixture::kMeasureF1, m.f1},             {fixture::kMeasurePrecision, m.precision},
      {fixture::kMeasureRecall, m.recall},     {fixture::kMeasureRocAuc, m.roc_auc}};
  for (const auto& [measure, value] : evaluations) {
    tracer.record_evaluation(out.activity, Term::iri(measure), six_decimals(value), done);
  }
  tracer.end_activity(out.activity, done);
  out.trace = trace::emit_trace(tracer.trace());
  return out;
}

}  // namespace plexflow::predict
