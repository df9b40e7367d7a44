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

#include "plexflow/predict/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "plexflow/predict/similarity.hpp"

namespace plexflow::predict {
namespace {

void check(const std::vector<double>& scores, const std::vector<int>& labels) {
  if (scores.size() != labels.size()) throw PredictError("scores and labels differ in size");
  const auto pos = std::count(labels.begin(), labels.end(), 1);
  if (pos == 0 || pos == static_cast<long>(labels.size())) {
    throw PredictError("rank metrics need both classes");
  }
}

// Indices sorted by descending score.
std::vector<std::size_t> by_score_desc(const std::vector<double>& scores) {
  std::vector<std::size_t> idx(scores.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  return idx;
}

template <typename Field>
void accumulate(const std::vector<Metrics>& folds, Field field, Metrics& mean, Metrics& sd) {
  const double n = static_cast<double>(folds.size());
  double sum = 0.0;
  for (const Metrics& m : folds) sum += m.*field;
  const double mu = sum / n;
  double sq = 0.0;
  for (const Metrics& m : folds) sq += (m.*field - mu) * (m.*field - mu);
  mean.*field = mu;
  sd.*field = std::sqrt(sq / n);
}

}  // namespace

double roc_auc(const std::vector<double>& scores, const std::vector<int>& labels) {
  check(scores, labels);
  std::vector<std::size_t> idx(scores.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  double rank_sum = 0.0;
  double pos = 0.0;
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j < idx.size() && scores[idx[j]] == scores[idx[i]]) ++j;
    const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t t = i; t < j; ++t) {
      if (labels[idx[t]] == 1) {
        rank_sum += midrank;
        pos += 1.0;
      }
    }
    i = j;
  }
  const double neg = static_cast<double>(scores.size()) - pos;
  return (rank_sum - pos * (pos + 1.0) / 2.0) / (pos * neg);
}

double average_precision(const std::vector<double>& scores, const std::vector<int>& labels) {
  check(scores, labels);
  const auto idx = by_score_desc(scores);
  const double total_pos = static_cast<double>(std::count(labels.begin(), labels.end(), 1));
  double tp = 0.0;
  double seen = 0.0;
  double prev_recall = 0.0;
  double ap = 0.0;
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j < idx.size() && scores[idx[j]] == scores[idx[i]]) {
      tp += labels[idx[j]];
      seen += 1.0;
      ++j;
    }
    const double recall = tp / total_pos;
    ap += (recall - prev_recall) * (tp / seen);
    prev_recall = recall;
    i = j;
  }
  return ap;
}

Metrics compute_metrics(const std::vector<double>& scores, const std::vector<int>& labels,
                        double threshold) {
  Metrics m;
  m.roc_auc = roc_auc(scores, labels);
  m.aupr = average_precision(scores, labels);
  double tp = 0, fp = 0, tn = 0, fn = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const bool predicted = scores[i] >= threshold;
    if (predicted && labels[i] == 1) ++tp;
    if (predicted && labels[i] == 0) ++fp;
    if (!predicted && labels[i] == 0) ++tn;
    if (!predicted && labels[i] == 1) ++fn;
  }
  m.accuracy = (tp + tn) / static_cast<double>(scores.size());
  m.precision = tp + fp > 0 ? tp / (tp + fp) : 0.0;
  m.recall = tp / (tp + fn);
  m.f1 = m.precision + m.recall > 0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  return m;
}

MetricsRecord summarize(std::vector<Metrics> folds) {
  if (folds.empty()) throw PredictError("no folds to summarize");
  MetricsRecord r;
  r.folds = std::move(folds);
  for (auto field : {&Metrics::roc_auc, &Metrics::aupr, &Metrics::accuracy, &Metrics::precision,
                     &Metrics::recall, &Metrics::f1}) {
    accumulate(r.folds, field, r.mean, r.stddev);
  }
  return r;
}

}  // namespace plexflow::predict
