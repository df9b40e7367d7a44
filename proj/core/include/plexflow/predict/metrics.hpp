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

#ifndef PLEXFLOW_PREDICT_METRICS_HPP_
#define PLEXFLOW_PREDICT_METRICS_HPP_

#include <vector>

namespace plexflow::predict {

struct Metrics {
  double roc_auc = 0.0;
  double aupr = 0.0;  // average precision
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

/// Mann-Whitney rank statistic with midranks for ties. Throws PredictError
/// unless both classes are present or the sizes differ.
double roc_auc(const std::vector<double>& scores, const std::vector<int>& labels);

/// Sum over distinct score thresholds (high to low) of
/// (recall gain) * precision; tied scores form one step.
double average_precision(const std::vector<double>& scores, const std::vector<int>& labels);

/// Rank metrics plus accuracy, precision, recall and F1 with score >=
/// threshold predicted positive. Precision is 0 when nothing is predicted
/// positive; F1 is 0 when precision and recall are both 0.
Metrics compute_metrics(const std::vector<double>& scores, const std::vector<int>& labels,
                        double threshold = 0.5);

struct MetricsRecord {
  std::vector<Metrics> folds;  // one per (repetition, fold), repetition-major
  Metrics mean;
  Metrics stddev;  // population standard deviation over folds

  friend bool operator==(const MetricsRecord&, const MetricsRecord&) = default;
};

MetricsRecord summarize(std::vector<Metrics> folds);

}  // namespace plexflow::predict

#endif  // PLEXFLOW_PREDICT_METRICS_HPP_
