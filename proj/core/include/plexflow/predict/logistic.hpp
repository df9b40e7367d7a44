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

#ifndef PLEXFLOW_PREDICT_LOGISTIC_HPP_
#define PLEXFLOW_PREDICT_LOGISTIC_HPP_

#include <cstdint>
#include <vector>

#include "plexflow/predict/features.hpp"

namespace plexflow::predict {

struct LogisticHyper {
  double learning_rate = 0.1;
  int iterations = 2000;
  double l2 = 1e-4;
  std::uint64_t seed = 42;
};

struct LogisticModel {
  std::vector<double> weights;  // one per feature column
  double bias = 0.0;
  LogisticHyper hyper;
};

/// Mean cross-entropy plus l2/2 * |w|^2 (the bias is not penalized) at
/// parameters `theta` = (w..., b). Fills `gradient` (same layout) when
/// non-null. Rows may have any width equal to theta.size() - 1.
double logistic_loss(const std::vector<std::vector<double>>& x, const std::vector<int>& y,
                     const std::vector<double>& theta, double l2,
                     std::vector<double>* gradient = nullptr);

/// Full-batch gradient descent from zero weights for `hyper.iterations`
/// steps; `losses`, when given, receives the loss before every step and the
/// final loss. Throws PredictError unless both classes are present.
LogisticModel train_logistic(const std::vector<std::vector<double>>& x, const std::vector<int>& y,
                             const LogisticHyper& hyper = {},
                             std::vector<double>* losses = nullptr);
LogisticModel train_logistic(const FeatureMatrix& f, const LogisticHyper& hyper = {});

// 1 / (1 + exp(-(w.x + b))). Throws PredictError on a width mismatch.
double predict_proba(const LogisticModel& model, const std::vector<double>& x);
double predict_proba(const LogisticModel& model, const FeatureRow& x);

std::vector<std::vector<double>> to_rows(const FeatureMatrix& f);

}  // namespace plexflow::predict

#endif  // PLEXFLOW_PREDICT_LOGISTIC_HPP_
