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

#include "plexflow/predict/logistic.hpp"

#include <algorithm>
#include <cmath>

namespace plexflow::predict {
namespace {

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow.
double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

}  // namespace

double logistic_loss(const std::vector<std::vector<double>>& x, const std::vector<int>& y,
                     const std::vector<double>& theta, double l2, std::vector<double>* gradient) {
  const std::size_t k = theta.size() - 1;
  const double n = static_cast<double>(x.size());
  double loss = 0.0;
  if (gradient) gradient->assign(theta.size(), 0.0);
  for (std::size_t r = 0; r < x.size(); ++r) {
    double z = theta[k];
    for (std::size_t i = 0; i < k; ++i) z += theta[i] * x[r][i];
    // -[y log p + (1 - y) log(1 - p)] = softplus(z) - y z
    loss += softplus(z) - y[r] * z;
    if (gradient) {
      const double err = sigmoid(z) - y[r];
      for (std::size_t i = 0; i < k; ++i) (*gradient)[i] += err * x[r][i];
      (*gradient)[k] += err;
    }
  }
  loss /= n;
  double norm = 0.0;
  for (std::size_t i = 0; i < k; ++i) norm += theta[i] * theta[i];
  loss += 0.5 * l2 * norm;
  if (gradient) {
    for (double& g : *gradient) g /= n;
    for (std::size_t i = 0; i < k; ++i) (*gradient)[i] += l2 * theta[i];
  }
  return loss;
}

LogisticModel train_logistic(const std::vector<std::vector<double>>& x, const std::vector<int>& y,
                             const LogisticHyper& hyper, std::vector<double>* losses) {
  const bool has_pos = std::find(y.begin(), y.end(), 1) != y.end();
  const bool has_neg = std::find(y.begin(), y.end(), 0) != y.end();
  if (x.empty() || !has_pos || !has_neg) {
    throw PredictError("training data needs both classes");
  }
  const std::size_t k = x.front().size();
  std::vector<double> theta(k + 1, 0.0);
  std::vector<double> grad;
  for (int it = 0; it < hyper.iterations; ++it) {
    const double loss = logistic_loss(x, y, theta, hyper.l2, &grad);
    if (losses) losses->push_back(loss);
    for (std::size_t i = 0; i <= k; ++i) theta[i] -= hyper.learning_rate * grad[i];
  }
  if (losses) losses->push_back(logistic_loss(x, y, theta, hyper.l2));
  LogisticModel m;
  m.bias = theta[k];
  theta.pop_back();
  m.weights = std::move(theta);
  m.hyper = hyper;
  for (double w : m.weights) {
    if (!std::isfinite(w)) throw PredictError("training diverged");
  }
  return m;
}

std::vector<std::vector<double>> to_rows(const FeatureMatrix& f) {
  std::vector<std::vector<double>> rows;
  rows.reserve(f.size());
  for (const FeatureRow& r : f.rows) rows.emplace_back(r.begin(), r.end());
  return rows;
}

LogisticModel train_logistic(const FeatureMatrix& f, const LogisticHyper& hyper) {
  return train_logistic(to_rows(f), f.labels, hyper);
}

double predict_proba(const LogisticModel& m, const std::vector<double>& x) {
  if (x.size() != m.weights.size()) throw PredictError("feature width mismatch");
  double z = m.bias;
  for (std::size_t i = 0; i < x.size(); ++i) z += m.weights[i] * x[i];
  return sigmoid(z);
}

double predict_proba(const LogisticModel& m, const FeatureRow& x) {
  return predict_proba(m, std::vector<double>(x.begin(), x.end()));
}

}  // namespace plexflow::predict
