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

#include "plexflow/predict/features.hpp"

#include <algorithm>
#include <cmath>

namespace plexflow::predict {

double weighted_geometric_mean(double x, double y, std::pair<double, double> w) {
  if (w.first < 0.0 || w.second < 0.0 || std::abs(w.first + w.second - 1.0) > 1e-12) {
    throw PredictError("geometric mean weights must be nonnegative and sum to 1");
  }
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0)) {
    throw PredictError("geometric mean inputs must be in [0, 1]");
  }
  if (x == 0.0 || y == 0.0) return 0.0;
  if (w.first == 0.5 && w.second == 0.5) return std::sqrt(x * y);
  return std::pow(x, w.first) * std::pow(y, w.second);
}

FeatureMatrix build_features(const SimilarityBundle& b, const GoldStandard& gold,
                             const std::vector<Pair>& candidates, bool exclude_self,
                             std::pair<double, double> weights) {
  if (gold.positives.empty()) throw PredictError("empty gold standard");
  weighted_geometric_mean(1.0, 1.0, weights);  // validates the weights
  FeatureMatrix f;
  f.pairs = candidates;
  f.rows.reserve(candidates.size());
  f.labels.reserve(candidates.size());
  for (const Pair& c : candidates) {
    const auto [d, s] = c;
    if (d >= b.drugs() || s >= b.diseases()) throw PredictError("candidate out of range");
    FeatureRow row{};
    for (const Pair& known : gold.positives) {
      if (exclude_self && known == c) continue;
      for (std::size_t i = 0; i < kDrugMeasures; ++i) {
        const double x = b.drug_sims[i](d, known.first);
        for (std::size_t j = 0; j < kDiseaseMeasures; ++j) {
          double& cell = row[i * kDiseaseMeasures + j];
          cell = std::max(cell, weighted_geometric_mean(x, b.disease_sims[j](s, known.second),
                                                        weights));
        }
      }
    }
    f.rows.push_back(row);
    f.labels.push_back(std::binary_search(gold.positives.begin(), gold.positives.end(), c));
  }
  return f;
}

}  // namespace plexflow::predict
