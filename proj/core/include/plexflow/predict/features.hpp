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

#ifndef PLEXFLOW_PREDICT_FEATURES_HPP_
#define PLEXFLOW_PREDICT_FEATURES_HPP_

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "plexflow/predict/similarity.hpp"

namespace plexflow::predict {

inline constexpr std::size_t kFeatureCount = kDrugMeasures * kDiseaseMeasures;

using FeatureRow = std::array<double, kFeatureCount>;

// Column (i, j) is drug measure i combined with disease measure j, at index
// i * kDiseaseMeasures + j.
struct FeatureMatrix {
  std::vector<Pair> pairs;
  std::vector<FeatureRow> rows;
  std::vector<int> labels;  // 0 or 1

  std::size_t size() const noexcept { return rows.size(); }
};

/// x^w.first * y^w.second. Zero inputs give zero. Throws PredictError for
/// negative weights, weights not summing to 1, or inputs outside [0, 1].
double weighted_geometric_mean(double x, double y, std::pair<double, double> w = {0.5, 0.5});

/// Feature (i, j) of candidate (d, s) is the maximum over known associations
/// (d', s') of weighted_geometric_mean(drug_i[d][d'], disease_j[s][s']),
/// skipping (d, s) itself when `exclude_self`; 0 when nothing is left.
/// Labels are 1 for candidates in `gold`. Throws PredictError for an empty
/// gold standard or out-of-range candidates.
FeatureMatrix build_features(const SimilarityBundle& bundle, const GoldStandard& gold,
                             const std::vector<Pair>& candidates, bool exclude_self,
                             std::pair<double, double> weights = {0.5, 0.5});

}  // namespace plexflow::predict

#endif  // PLEXFLOW_PREDICT_FEATURES_HPP_
