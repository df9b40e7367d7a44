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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "plexflow/predict/cross_validation.hpp"
#include "plexflow/predict/features.hpp"
#include "plexflow/predict/logistic.hpp"
#include "plexflow/predict/metrics.hpp"

namespace plexflow::predict {
namespace {

SyntheticData scaled(std::int64_t drugs) {
  const auto d = static_cast<std::size_t>(drugs);
  return make_synthetic({.drugs = d, .diseases = d * 4 / 5});
}

void BM_BuildFeatures(benchmark::State& state) {
  const SyntheticData data = scaled(state.range(0));
  std::vector<Pair> candidates;
  for (std::size_t d = 0; d < data.bundle.drugs(); ++d) candidates.emplace_back(d, d % data.bundle.diseases());
  for (auto _ : state) benchmark::DoNotOptimize(build_features(data.bundle, data.gold, candidates, true));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * candidates.size()));
}
BENCHMARK(BM_BuildFeatures)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_TrainLogistic(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> x;
  std::vector<int> y;
  for (std::int64_t i = 0; i < state.range(0); ++i) {
    std::vector<double> row(kFeatureCount);
    for (double& v : row) v = u(rng);
    y.push_back(row[0] + row[1] > 1.0);
    x.push_back(std::move(row));
  }
  for (auto _ : state) benchmark::DoNotOptimize(train_logistic(x, y));
}
BENCHMARK(BM_TrainLogistic)->Arg(100)->Arg(600)->Unit(benchmark::kMillisecond);

void BM_RocAuc(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> scores;
  std::vector<int> labels;
  for (std::int64_t i = 0; i < state.range(0); ++i) {
    scores.push_back(u(rng));
    labels.push_back(static_cast<int>(i % 2));
  }
  for (auto _ : state) benchmark::DoNotOptimize(roc_auc(scores, labels));
}
BENCHMARK(BM_RocAuc)->Range(64, 1 << 16);

void BM_CrossValidate(benchmark::State& state) {
  const SyntheticData data = scaled(100);
  CvConfig cfg;
  cfg.scheme = state.range(0) == 0 ? Scheme::kHideDrugs : Scheme::kHideAssociations;
  cfg.threads = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cross_validate(data.bundle, data.gold, cfg));
}
BENCHMARK(BM_CrossValidate)
    ->ArgsProduct({{0, 1}, {1, 4}})
    ->ArgNames({"assoc", "threads"})
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace plexflow::predict

BENCHMARK_MAIN();
