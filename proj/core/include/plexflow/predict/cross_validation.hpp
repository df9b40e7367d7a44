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

#ifndef PLEXFLOW_PREDICT_CROSS_VALIDATION_HPP_
#define PLEXFLOW_PREDICT_CROSS_VALIDATION_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>

#include "plexflow/predict/features.hpp"
#include "plexflow/predict/logistic.hpp"
#include "plexflow/predict/metrics.hpp"
#include "plexflow/predict/similarity.hpp"
#include "plexflow/rdf/graph.hpp"
#include "plexflow/trace/timestamp.hpp"

namespace plexflow::predict {

enum class Scheme { kHideDrugs, kHideAssociations };

// "drugs" / "associations". Throws PredictError for anything else.
Scheme parse_scheme(std::string_view name);
std::string_view scheme_name(Scheme scheme);

struct CvConfig {
  Scheme scheme = Scheme::kHideAssociations;
  std::size_t folds = 10;
  std::size_t repetitions = 1;
  std::uint64_t seed = 42;
  LogisticHyper hyper;
  std::pair<double, double> weights = {0.5, 0.5};
  double threshold = 0.5;
  // Worker threads for fold evaluation; 0 means hardware concurrency.
  // Results do not depend on it.
  std::size_t threads = 0;
};

/// k-fold cross-validation, repeated.
///
/// kHideDrugs splits the drugs into folds; a fold's test pairs involve only
/// its drugs, and their associations are removed from the gold standard the
/// features are built from. kHideAssociations splits the known associations;
/// a fold's positives are removed from that gold standard. Both sample
/// negatives 1:1 from unlabeled pairs, separately for training and test, with
/// a random stream per (seed, repetition, fold).
///
/// Throws PredictError if folds < 2 or some fold gets no positive.
MetricsRecord cross_validate(const SimilarityBundle& bundle, const GoldStandard& gold,
                             const CvConfig& config);

struct TracedRun {
  MetricsRecord metrics;
  rdf::Graph trace;
  rdf::Term activity = rdf::Term::iri("urn:unset");
};

/// cross_validate, then one activity on the model-training step of
/// `workflows` (executor and execution-environment associations) generating
/// six model evaluations with the mean metrics formatted to six decimals.
/// The activity starts at `started_at`; evaluations and the end are one
/// second later.
TracedRun run_and_trace(const SimilarityBundle& bundle, const GoldStandard& gold,
                        const CvConfig& config, const rdf::Graph& workflows,
                        trace::Timestamp started_at);

}  // namespace plexflow::predict

#endif  // PLEXFLOW_PREDICT_CROSS_VALIDATION_HPP_
