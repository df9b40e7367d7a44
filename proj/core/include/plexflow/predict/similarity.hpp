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

#ifndef PLEXFLOW_PREDICT_SIMILARITY_HPP_
#define PLEXFLOW_PREDICT_SIMILARITY_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plexflow/util/error.hpp"

namespace plexflow::predict {

class PredictError : public Error {
 public:
  using Error::Error;
};

// Dense row-major n x n matrix.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  // Sets (i, j) and (j, i).
  void set_symmetric(std::size_t i, std::size_t j, double value) {
    (*this)(i, j) = value;
    (*this)(j, i) = value;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

inline constexpr std::size_t kDrugMeasures = 5;
inline constexpr std::size_t kDiseaseMeasures = 2;

struct SimilarityBundle {
  std::vector<SquareMatrix> drug_sims;     // kDrugMeasures matrices over drugs
  std::vector<SquareMatrix> disease_sims;  // kDiseaseMeasures matrices over diseases
  std::vector<std::string> drug_ids;
  std::vector<std::string> disease_ids;

  std::size_t drugs() const noexcept { return drug_ids.size(); }
  std::size_t diseases() const noexcept { return disease_ids.size(); }
};

// (drug index, disease index).
using Pair = std::pair<std::size_t, std::size_t>;

struct GoldStandard {
  std::vector<Pair> positives;  // sorted, distinct
};

/// Throws PredictError unless the bundle has 5 drug and 2 disease matrices
/// of matching size, each symmetric within 1e-12 with unit diagonal and
/// entries in [0, 1].
void validate(const SimilarityBundle& bundle);

// Throws PredictError for out-of-range indices or duplicates. Sorts.
GoldStandard make_gold(std::vector<Pair> positives, const SimilarityBundle& bundle);

struct LabeledMatrix {
  std::vector<std::string> ids;
  SquareMatrix values;
};

/// CSV with a header row of identifiers (first cell ignored) and one row per
/// identifier: the identifier, then the similarities. Throws ParseError.
LabeledMatrix parse_similarity_csv(std::string_view text);

/// CSV of "drug,disease" identifier rows after a header row. Throws
/// ParseError for unknown identifiers.
GoldStandard parse_gold_csv(std::string_view text, const SimilarityBundle& bundle);

struct SyntheticConfig {
  std::size_t drugs = 100;
  std::size_t diseases = 80;
  std::size_t clusters = 8;
  std::size_t associations_per_drug = 3;
  // Share of a drug's associations that fall in its own disease cluster.
  double planted = 0.95;
  std::uint64_t seed = 42;
};

struct SyntheticData {
  SimilarityBundle bundle;
  GoldStandard gold;
};

/// Block-structured similarities: drugs and diseases are split into the
/// same number of clusters, and each similarity measure draws higher values
/// inside a cluster than across. Drug cluster c is associated mostly with
/// disease cluster c.
SyntheticData make_synthetic(const SyntheticConfig& config);

/// Same similarities, but the positives are a uniformly random set of pairs
/// of the same size, so labels carry no signal.
SyntheticData permute_labels(const SyntheticData& data, std::uint64_t seed);

}  // namespace plexflow::predict

#endif  // PLEXFLOW_PREDICT_SIMILARITY_HPP_
