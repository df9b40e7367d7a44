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

#include "plexflow/predict/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace plexflow::predict {
namespace {

void validate_matrix(const SquareMatrix& m, std::size_t n, const char* what) {
  if (m.size() != n) {
    throw PredictError(std::string(what) + " similarity matrix has the wrong size");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != 1.0) throw PredictError(std::string(what) + " similarity diagonal is not 1");
    for (std::size_t j = 0; j < n; ++j) {
      const double x = m(i, j);
      if (!(x >= 0.0 && x <= 1.0)) {
        throw PredictError(std::string(what) + " similarity outside [0, 1]");
      }
      if (std::abs(x - m(j, i)) > 1e-12) {
        throw PredictError(std::string(what) + " similarity matrix is not symmetric");
      }
    }
  }
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    std::string cell(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
    out.push_back(std::move(cell));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::vector<std::string>> csv_rows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line != "\r") rows.push_back(split_csv_line(line));
    start = nl + 1;
  }
  return rows;
}

// Symmetric matrix with unit diagonal; entries drawn inside [lo, hi] of
// `within` when both items share a cluster, else of `across`.
SquareMatrix block_similarity(const std::vector<std::size_t>& cluster, std::mt19937_64& rng,
                              std::pair<double, double> within,
                              std::pair<double, double> across) {
  const std::size_t n = cluster.size();
  SquareMatrix m(n);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto [lo, hi] = cluster[i] == cluster[j] ? within : across;
      m.set_symmetric(i, j, lo + (hi - lo) * u(rng));
    }
  }
  return m;
}

std::vector<std::size_t> assign_clusters(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<std::size_t> cluster(n);
  for (std::size_t i = 0; i < n; ++i) cluster[i] = i % k;
  std::shuffle(cluster.begin(), cluster.end(), rng);
  return cluster;
}

std::vector<std::string> numbered(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  char buf[32];
  for (std::size_t i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof buf, "%s%03zu", prefix, i);
    out.emplace_back(buf);
  }
  return out;
}

}  // namespace

void validate(const SimilarityBundle& b) {
  if (b.drug_sims.size() != kDrugMeasures || b.disease_sims.size() != kDiseaseMeasures) {
    throw PredictError("expected 5 drug and 2 disease similarity matrices");
  }
  for (const SquareMatrix& m : b.drug_sims) validate_matrix(m, b.drugs(), "drug");
  for (const SquareMatrix& m : b.disease_sims) validate_matrix(m, b.diseases(), "disease");
}

GoldStandard make_gold(std::vector<Pair> positives, const SimilarityBundle& b) {
  std::sort(positives.begin(), positives.end());
  if (std::adjacent_find(positives.begin(), positives.end()) != positives.end()) {
    throw PredictError("duplicate association in gold standard");
  }
  for (const Pair& p : positives) {
    if (p.first >= b.drugs() || p.second >= b.diseases()) {
      throw PredictError("gold standard index out of range");
    }
  }
  return GoldStandard{std::move(positives)};
}

LabeledMatrix parse_similarity_csv(std::string_view text) {
  const auto rows = csv_rows(text);
  if (rows.empty()) throw ParseError("empty similarity CSV", 1, 0);
  LabeledMatrix out;
  out.ids.assign(rows[0].begin() + 1, rows[0].end());
  const std::size_t n = out.ids.size();
  if (rows.size() != n + 1) throw ParseError("similarity CSV is not square", rows.size(), 0);
  out.values = SquareMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i + 1];
    if (row.size() != n + 1) throw ParseError("wrong number of cells", i + 2, 0);
    if (row[0] != out.ids[i]) throw ParseError("row identifier does not match header", i + 2, 1);
    for (std::size_t j = 0; j < n; ++j) {
      try {
        std::size_t used = 0;
        out.values(i, j) = std::stod(row[j + 1], &used);
        if (used != row[j + 1].size()) throw std::invalid_argument("trailing text");
      } catch (const std::exception&) {
        throw ParseError("not a number: " + row[j + 1], i + 2, j + 2);
      }
    }
  }
  return out;
}

GoldStandard parse_gold_csv(std::string_view text, const SimilarityBundle& b) {
  std::map<std::string, std::size_t> drugs;
  std::map<std::string, std::size_t> diseases;
  for (std::size_t i = 0; i < b.drugs(); ++i) drugs[b.drug_ids[i]] = i;
  for (std::size_t i = 0; i < b.diseases(); ++i) diseases[b.disease_ids[i]] = i;
  const auto rows = csv_rows(text);
  std::vector<Pair> positives;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != 2) throw ParseError("expected drug,disease", r + 1, 0);
    auto d = drugs.find(rows[r][0]);
    auto s = diseases.find(rows[r][1]);
    if (d == drugs.end()) throw ParseError("unknown drug " + rows[r][0], r + 1, 1);
    if (s == diseases.end()) throw ParseError("unknown disease " + rows[r][1], r + 1, 2);
    positives.emplace_back(d->second, s->second);
  }
  return make_gold(std::move(positives), b);
}

SyntheticData make_synthetic(const SyntheticConfig& cfg) {
  if (cfg.clusters == 0 || cfg.drugs < cfg.clusters || cfg.diseases < cfg.clusters) {
    throw PredictError("need at least one drug and one disease per cluster");
  }
  std::mt19937_64 rng(cfg.seed);
  const auto drug_cluster = assign_clusters(cfg.drugs, cfg.clusters, rng);
  const auto disease_cluster = assign_clusters(cfg.diseases, cfg.clusters, rng);

  SyntheticData out;
  out.bundle.drug_ids = numbered("DRUG", cfg.drugs);
  out.bundle.disease_ids = numbered("DIS", cfg.diseases);
  // Measures differ in how sharply they separate clusters.
  for (std::size_t m = 0; m < kDrugMeasures; ++m) {
    const double spread = 0.05 * static_cast<double>(m);
    out.bundle.drug_sims.push_back(block_similarity(drug_cluster, rng, {0.55 - spread, 0.95},
                                                    {0.0, 0.35 + spread}));
  }
  for (std::size_t m = 0; m < kDiseaseMeasures; ++m) {
    const double spread = 0.1 * static_cast<double>(m);
    out.bundle.disease_sims.push_back(block_similarity(disease_cluster, rng,
                                                       {0.55 - spread, 0.95},
                                                       {0.0, 0.35 + spread}));
  }

  std::vector<std::vector<std::size_t>> diseases_in(cfg.clusters);
  for (std::size_t s = 0; s < cfg.diseases; ++s) diseases_in[disease_cluster[s]].push_back(s);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::set<Pair> positives;
  for (std::size_t d = 0; d < cfg.drugs; ++d) {
    const auto& own = diseases_in[drug_cluster[d]];
    std::size_t added = 0;
    for (std::size_t attempt = 0; added < cfg.associations_per_drug && attempt < 100; ++attempt) {
      const std::size_t s = u(rng) < cfg.planted
                                ? own[static_cast<std::size_t>(u(rng) * own.size())]
                                : static_cast<std::size_t>(u(rng) * cfg.diseases);
      added += positives.emplace(d, s).second;
    }
  }
  out.gold = make_gold({positives.begin(), positives.end()}, out.bundle);
  return out;
}

SyntheticData permute_labels(const SyntheticData& data, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t drugs = data.bundle.drugs();
  const std::size_t diseases = data.bundle.diseases();
  std::uniform_int_distribution<std::size_t> pick(0, drugs * diseases - 1);
  std::set<Pair> positives;
  while (positives.size() < data.gold.positives.size()) {
    const std::size_t cell = pick(rng);
    positives.emplace(cell / diseases, cell % diseases);
  }
  return SyntheticData{data.bundle, make_gold({positives.begin(), positives.end()}, data.bundle)};
}

}  // namespace plexflow::predict
