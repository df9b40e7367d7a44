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

#include "plexflow/query/result_table.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace plexflow::query {
namespace {

std::vector<std::string> serialize(const ResultTable::Row& row) {
  std::vector<std::string> out;
  out.reserve(row.size());
  for (const auto& cell : row) out.push_back(cell ? cell->ntriples() : "");
  return out;
}

}  // namespace

void ResultTable::add_row(Row row) {
  if (row.size() != variables_.size()) {
    throw std::invalid_argument("row width " + std::to_string(row.size()) +
                                " does not match header width " +
                                std::to_string(variables_.size()));
  }
  rows_.push_back(std::move(row));
}

std::optional<std::size_t> ResultTable::column(std::string_view variable) const {
  auto it = std::find(variables_.begin(), variables_.end(), variable);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

std::optional<rdf::Term> ResultTable::get(std::size_t row,
                                          std::string_view variable) const {
  auto col = column(variable);
  if (!col || row >= rows_.size()) return std::nullopt;
  return rows_[row][*col];
}

std::vector<rdf::Term> ResultTable::distinct_values(std::string_view variable) const {
  std::set<rdf::Term> values;
  if (auto col = column(variable)) {
    for (const Row& r : rows_) {
      if (r[*col]) values.insert(*r[*col]);
    }
  }
  return {values.begin(), values.end()};
}

void ResultTable::sort_canonical() {
  std::vector<std::vector<std::string>> keys;
  keys.reserve(rows_.size());
  for (const Row& r : rows_) keys.push_back(serialize(r));
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  permute(order);
}

void ResultTable::permute(const std::vector<std::size_t>& order) {
  std::vector<Row> next;
  next.reserve(order.size());
  for (std::size_t i : order) next.push_back(rows_.at(i));
  rows_ = std::move(next);
}

std::string ResultTable::to_tsv() const {
  std::string out;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i != 0) out += '\t';
    out += "?" + variables_[i];
  }
  out += '\n';
  for (const Row& r : rows_) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i != 0) out += '\t';
      if (r[i]) out += r[i]->ntriples();
    }
    out += '\n';
  }
  return out;
}

std::string ResultTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const Row& r : rows_) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i]) obj[variables_[i]] = r[i]->ntriples();
    }
    rows.push_back(std::move(obj));
  }
  nlohmann::json doc = {{"count", rows_.size()}, {"rows", std::move(rows)},
                        {"vars", variables_}};
  return doc.dump(2) + "\n";
}

}  // namespace plexflow::query
