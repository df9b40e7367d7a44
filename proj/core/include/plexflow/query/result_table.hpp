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

#ifndef PLEXFLOW_QUERY_RESULT_TABLE_HPP_
#define PLEXFLOW_QUERY_RESULT_TABLE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plexflow/rdf/term.hpp"

namespace plexflow::query {

// Bag of solutions: a header of variable names and rows of optional terms.
class ResultTable {
 public:
  using Row = std::vector<std::optional<rdf::Term>>;

  ResultTable() = default;
  explicit ResultTable(std::vector<std::string> variables)
      : variables_(std::move(variables)) {}

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

  // Throws std::invalid_argument if the width does not match the header.
  void add_row(Row row);

  std::optional<std::size_t> column(std::string_view variable) const;
  // Value at (row, variable); nullopt when unbound or the column is unknown.
  std::optional<rdf::Term> get(std::size_t row, std::string_view variable) const;
  // Sorted distinct bound values of one column.
  std::vector<rdf::Term> distinct_values(std::string_view variable) const;

  // Sorts rows by their serialized form (unbound sorts first).
  void sort_canonical();
  // Reorders rows; `order[i]` is the old index of new row i.
  void permute(const std::vector<std::size_t>& order);

  // Header "?a\t?b", then one line per row with N-Triples terms; unbound
  // cells are empty.
  std::string to_tsv() const;
  // {"count":N,"rows":[{"a":"<iri>",...}],"vars":["a",...]}; unbound cells
  // are omitted from the row objects. Keys are sorted.
  std::string to_json() const;

  friend bool operator==(const ResultTable&, const ResultTable&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Row> rows_;
};

}  // namespace plexflow::query

#endif  // PLEXFLOW_QUERY_RESULT_TABLE_HPP_
