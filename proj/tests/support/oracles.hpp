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

// Reference implementations used to check the library. Each one is written
// the slow, obvious way and shares no code with the code under test.

#ifndef PLEXFLOW_TESTS_SUPPORT_ORACLES_HPP_
#define PLEXFLOW_TESTS_SUPPORT_ORACLES_HPP_

#include <array>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "plexflow/query/result_table.hpp"
#include "plexflow/rdf/graph.hpp"

namespace plexflow::testing {

// Conjunctive query over N-Triples-formatted terms; "?x" marks a variable.
struct OracleFilter {
  std::string variable;
  std::string op;  // "=" or "!="
  std::string term;
};

struct OracleQuery {
  std::vector<std::array<std::string, 3>> patterns;
  std::optional<OracleFilter> filter;
  std::vector<std::array<std::string, 3>> minus;
  std::vector<std::string> projection;  // variable names without '?'
  bool distinct = false;
};

using OracleRow = std::vector<std::string>;  // N-Triples per column, "" unbound

// Nested-loop evaluation over a full scan of the graph for every pattern.
// Rows are returned sorted.
std::vector<OracleRow> oracle_evaluate(const OracleQuery& q,
                                       const rdf::Graph& g);

// SPARQL text for the same query.
std::string to_sparql(const OracleQuery& q);

// All (a, b) with a path of one or more edges from a to b, by repeated
// squaring until fixpoint.
std::set<std::pair<std::string, std::string>> transitive_closure(
    const std::set<std::pair<std::string, std::string>>& edges);

// ROC AUC by counting concordant (1) and tied (0.5) positive/negative pairs.
double auc_by_pair_count(const std::vector<double>& scores,
                         const std::vector<int>& labels);

// Sorted rows of an engine result, in the oracle's row format.
std::vector<OracleRow> rows_of(const query::ResultTable& t);

// Random 1-4 pattern query over terms of g, with an optional FILTER or MINUS,
// a random projection and DISTINCT. Predicates are drawn from <urn:p:0..3>.
OracleQuery random_oracle_query(std::mt19937_64& rng, const rdf::Graph& g);

}  // namespace plexflow::testing

#endif  // PLEXFLOW_TESTS_SUPPORT_ORACLES_HPP_
