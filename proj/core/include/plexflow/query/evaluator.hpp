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

#ifndef PLEXFLOW_QUERY_EVALUATOR_HPP_
#define PLEXFLOW_QUERY_EVALUATOR_HPP_

#include <map>
#include <string>

#include "plexflow/query/ast.hpp"
#include "plexflow/query/result_table.hpp"
#include "plexflow/rdf/graph.hpp"
#include "plexflow/util/error.hpp"

namespace plexflow::query {

class QueryError : public Error {
 public:
  using Error::Error;
};

/// Evaluates `query` over `g` with bag semantics.
///
/// Each basic graph pattern is joined left-deep, most-bound pattern first
/// (ties keep textual order). OPTIONAL and MINUS groups are evaluated on
/// their own and then left-joined / subtracted; a FILTER applies to the
/// whole group it appears in. FILTER errors (unbound variables, type
/// mismatches) count as false. Rows come back in ORDER BY order with the
/// canonical row order as tie-break, or canonically sorted without ORDER BY.
ResultTable evaluate(const Query& query, const rdf::Graph& g);

/// Replaces every occurrence of the named variables by constants. Throws
/// QueryError if a bound variable is projected or names a VALUES column.
Query bind_parameters(Query query, const std::map<std::string, rdf::Term>& params);

}  // namespace plexflow::query

#endif  // PLEXFLOW_QUERY_EVALUATOR_HPP_
