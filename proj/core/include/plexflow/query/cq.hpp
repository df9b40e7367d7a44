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

#ifndef PLEXFLOW_QUERY_CQ_HPP_
#define PLEXFLOW_QUERY_CQ_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "plexflow/query/result_table.hpp"
#include "plexflow/rdf/graph.hpp"

namespace plexflow::query {

struct CqPart {
  std::string name;   // value of the "part" column; empty for single-part CQs
  std::string query;  // stem of the embedded .rq asset
};

struct CqEntry {
  std::string id;  // "CQ1.1"
  std::string question;
  std::vector<std::string> parameters;  // "workflow", or "from" and "to"
  std::vector<CqPart> parts;
};

// The twelve canned competency questions, in id order.
const std::vector<CqEntry>& cq_catalogue();

// Throws QueryError for an unknown id.
const CqEntry& find_cq(std::string_view id);

// Text of an embedded query asset by file stem ("cq1_1"). Throws QueryError
// if there is none.
std::string_view embedded_query(std::string_view stem);
std::vector<std::string> embedded_query_names();

/// Runs a canned question. `params` maps parameter names (without '$') to
/// workflow IRIs; missing ones raise QueryError. Multi-part questions get a
/// leading "part" column holding the part name as a plain literal, with the
/// columns of all parts merged in order of first appearance. CQ2.1 rows are
/// ordered along dul:precedes from the first step.
ResultTable run_cq(std::string_view id, const rdf::Graph& g,
                   const std::map<std::string, rdf::Term>& params);

// Row count per part name of `entry`, zero for empty parts (the empty name
// for single-part questions).
std::map<std::string, std::size_t> part_counts(const CqEntry& entry, const ResultTable& table);

}  // namespace plexflow::query

#endif  // PLEXFLOW_QUERY_CQ_HPP_
