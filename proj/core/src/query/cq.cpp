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

#include "plexflow/query/cq.hpp"

#include <algorithm>
#include <cstddef>

#include "plexflow/query/evaluator.hpp"
#include "plexflow/query/parser.hpp"
#include "plexflow/vocab/catalog.hpp"
#include "plexflow/workflow/model.hpp"

namespace plexflow::query {
namespace detail {

struct EmbeddedQuery {
  std::string_view name;
  std::string_view text;
};

extern const EmbeddedQuery kEmbeddedQueries[];
extern const std::size_t kEmbeddedQueryCount;

}  // namespace detail

namespace {

const std::vector<std::string> kWorkflow = {"workflow"};
const std::vector<std::string> kFromTo = {"from", "to"};

// Reorders CQ2.1 rows by the workflow's step order; unknown steps go last.
void order_by_precedes(ResultTable& table, const rdf::Graph& g, const rdf::Term& wf) {
  const std::vector<rdf::Term> order = workflow::step_order(workflow::load_workflow(g, wf));
  auto rank = [&](std::size_t row) {
    const auto step = table.get(row, "step");
    auto it = step ? std::find(order.begin(), order.end(), *step) : order.end();
    return static_cast<std::size_t>(it - order.begin());
  };
  std::vector<std::size_t> idx(table.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return rank(a) < rank(b); });
  table.permute(idx);
}

}  // namespace

const std::vector<CqEntry>& cq_catalogue() {
  static const std::vector<CqEntry> catalogue = {
      {"CQ1.1", "Which steps are meant to be executed manually and which computationally?",
       kWorkflow, {{"", "cq1_1"}}},
      {"CQ1.2", "For the manual steps, who are the agents responsible to execute them?",
       kWorkflow, {{"", "cq1_2"}}},
      {"CQ1.3", "Which datasets were manually handled and what are their formats?", kWorkflow,
       {{"", "cq1_3"}}},
      {"CQ1.4", "What are the types of manual steps involved, and their inputs and outputs?",
       kWorkflow, {{"input", "cq1_4_input"}, {"output", "cq1_4_output"}}},
      {"CQ2.1", "What are the main steps of a general workflow?", kWorkflow, {{"", "cq2_1"}}},
      {"CQ2.2", "What are the steps of a specific workflow?", kWorkflow,
       {{"main", "cq2_2_main"}, {"subplan", "cq2_2_subplan"}}},
      {"CQ2.3", "What higher-level description does a certain workflow step instantiate?",
       kWorkflow, {{"", "cq2_3"}}},
      {"CQ3.1", "What are the existing versions of a workflow and what are their provenance?",
       {}, {{"", "cq3_1"}}},
      {"CQ3.2", "Which instructions were removed/changed/added from one version to another?",
       kFromTo,
       {{"removed", "cq3_2_removed"}, {"changed", "cq3_2_changed"}, {"added", "cq3_2_added"}}},
      {"CQ3.3", "Which steps were automatized from one version to another?", kFromTo,
       {{"", "cq3_3"}}},
      {"CQ3.4", "Which datasets were removed, changed, or added from one version to the next?",
       kFromTo,
       {{"removed", "cq3_4_removed"}, {"changed", "cq3_4_changed"}, {"added", "cq3_4_added"}}},
      {"CQ3.5", "Which workflow version was used in each execution and what was generated?", {},
       {{"", "cq3_5"}}},
  };
  return catalogue;
}

const CqEntry& find_cq(std::string_view id) {
  for (const CqEntry& e : cq_catalogue()) {
    if (e.id == id) return e;
  }
  throw QueryError("unknown competency question: " + std::string(id));
}

std::string_view embedded_query(std::string_view stem) {
  for (std::size_t i = 0; i < detail::kEmbeddedQueryCount; ++i) {
    if (detail::kEmbeddedQueries[i].name == stem) return detail::kEmbeddedQueries[i].text;
  }
  throw QueryError("no embedded query named " + std::string(stem));
}

std::vector<std::string> embedded_query_names() {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < detail::kEmbeddedQueryCount; ++i) {
    out.emplace_back(detail::kEmbeddedQueries[i].name);
  }
  return out;
}

ResultTable run_cq(std::string_view id, const rdf::Graph& g,
                   const std::map<std::string, rdf::Term>& params) {
  const CqEntry& entry = find_cq(id);
  std::map<std::string, rdf::Term> bound;
  for (const std::string& p : entry.parameters) {
    auto it = params.find(p);
    if (it == params.end()) {
      throw QueryError(entry.id + " needs parameter '" + p + "'");
    }
    bound.insert(*it);
  }

  std::vector<ResultTable> tables;
  for (const CqPart& part : entry.parts) {
    Query q = parse_query(embedded_query(part.query), vocab::prefix_map());
    tables.push_back(evaluate(bind_parameters(std::move(q), bound), g));
  }

  ResultTable out;
  if (entry.parts.size() == 1) {
    out = std::move(tables.front());
  } else {
    std::vector<std::string> header = {"part"};
    for (const ResultTable& t : tables) {
      for (const std::string& v : t.variables()) {
        if (std::find(header.begin(), header.end(), v) == header.end()) header.push_back(v);
      }
    }
    out = ResultTable(header);
    for (std::size_t p = 0; p < tables.size(); ++p) {
      const ResultTable& t = tables[p];
      for (std::size_t r = 0; r < t.size(); ++r) {
        ResultTable::Row row(header.size());
        row[0] = rdf::Term::literal(entry.parts[p].name);
        for (std::size_t c = 1; c < header.size(); ++c) row[c] = t.get(r, header[c]);
        out.add_row(std::move(row));
      }
    }
  }
  if (entry.id == "CQ2.1") order_by_precedes(out, g, bound.at("workflow"));
  return out;
}

std::map<std::string, std::size_t> part_counts(const CqEntry& entry, const ResultTable& table) {
  std::map<std::string, std::size_t> counts;
  for (const CqPart& part : entry.parts) counts[part.name] = 0;
  if (entry.parts.size() == 1) {
    counts[""] = table.size();
    return counts;
  }
  for (std::size_t r = 0; r < table.size(); ++r) {
    const auto part = table.get(r, "part");
    ++counts[part ? part->value() : ""];
  }
  return counts;
}

}  // namespace plexflow::query
