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

#ifndef PLEXFLOW_DIFF_DIFF_HPP_
#define PLEXFLOW_DIFF_DIFF_HPP_

#include <set>
#include <string>
#include <utility>

#include "plexflow/rdf/graph.hpp"
#include "plexflow/util/error.hpp"
#include "plexflow/workflow/model.hpp"

namespace plexflow::diff {

using rdf::Term;
using TermPair = std::pair<Term, Term>;  // (old, new)

class DiffError : public Error {
 public:
  using Error::Error;
};

struct DiffReport {
  Term from = Term::iri("urn:unset");
  Term to = Term::iri("urn:unset");

  std::set<Term> removed_instructions;
  std::set<TermPair> changed_instructions;
  std::set<Term> added_instructions;
  // (manual step of `from`, script step of `to`) whose instructions are a
  // changed pair.
  std::set<TermPair> automatized_steps;

  // Keyed on distribution IRIs.
  std::set<Term> removed_datasets;
  std::set<TermPair> changed_datasets;
  std::set<Term> added_datasets;

  bool empty() const;

  // Sorted keys and sorted IRI arrays, plus a "counts" object.
  std::string to_json() const;

  friend bool operator==(const DiffReport&, const DiffReport&) = default;
};

/// Instruction part. used(W) is the set of instructions describing steps of W
/// or of its sub-plans; change is a prov:wasRevisionOf edge from an
/// instruction used in B to one used in A. Removed and added exclude the two
/// sides of changed pairs.
DiffReport diff_instructions(const workflow::WorkflowModel& a, const workflow::WorkflowModel& b);

// Revision-linked instructions used by a manual step in A and a script step in B.
std::set<TermPair> automatized_steps(const workflow::WorkflowModel& a,
                                     const workflow::WorkflowModel& b);

// Same removed/changed/added logic over the distributions reached by usages.
DiffReport diff_datasets(const workflow::WorkflowModel& a, const workflow::WorkflowModel& b);

// All three parts.
DiffReport diff(const workflow::WorkflowModel& a, const workflow::WorkflowModel& b);

// Loads both workflows from g first. Throws DiffError if either is missing.
DiffReport diff(const rdf::Graph& g, const Term& a, const Term& b);

}  // namespace plexflow::diff

#endif  // PLEXFLOW_DIFF_DIFF_HPP_
