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

#ifndef PLEXFLOW_WORKFLOW_MODEL_HPP_
#define PLEXFLOW_WORKFLOW_MODEL_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "plexflow/rdf/graph.hpp"
#include "plexflow/util/error.hpp"

namespace plexflow::workflow {

using rdf::Term;

enum class StepKind { kManual, kScript };

// Head of one workflow version (a resource typed both dul:Workflow and
// p-plan:Plan).
struct WorkflowDef {
  Term iri = Term::iri("urn:unset");
  std::string version;
  std::string created;   // "YYYY-MM-DD", empty if absent
  std::string modified;  // "YYYY-MM-DD", empty if absent
  std::optional<Term> creator;
  std::optional<Term> attributed_to;
  std::optional<Term> first_step;
  std::string label;
  std::string description;
  std::optional<Term> language;
  std::optional<Term> license;
  std::optional<Term> revision_of;

  friend bool operator==(const WorkflowDef&, const WorkflowDef&) = default;
};

// A p-plan:Plan describing how a step is carried out. Multi-valued fields
// are kept as read so that validate() can report cardinality problems.
struct Instruction {
  Term iri = Term::iri("urn:unset");
  std::string label;
  std::string description;
  std::vector<Term> languages;  // IRI or language-tag literal; exactly one
  std::string version;
  std::optional<Term> described_by;  // higher-level instruction
  std::set<Term> qualified_usages;
  std::optional<Term> revision_of;
  std::set<Term> extra_types;  // types besides p-plan:Plan, e.g. reprod:Cell

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

struct StepDef {
  Term iri = Term::iri("urn:unset");
  Term of_plan = Term::iri("urn:unset");
  std::set<StepKind> kinds;        // exactly one
  std::vector<Term> described_by;  // exactly one
  std::set<Term> precedes;
  std::set<Term> input_vars;
  std::set<Term> output_vars;
  std::optional<Term> operation_class;  // EDAM operation
  std::string label;

  friend bool operator==(const StepDef&, const StepDef&) = default;
};

struct VariableDef {
  Term iri = Term::iri("urn:unset");
  std::string label;

  friend bool operator==(const VariableDef&, const VariableDef&) = default;
};

struct UsageBinding {
  Term iri = Term::iri("urn:unset");
  std::set<Term> entities;
  std::string label;

  friend bool operator==(const UsageBinding&, const UsageBinding&) = default;
};

struct Distribution {
  Term iri = Term::iri("urn:unset");
  std::string label;
  std::vector<Term> download_urls;  // exactly one; literal or IRI
  std::optional<Term> media_type;
  std::optional<Term> revision_of;

  friend bool operator==(const Distribution&, const Distribution&) = default;
};

struct DatasetRecord {
  Term iri = Term::iri("urn:unset");
  std::string label;
  std::string description;
  std::optional<Term> license;
  std::set<Term> distributions;

  friend bool operator==(const DatasetRecord&, const DatasetRecord&) = default;
};

struct AgentAssociation {
  Term iri = Term::iri("urn:unset");
  std::optional<Term> agent;
  std::optional<Term> role;
  std::set<Term> plans;

  friend bool operator==(const AgentAssociation&, const AgentAssociation&) = default;
};

// sh:NodeShape carrying a SPARQL constraint for the usage it targets.
struct QueryShape {
  Term iri = Term::iri("urn:unset");
  Term constraint = Term::iri("urn:unset");
  std::string sparql;
  std::optional<Term> target_usage;

  friend bool operator==(const QueryShape&, const QueryShape&) = default;
};

/// A workflow version together with everything reachable from it: steps of
/// the workflow and of its sub-plans, their instructions (and higher-level
/// descriptions), variables, usages, distributions, datasets, agent
/// associations and query shapes.
///
/// A sub-plan is an instruction that describes a step of the workflow and
/// has steps of its own.
struct WorkflowModel {
  WorkflowDef workflow;
  std::map<Term, StepDef> steps;
  std::map<Term, Instruction> instructions;
  std::map<Term, VariableDef> variables;
  std::map<Term, UsageBinding> usages;
  std::map<Term, Distribution> distributions;
  std::map<Term, DatasetRecord> datasets;
  std::map<Term, AgentAssociation> associations;
  std::map<Term, QueryShape> shapes;

  // Steps with p-plan:isStepOfPlan equal to the workflow itself.
  std::vector<const StepDef*> main_steps() const;
  // Instructions that describe at least one step of the model.
  std::set<Term> used_instructions() const;
  // Distributions reachable from used instructions through their usages.
  std::set<Term> used_distributions() const;

  friend bool operator==(const WorkflowModel&, const WorkflowModel&) = default;
};

struct Violation {
  std::string code;  // E_...
  Term subject;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

class WorkflowError : public Error {
 public:
  WorkflowError(const std::string& message, std::vector<Violation> violations = {})
      : Error(message), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Every resource typed both dul:Workflow and p-plan:Plan, sorted.
std::vector<Term> find_workflows(const rdf::Graph& g);

/// Builds the typed view without judging it. Throws WorkflowError if `wf` is
/// not typed both dul:Workflow and p-plan:Plan.
WorkflowModel read_workflow(const rdf::Graph& g, const Term& wf);

/// read_workflow, then throws WorkflowError carrying the violations if the
/// structure is broken: missing first step, a step without exactly one
/// instruction or kind, or references to steps/instructions that are not in
/// the model.
WorkflowModel load_workflow(const rdf::Graph& g, const Term& wf);

/// All invariant violations, sorted by (code, subject). When `source` is
/// given, the workflow's prov:wasRevisionOf target must exist in it.
std::vector<Violation> validate(const WorkflowModel& model,
                                const rdf::Graph* source = nullptr);

/// Topological order of the steps reachable from the first step along
/// dul:precedes; ready steps are taken in IRI order. Throws WorkflowError on
/// a cycle or a missing first step.
std::vector<Term> step_order(const WorkflowModel& model);

// Triples for every part of the model, in the shapes read_workflow reads.
rdf::Graph emit_triples(const WorkflowModel& model);

}  // namespace plexflow::workflow

#endif  // PLEXFLOW_WORKFLOW_MODEL_HPP_
