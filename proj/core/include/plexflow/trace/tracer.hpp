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

#ifndef PLEXFLOW_TRACE_TRACER_HPP_
#define PLEXFLOW_TRACE_TRACER_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "plexflow/rdf/graph.hpp"
#include "plexflow/rdf/term.hpp"
#include "plexflow/trace/timestamp.hpp"
#include "plexflow/util/error.hpp"

namespace plexflow::trace {

using rdf::Term;

class TraceError : public Error {
 public:
  using Error::Error;
};

struct ActivityAssociation {
  Term iri = Term::iri("urn:unset");
  Term agent = Term::iri("urn:unset");
  Term role = Term::iri("urn:unset");

  friend bool operator==(const ActivityAssociation&, const ActivityAssociation&) = default;
  friend auto operator<=>(const ActivityAssociation&, const ActivityAssociation&) = default;
};

// One execution of a step (p-plan:Activity).
struct ActivityRecord {
  Term iri = Term::iri("urn:unset");
  Term step = Term::iri("urn:unset");
  std::optional<Timestamp> start;
  std::optional<Timestamp> end;
  std::set<ActivityAssociation> associations;
  std::set<Term> generated;

  friend bool operator==(const ActivityRecord&, const ActivityRecord&) = default;
};

enum class ArtifactKind { kGeneric, kModelEvaluation };

// Output of an activity. Values are kept as the plain string written to
// dc:description; a model evaluation additionally names its measure.
struct ArtifactRecord {
  Term iri = Term::iri("urn:unset");
  ArtifactKind kind = ArtifactKind::kGeneric;
  std::string value;
  std::optional<Term> measure;
  Term generation = Term::iri("urn:unset");
  Timestamp at;

  friend bool operator==(const ArtifactRecord&, const ArtifactRecord&) = default;
};

struct Trace {
  std::map<Term, ActivityRecord> activities;
  std::map<Term, ArtifactRecord> artifacts;

  bool empty() const { return activities.empty() && artifacts.empty(); }
  friend bool operator==(const Trace&, const Trace&) = default;
};

// Records executions against the steps of a workflow graph. Activity IRIs are
// <base>Activity_<step name>_Execution_<epoch seconds>, where the step name is
// the step's local name without its "Step_" prefix; evaluation IRIs are
// <base>ModelEvaluation_<measure>_Execution_<epoch seconds>. A numeric suffix
// (_2, _3, ...) keeps IRIs unique.
class Tracer {
 public:
  // Steps are the resources typed p-plan:Step in `workflows`.
  explicit Tracer(const rdf::Graph& workflows, std::string base = "https://w3id.org/fair/openpredict/");

  // Throws TraceError for an unknown step.
  Term begin_activity(const Term& step, const Term& agent, const Term& role, Timestamp at);
  // Adds one more (agent, role) association to an activity.
  void associate(const Term& activity, const Term& agent, const Term& role);
  // Throws TraceError if the activity is unknown or `at` precedes its start.
  void end_activity(const Term& activity, Timestamp at);

  Term record_evaluation(const Term& activity, const Term& measure, const std::string& value,
                         Timestamp at);
  // Generic opmw:WorkflowExecutionArtifact named
  // <base>WorkflowExecutionArtifact_<name>_Execution_<epoch seconds>.
  Term record_artifact(const Term& activity, const std::string& name, const std::string& value,
                       Timestamp at);

  const Trace& trace() const { return trace_; }

 private:
  ActivityRecord& activity(const Term& iri);
  Term unique(std::string stem);
  Term generation_for(const ActivityRecord& a, Timestamp at);
  Term add_artifact(ActivityRecord& a, ArtifactRecord artifact, Timestamp at);

  std::set<Term> steps_;
  std::string base_;
  Trace trace_;
  std::set<Term> taken_;
  // Generation node per (activity, time).
  std::map<std::pair<Term, Timestamp>, Term> generations_;
};

// Measure name used in evaluation IRIs: the local name without its
// "EvaluationMeasure_" prefix, with PredictiveAccuracy shortened to Accuracy.
std::string measure_name(const Term& measure);

rdf::Graph emit_trace(const Trace& trace);

// Every p-plan:Activity in g with its generated artifacts. Throws TraceError
// when an activity's step is not typed p-plan:Step in g, when an artifact
// lacks its generation time, or when an evaluation lacks its measure.
Trace load_trace(const rdf::Graph& g);
// Just one activity and its artifacts.
Trace load_trace(const rdf::Graph& g, const Term& activity);

}  // namespace plexflow::trace

#endif  // PLEXFLOW_TRACE_TRACER_HPP_
