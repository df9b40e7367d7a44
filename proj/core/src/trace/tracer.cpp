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

#include "plexflow/trace/tracer.hpp"

#include <utility>

#include "plexflow/vocab/terms.hpp"

namespace plexflow::trace {
namespace {

namespace v = plexflow::vocab;

Term iri(std::string_view s) { return Term::iri(s); }

std::string local_name(const Term& t) {
  const std::string& s = t.value();
  std::size_t cut = s.find_last_of("/#");
  return cut == std::string::npos ? s : s.substr(cut + 1);
}

std::string strip_prefix(std::string s, std::string_view prefix) {
  if (s.rfind(prefix, 0) == 0) s.erase(0, prefix.size());
  return s;
}

Term date_time(Timestamp t) { return Term::typed_literal(t.iso(), v::xsd::kDateTime); }

Timestamp read_time(const Term& t) {
  if (!t.is_literal()) throw TraceError("timestamp " + t.ntriples() + " is not a literal");
  return Timestamp::parse(t.value());
}

}  // namespace

std::string measure_name(const Term& measure) {
  std::string name = strip_prefix(local_name(measure), "EvaluationMeasure_");
  return name == "PredictiveAccuracy" ? "Accuracy" : name;
}

Tracer::Tracer(const rdf::Graph& workflows, std::string base) : base_(std::move(base)) {
  for (const Term& s : workflows.subjects_of(iri(v::rdf::kType), iri(v::pplan::kStep))) {
    steps_.insert(s);
  }
}

Term Tracer::unique(std::string stem) {
  Term candidate = Term::iri(base_ + stem);
  for (int n = 2; taken_.count(candidate) != 0; ++n) {
    candidate = Term::iri(base_ + stem + "_" + std::to_string(n));
  }
  taken_.insert(candidate);
  return candidate;
}

ActivityRecord& Tracer::activity(const Term& iri) {
  auto it = trace_.activities.find(iri);
  if (it == trace_.activities.end()) {
    throw TraceError("unknown activity " + iri.ntriples());
  }
  return it->second;
}

Term Tracer::begin_activity(const Term& step, const Term& agent, const Term& role,
                            Timestamp at) {
  if (steps_.count(step) == 0) {
    throw TraceError("unknown step " + step.ntriples());
  }
  ActivityRecord a;
  a.iri = unique("Activity_" + strip_prefix(local_name(step), "Step_") + "_Execution_" +
                 std::to_string(at.epoch_seconds()));
  a.step = step;
  a.start = at;
  Term id = a.iri;
  trace_.activities.emplace(id, std::move(a));
  associate(id, agent, role);
  return id;
}

void Tracer::associate(const Term& activity_iri, const Term& agent, const Term& role) {
  ActivityRecord& a = activity(activity_iri);
  Term assoc = unique("Association_" + strip_prefix(local_name(a.iri), "Activity_"));
  a.associations.insert({assoc, agent, role});
}

void Tracer::end_activity(const Term& activity_iri, Timestamp at) {
  ActivityRecord& a = activity(activity_iri);
  if (a.start && at < *a.start) {
    throw TraceError("activity " + a.iri.ntriples() + " cannot end before it starts");
  }
  a.end = at;
}

Term Tracer::generation_for(const ActivityRecord& a, Timestamp at) {
  auto key = std::make_pair(a.iri, at);
  auto it = generations_.find(key);
  if (it != generations_.end()) return it->second;
  // The activity IRI ends in "Execution_<epoch>[_n]"; generations reuse that.
  std::string local = local_name(a.iri);
  std::size_t cut = local.rfind("Execution_");
  Term g = unique("Generation_" + (cut == std::string::npos ? local : local.substr(cut)));
  generations_.emplace(key, g);
  return g;
}

Term Tracer::add_artifact(ActivityRecord& a, ArtifactRecord artifact, Timestamp at) {
  artifact.generation = generation_for(a, at);
  artifact.at = at;
  Term id = artifact.iri;
  a.generated.insert(id);
  trace_.artifacts.emplace(id, std::move(artifact));
  return id;
}

Term Tracer::record_evaluation(const Term& activity_iri, const Term& measure,
                               const std::string& value, Timestamp at) {
  ActivityRecord& a = activity(activity_iri);
  if (!measure.is_iri()) throw TraceError("evaluation measure must be an IRI");
  std::string local = local_name(a.iri);
  std::size_t cut = local.rfind("Execution_");
  ArtifactRecord r;
  r.iri = unique("ModelEvaluation_" + measure_name(measure) + "_" +
                 (cut == std::string::npos ? local : local.substr(cut)));
  r.kind = ArtifactKind::kModelEvaluation;
  r.value = value;
  r.measure = measure;
  return add_artifact(a, std::move(r), at);
}

Term Tracer::record_artifact(const Term& activity_iri, const std::string& name,
                             const std::string& value, Timestamp at) {
  ActivityRecord& a = activity(activity_iri);
  std::string local = local_name(a.iri);
  std::size_t cut = local.rfind("Execution_");
  ArtifactRecord r;
  r.iri = unique("WorkflowExecutionArtifact_" + name + "_" +
                 (cut == std::string::npos ? local : local.substr(cut)));
  r.value = value;
  return add_artifact(a, std::move(r), at);
}

rdf::Graph emit_trace(const Trace& trace) {
  rdf::Graph g;
  const Term type = iri(v::rdf::kType);
  for (const auto& [id, a] : trace.activities) {
    g.insert(id, type, iri(v::pplan::kActivity));
    g.insert(id, iri(v::pplan::kCorrespondsToStep), a.step);
    if (a.start) g.insert(id, iri(v::prov::kStartedAtTime), date_time(*a.start));
    if (a.end) g.insert(id, iri(v::prov::kEndedAtTime), date_time(*a.end));
    for (const Term& art : a.generated) g.insert(id, iri(v::prov::kGenerated), art);
    for (const ActivityAssociation& assoc : a.associations) {
      g.insert(id, iri(v::prov::kQualifiedAssociation), assoc.iri);
      g.insert(assoc.iri, type, iri(v::prov::kAssociation));
      g.insert(assoc.iri, iri(v::prov::kAgentProp), assoc.agent);
      g.insert(assoc.iri, iri(v::prov::kHadRole), assoc.role);
    }
  }
  for (const auto& [id, r] : trace.artifacts) {
    if (r.kind == ArtifactKind::kModelEvaluation) {
      g.insert(id, type, iri(v::mls::kModelEvaluation));
    }
    g.insert(id, type, iri(v::opmw::kWorkflowExecutionArtifact));
    g.insert(id, iri(v::dc::kDescription), Term::literal(r.value));
    if (r.measure) g.insert(id, iri(v::mls::kSpecifiedBy), *r.measure);
    g.insert(id, iri(v::prov::kQualifiedGeneration), r.generation);
    g.insert(r.generation, type, iri(v::prov::kGeneration));
    g.insert(r.generation, iri(v::prov::kAtTime), date_time(r.at));
  }
  return g;
}

namespace {

void load_activity(const rdf::Graph& g, const Term& id, Trace& out) {
  const Term type = iri(v::rdf::kType);
  ActivityRecord a;
  a.iri = id;
  auto step = g.object_of(id, iri(v::pplan::kCorrespondsToStep));
  if (!step || !g.contains(rdf::Triple(*step, type, iri(v::pplan::kStep)))) {
    throw TraceError("activity " + id.ntriples() + " does not correspond to a known step");
  }
  a.step = *step;
  if (auto t = g.object_of(id, iri(v::prov::kStartedAtTime))) a.start = read_time(*t);
  if (auto t = g.object_of(id, iri(v::prov::kEndedAtTime))) a.end = read_time(*t);
  for (const Term& assoc : g.objects_of(id, iri(v::prov::kQualifiedAssociation))) {
    auto agent = g.object_of(assoc, iri(v::prov::kAgentProp));
    auto role = g.object_of(assoc, iri(v::prov::kHadRole));
    if (!agent || !role) {
      throw TraceError("association " + assoc.ntriples() + " lacks agent or role");
    }
    a.associations.insert({assoc, *agent, *role});
  }
  for (const Term& art : g.objects_of(id, iri(v::prov::kGenerated))) {
    a.generated.insert(art);
    ArtifactRecord r;
    r.iri = art;
    r.kind = g.contains(rdf::Triple(art, type, iri(v::mls::kModelEvaluation)))
                 ? ArtifactKind::kModelEvaluation
                 : ArtifactKind::kGeneric;
    if (auto d = g.object_of(art, iri(v::dc::kDescription))) r.value = d->value();
    r.measure = g.object_of(art, iri(v::mls::kSpecifiedBy));
    if (r.kind == ArtifactKind::kModelEvaluation && !r.measure) {
      throw TraceError("evaluation " + art.ntriples() + " has no mls:specifiedBy");
    }
    auto gen = g.object_of(art, iri(v::prov::kQualifiedGeneration));
    auto at = gen ? g.object_of(*gen, iri(v::prov::kAtTime)) : std::nullopt;
    if (!at) throw TraceError("artifact " + art.ntriples() + " has no generation time");
    r.generation = *gen;
    r.at = read_time(*at);
    out.artifacts.emplace(art, std::move(r));
  }
  out.activities.emplace(id, std::move(a));
}

}  // namespace

Trace load_trace(const rdf::Graph& g) {
  Trace out;
  for (const Term& id : g.subjects_of(iri(v::rdf::kType), iri(v::pplan::kActivity))) {
    load_activity(g, id, out);
  }
  return out;
}

Trace load_trace(const rdf::Graph& g, const Term& activity) {
  if (!g.contains(rdf::Triple(activity, iri(v::rdf::kType), iri(v::pplan::kActivity)))) {
    throw TraceError(activity.ntriples() + " is not a p-plan:Activity");
  }
  Trace out;
  load_activity(g, activity, out);
  return out;
}

}  // namespace plexflow::trace
