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

#include "plexflow/workflow/model.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "plexflow/query/parser.hpp"
#include "plexflow/util/topo_sort.hpp"
#include "plexflow/vocab/catalog.hpp"
#include "plexflow/vocab/terms.hpp"

namespace plexflow::workflow {
namespace {

namespace v = plexflow::vocab;
using rdf::Graph;

const Term& iri_term(std::string_view iri) {
  // Terms for the handful of vocabulary IRIs used here, built once.
  static std::map<std::string_view, Term>* cache = new std::map<std::string_view, Term>;
  auto it = cache->find(iri);
  if (it == cache->end()) it = cache->emplace(iri, Term::iri(iri)).first;
  return it->second;
}

class Reader {
 public:
  explicit Reader(const Graph& g) : g_(g) {}

  std::vector<Term> objects(const Term& s, std::string_view p) const {
    return g_.objects_of(s, iri_term(p));
  }

  std::optional<Term> object(const Term& s, std::string_view p) const {
    return g_.object_of(s, iri_term(p));
  }

  std::string text(const Term& s, std::string_view p) const {
    auto o = object(s, p);
    return o && o->is_literal() ? o->value() : std::string();
  }

  std::set<Term> object_set(const Term& s, std::string_view p) const {
    auto v = objects(s, p);
    return {v.begin(), v.end()};
  }

  bool has_type(const Term& s, std::string_view type) const {
    return g_.contains(rdf::Triple(s, iri_term(v::rdf::kType), iri_term(type)));
  }

  std::vector<Term> subjects(std::string_view p, const Term& o) const {
    return g_.subjects_of(iri_term(p), o);
  }

 private:
  const Graph& g_;
};

bool is_edam(const Term& t, std::string_view kind) {
  return t.is_iri() && t.value().rfind(std::string(v::edam::kBase) + std::string(kind), 0) == 0;
}

WorkflowDef read_head(const Reader& r, const Term& wf) {
  WorkflowDef d;
  d.iri = wf;
  d.version = r.text(wf, v::dc::kHasVersion);
  d.created = r.text(wf, v::dc::kCreated);
  d.modified = r.text(wf, v::dc::kModified);
  d.creator = r.object(wf, v::dc::kCreator);
  d.attributed_to = r.object(wf, v::prov::kWasAttributedTo);
  d.first_step = r.object(wf, v::pwo::kHasFirstStep);
  d.label = r.text(wf, v::rdfs::kLabel);
  d.description = r.text(wf, v::dc::kDescription);
  d.language = r.object(wf, v::dc::kLanguage);
  d.license = r.object(wf, v::dc::kLicense);
  d.revision_of = r.object(wf, v::prov::kWasRevisionOf);
  return d;
}

StepDef read_step(const Reader& r, const Term& s, const Term& plan) {
  StepDef d;
  d.iri = s;
  d.of_plan = plan;
  if (r.has_type(s, v::bpmn::kManualTask)) d.kinds.insert(StepKind::kManual);
  if (r.has_type(s, v::bpmn::kScriptTask)) d.kinds.insert(StepKind::kScript);
  d.described_by = r.objects(s, v::dul::kIsDescribedBy);
  d.precedes = r.object_set(s, v::dul::kPrecedes);
  d.input_vars = r.object_set(s, v::pplan::kHasInputVar);
  d.output_vars = r.object_set(s, v::pplan::kHasOutputVar);
  for (const Term& t : r.objects(s, v::rdf::kType)) {
    if (is_edam(t, "operation_")) {
      d.operation_class = t;
      break;
    }
  }
  d.label = r.text(s, v::rdfs::kLabel);
  return d;
}

Instruction read_instruction(const Reader& r, const Term& i) {
  Instruction d;
  d.iri = i;
  d.label = r.text(i, v::rdfs::kLabel);
  d.description = r.text(i, v::dc::kDescription);
  d.languages = r.objects(i, v::dc::kLanguage);
  d.version = r.text(i, v::dc::kHasVersion);
  d.described_by = r.object(i, v::dul::kIsDescribedBy);
  d.qualified_usages = r.object_set(i, v::prov::kQualifiedUsage);
  d.revision_of = r.object(i, v::prov::kWasRevisionOf);
  for (const Term& t : r.objects(i, v::rdf::kType)) {
    if (t.value() != v::pplan::kPlan) d.extra_types.insert(t);
  }
  return d;
}

}  // namespace

std::vector<const StepDef*> WorkflowModel::main_steps() const {
  std::vector<const StepDef*> out;
  for (const auto& [iri, step] : steps) {
    if (step.of_plan == workflow.iri) out.push_back(&step);
  }
  return out;
}

std::set<Term> WorkflowModel::used_instructions() const {
  std::set<Term> out;
  for (const auto& [iri, step] : steps) {
    out.insert(step.described_by.begin(), step.described_by.end());
  }
  return out;
}

std::set<Term> WorkflowModel::used_distributions() const {
  std::set<Term> out;
  for (const Term& i : used_instructions()) {
    auto it = instructions.find(i);
    if (it == instructions.end()) continue;
    for (const Term& u : it->second.qualified_usages) {
      auto usage = usages.find(u);
      if (usage == usages.end()) continue;
      for (const Term& e : usage->second.entities) {
        if (distributions.count(e) != 0) out.insert(e);
      }
    }
  }
  return out;
}

std::vector<Term> find_workflows(const Graph& g) {
  Reader r(g);
  std::vector<Term> out;
  for (const Term& t : r.subjects(v::rdf::kType, iri_term(v::dul::kWorkflow))) {
    if (r.has_type(t, v::pplan::kPlan)) out.push_back(t);
  }
  return out;
}

WorkflowModel read_workflow(const Graph& g, const Term& wf) {
  Reader r(g);
  if (!r.has_type(wf, v::dul::kWorkflow) || !r.has_type(wf, v::pplan::kPlan)) {
    throw WorkflowError(wf.ntriples() + " is not typed dul:Workflow and p-plan:Plan",
                        {{"E_NOT_A_WORKFLOW", wf, "not a workflow"}});
  }
  WorkflowModel m;
  m.workflow = read_head(r, wf);

  // Steps of the workflow and, transitively, of the sub-plans its steps use.
  std::set<Term> seen_plans = {wf};
  std::deque<Term> plans = {wf};
  while (!plans.empty()) {
    Term plan = plans.front();
    plans.pop_front();
    for (const Term& s : r.subjects(v::pplan::kIsStepOfPlan, plan)) {
      if (m.steps.count(s) != 0) continue;
      StepDef step = read_step(r, s, plan);
      for (const Term& i : step.described_by) {
        if (!r.subjects(v::pplan::kIsStepOfPlan, i).empty() &&
            seen_plans.insert(i).second) {
          plans.push_back(i);
        }
      }
      m.steps.emplace(s, std::move(step));
    }
  }

  std::deque<Term> pending;
  for (const auto& [iri, step] : m.steps) {
    pending.insert(pending.end(), step.described_by.begin(), step.described_by.end());
  }
  while (!pending.empty()) {
    Term i = pending.front();
    pending.pop_front();
    if (m.instructions.count(i) != 0 || !r.has_type(i, v::pplan::kPlan)) continue;
    Instruction ins = read_instruction(r, i);
    if (ins.described_by) pending.push_back(*ins.described_by);
    m.instructions.emplace(i, std::move(ins));
  }

  auto add_variable = [&](const Term& var) {
    if (m.variables.count(var) != 0 || !r.has_type(var, v::pplan::kVariable)) return;
    m.variables.emplace(var, VariableDef{var, r.text(var, v::rdfs::kLabel)});
  };
  for (const auto& [iri, step] : m.steps) {
    for (const Term& var : step.input_vars) add_variable(var);
    for (const Term& var : step.output_vars) add_variable(var);
  }

  for (const auto& [iri, ins] : m.instructions) {
    for (const Term& u : ins.qualified_usages) {
      if (m.usages.count(u) != 0 || !r.has_type(u, v::prov::kUsage)) continue;
      UsageBinding usage{u, r.object_set(u, v::prov::kEntity), r.text(u, v::rdfs::kLabel)};
      for (const Term& e : usage.entities) {
        add_variable(e);
        if (r.has_type(e, v::dcat::kDistribution) && m.distributions.count(e) == 0) {
          Distribution d;
          d.iri = e;
          d.label = r.text(e, v::rdfs::kLabel);
          d.download_urls = r.objects(e, v::dcat::kDownloadURL);
          d.media_type = r.object(e, v::dcat::kMediaType);
          d.revision_of = r.object(e, v::prov::kWasRevisionOf);
          m.distributions.emplace(e, std::move(d));
        }
      }
      for (const Term& shape : r.subjects(v::sh::kTargetClass, u)) {
        if (!r.has_type(shape, v::sh::kNodeShape)) continue;
        QueryShape q;
        q.iri = shape;
        q.target_usage = u;
        if (auto c = r.object(shape, v::sh::kSparql)) {
          q.constraint = *c;
          q.sparql = r.text(*c, v::sh::kSelect);
        }
        m.shapes.emplace(shape, std::move(q));
      }
      m.usages.emplace(u, std::move(usage));
    }
  }

  for (const auto& [dist, d] : m.distributions) {
    for (const Term& ds : r.subjects(v::dcat::kDistributionProp, dist)) {
      if (m.datasets.count(ds) != 0 || !r.has_type(ds, v::dcat::kDataset)) continue;
      DatasetRecord rec;
      rec.iri = ds;
      rec.label = r.text(ds, v::rdfs::kLabel);
      rec.description = r.text(ds, v::dc::kDescription);
      rec.license = r.object(ds, v::dc::kLicense);
      rec.distributions = r.object_set(ds, v::dcat::kDistributionProp);
      m.datasets.emplace(ds, std::move(rec));
    }
  }

  std::vector<Term> planned = {wf};
  for (const auto& [iri, ins] : m.instructions) planned.push_back(iri);
  for (const Term& p : planned) {
    for (const Term& a : r.subjects(v::prov::kHadPlan, p)) {
      if (m.associations.count(a) != 0) continue;
      AgentAssociation assoc;
      assoc.iri = a;
      assoc.agent = r.object(a, v::prov::kAgentProp);
      assoc.role = r.object(a, v::prov::kHadRole);
      assoc.plans = r.object_set(a, v::prov::kHadPlan);
      m.associations.emplace(a, std::move(assoc));
    }
  }
  return m;
}

std::vector<Violation> validate(const WorkflowModel& m, const Graph* source) {
  std::vector<Violation> out;
  auto report = [&](std::string code, const Term& subject, std::string message) {
    out.push_back({std::move(code), subject, std::move(message)});
  };
  const WorkflowDef& w = m.workflow;
  const Term& wf = w.iri;

  if (w.version.empty()) report("E_MISSING_VERSION", wf, "workflow has no dc:hasVersion");
  if (!w.first_step) {
    report("E_MISSING_FIRST_STEP", wf, "workflow has no pwo:hasFirstStep");
  } else {
    auto it = m.steps.find(*w.first_step);
    if (it == m.steps.end() || it->second.of_plan != wf) {
      report("E_FIRST_STEP_NOT_IN_WORKFLOW", *w.first_step,
             "first step is not a step of the workflow");
    }
  }
  if (w.revision_of && source != nullptr) {
    Reader r(*source);
    if (!r.has_type(*w.revision_of, v::dul::kWorkflow)) {
      report("E_REVISION_TARGET_MISSING", *w.revision_of,
             "prov:wasRevisionOf target is not a workflow in the graph");
    }
  }

  std::set<Term> referenced_vars;
  for (const auto& [iri, s] : m.steps) {
    if (s.described_by.empty()) {
      report("E_STEP_NO_INSTR", iri, "step has no dul:isDescribedBy");
    } else if (s.described_by.size() > 1) {
      report("E_STEP_MULTI_INSTR", iri,
             "step has " + std::to_string(s.described_by.size()) + " instructions");
    }
    for (const Term& i : s.described_by) {
      if (m.instructions.count(i) == 0) {
        report("E_DANGLING_REF", iri, "instruction " + i.ntriples() + " is not a p-plan:Plan");
      }
    }
    if (s.kinds.empty()) {
      report("E_STEP_KIND_MISSING", iri, "step is neither bpmn:ManualTask nor bpmn:ScriptTask");
    } else if (s.kinds.size() > 1) {
      report("E_STEP_KIND_CONFLICT", iri, "step is both bpmn:ManualTask and bpmn:ScriptTask");
    }
    for (const Term& next : s.precedes) {
      auto it = m.steps.find(next);
      if (it == m.steps.end()) {
        report("E_DANGLING_REF", iri, "preceded step " + next.ntriples() + " is unknown");
      } else if (it->second.of_plan != s.of_plan) {
        report("E_PRECEDES_CROSS_PLAN", iri,
               "dul:precedes " + next.ntriples() + " crosses plans");
      }
    }
    for (const std::set<Term>* vars : {&s.input_vars, &s.output_vars}) {
      for (const Term& var : *vars) {
        referenced_vars.insert(var);
        if (m.variables.count(var) == 0) {
          report("E_DANGLING_REF", iri, "variable " + var.ntriples() + " is unknown");
        }
      }
    }
  }

  // Steps that lie on a precedes cycle, grouped by strongly connected set.
  std::map<Term, std::set<Term>> reach;
  for (const auto& [iri, s] : m.steps) {
    std::set<Term>& seen = reach[iri];
    std::deque<Term> queue(s.precedes.begin(), s.precedes.end());
    while (!queue.empty()) {
      Term cur = queue.front();
      queue.pop_front();
      auto it = m.steps.find(cur);
      if (it == m.steps.end() || !seen.insert(cur).second) continue;
      queue.insert(queue.end(), it->second.precedes.begin(), it->second.precedes.end());
    }
  }
  std::set<Term> reported;
  for (const auto& [iri, seen] : reach) {
    if (seen.count(iri) == 0 || reported.count(iri) != 0) continue;
    std::string members;
    for (const Term& other : seen) {
      if (reach[other].count(iri) != 0) {
        reported.insert(other);
        members += " " + other.ntriples();
      }
    }
    report("E_PRECEDES_CYCLE", iri, "dul:precedes cycle through" + members);
  }

  for (const auto& [iri, ins] : m.instructions) {
    if (ins.languages.size() != 1) {
      report("E_INSTR_LANGUAGE", iri,
             "instruction has " + std::to_string(ins.languages.size()) + " languages");
    }
    if (ins.described_by && *ins.described_by == iri) {
      report("E_INSTR_SELF_DESCRIBED", iri, "instruction describes itself");
    } else if (ins.described_by) {
      std::set<Term> chain = {iri};
      std::optional<Term> cur = ins.described_by;
      while (cur) {
        if (!chain.insert(*cur).second) {
          if (*cur == iri) report("E_INSTR_DESCRIBED_CYCLE", iri, "dul:isDescribedBy cycle");
          break;
        }
        auto it = m.instructions.find(*cur);
        if (it == m.instructions.end()) {
          report("E_DANGLING_REF", iri, "description " + cur->ntriples() + " is unknown");
          break;
        }
        cur = it->second.described_by;
      }
    }
    for (const Term& u : ins.qualified_usages) {
      if (m.usages.count(u) == 0) {
        report("E_DANGLING_REF", iri, "usage " + u.ntriples() + " is unknown");
      }
    }
  }

  for (const auto& [iri, var] : m.variables) {
    if (referenced_vars.count(iri) == 0) {
      report("E_VARIABLE_UNREFERENCED", iri, "variable is not an input or output of any step");
    }
  }
  for (const auto& [iri, u] : m.usages) {
    if (u.entities.size() < 2) {
      report("E_USAGE_ARITY", iri, "usage binds fewer than 2 entities");
    }
  }
  for (const auto& [iri, d] : m.distributions) {
    if (d.download_urls.size() != 1) {
      report("E_DISTRIBUTION_URL", iri,
             "distribution has " + std::to_string(d.download_urls.size()) + " download URLs");
    }
    if (!d.media_type || !is_edam(*d.media_type, "format_")) {
      report("E_MEDIA_TYPE_NOT_EDAM", iri, "dcat:mediaType is not an EDAM format");
    }
  }
  for (const auto& [iri, a] : m.associations) {
    if (!a.agent || !a.role || a.plans.empty()) {
      report("E_ASSOCIATION_INCOMPLETE", iri, "association needs agent, role and plan");
    }
  }
  for (const auto& [iri, q] : m.shapes) {
    try {
      query::parse_query(q.sparql, vocab::prefix_map());
    } catch (const ParseError& e) {
      report("E_QUERY_SHAPE_PARSE", iri, std::string("SPARQL constraint: ") + e.what());
    }
  }

  std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    if (a.code != b.code) return a.code < b.code;
    if (a.subject != b.subject) return a.subject < b.subject;
    return a.message < b.message;
  });
  return out;
}

WorkflowModel load_workflow(const Graph& g, const Term& wf) {
  WorkflowModel m = read_workflow(g, wf);
  static const std::set<std::string> kStructural = {
      "E_MISSING_FIRST_STEP", "E_STEP_NO_INSTR", "E_STEP_MULTI_INSTR",
      "E_STEP_KIND_CONFLICT", "E_DANGLING_REF"};
  std::vector<Violation> fatal;
  for (Violation& v : validate(m, &g)) {
    if (kStructural.count(v.code) != 0) fatal.push_back(std::move(v));
  }
  if (!fatal.empty()) {
    std::string message = "workflow " + wf.ntriples() + " is malformed: " +
                          fatal.front().code + " " + fatal.front().subject.ntriples();
    throw WorkflowError(message, std::move(fatal));
  }
  return m;
}

std::vector<Term> step_order(const WorkflowModel& m) {
  if (!m.workflow.first_step || m.steps.count(*m.workflow.first_step) == 0) {
    throw WorkflowError("workflow " + m.workflow.iri.ntriples() + " has no usable first step");
  }
  std::set<Term> reachable;
  std::multimap<Term, Term> edges;
  std::deque<Term> queue = {*m.workflow.first_step};
  while (!queue.empty()) {
    Term cur = queue.front();
    queue.pop_front();
    if (!reachable.insert(cur).second) continue;
    for (const Term& next : m.steps.at(cur).precedes) {
      if (m.steps.count(next) == 0) continue;
      edges.emplace(cur, next);
      queue.push_back(next);
    }
  }
  auto order = topo_sort(reachable, edges);
  if (!order) {
    throw WorkflowError("dul:precedes cycle in " + m.workflow.iri.ntriples(),
                        {{"E_PRECEDES_CYCLE", m.workflow.iri, "cycle"}});
  }
  return *order;
}

Graph emit_triples(const WorkflowModel& m) {
  Graph g;
  auto add = [&](const Term& s, std::string_view p, const Term& o) {
    g.insert(s, iri_term(p), o);
  };
  auto add_text = [&](const Term& s, std::string_view p, const std::string& text) {
    if (!text.empty()) add(s, p, Term::literal(text));
  };
  auto add_opt = [&](const Term& s, std::string_view p, const std::optional<Term>& o) {
    if (o) add(s, p, *o);
  };
  auto add_type = [&](const Term& s, std::string_view type) {
    add(s, v::rdf::kType, iri_term(type));
  };

  const WorkflowDef& w = m.workflow;
  add_type(w.iri, v::pplan::kPlan);
  add_type(w.iri, v::dul::kWorkflow);
  add_text(w.iri, v::dc::kCreated, w.created);
  add_opt(w.iri, v::dc::kCreator, w.creator);
  add_text(w.iri, v::dc::kDescription, w.description);
  add_text(w.iri, v::dc::kHasVersion, w.version);
  add_opt(w.iri, v::dc::kLanguage, w.language);
  add_opt(w.iri, v::dc::kLicense, w.license);
  add_text(w.iri, v::dc::kModified, w.modified);
  add_opt(w.iri, v::pwo::kHasFirstStep, w.first_step);
  add_text(w.iri, v::rdfs::kLabel, w.label);
  add_opt(w.iri, v::prov::kWasAttributedTo, w.attributed_to);
  add_opt(w.iri, v::prov::kWasRevisionOf, w.revision_of);

  for (const auto& [iri, s] : m.steps) {
    add_type(iri, v::pplan::kStep);
    if (s.kinds.count(StepKind::kManual) != 0) add_type(iri, v::bpmn::kManualTask);
    if (s.kinds.count(StepKind::kScript) != 0) add_type(iri, v::bpmn::kScriptTask);
    add_opt(iri, v::rdf::kType, s.operation_class);
    add(iri, v::pplan::kIsStepOfPlan, s.of_plan);
    for (const Term& i : s.described_by) add(iri, v::dul::kIsDescribedBy, i);
    for (const Term& n : s.precedes) add(iri, v::dul::kPrecedes, n);
    for (const Term& var : s.input_vars) add(iri, v::pplan::kHasInputVar, var);
    for (const Term& var : s.output_vars) add(iri, v::pplan::kHasOutputVar, var);
    add_text(iri, v::rdfs::kLabel, s.label);
  }
  for (const auto& [iri, ins] : m.instructions) {
    add_type(iri, v::pplan::kPlan);
    for (const Term& t : ins.extra_types) add(iri, v::rdf::kType, t);
    add_text(iri, v::dc::kDescription, ins.description);
    for (const Term& l : ins.languages) add(iri, v::dc::kLanguage, l);
    add_text(iri, v::dc::kHasVersion, ins.version);
    add_text(iri, v::rdfs::kLabel, ins.label);
    for (const Term& u : ins.qualified_usages) add(iri, v::prov::kQualifiedUsage, u);
    add_opt(iri, v::dul::kIsDescribedBy, ins.described_by);
    add_opt(iri, v::prov::kWasRevisionOf, ins.revision_of);
  }
  for (const auto& [iri, var] : m.variables) {
    add_type(iri, v::pplan::kVariable);
    add_text(iri, v::rdfs::kLabel, var.label);
  }
  for (const auto& [iri, u] : m.usages) {
    add_type(iri, v::prov::kUsage);
    add_text(iri, v::rdfs::kLabel, u.label);
    for (const Term& e : u.entities) add(iri, v::prov::kEntity, e);
  }
  for (const auto& [iri, d] : m.distributions) {
    add_type(iri, v::dcat::kDistribution);
    add_text(iri, v::rdfs::kLabel, d.label);
    for (const Term& url : d.download_urls) add(iri, v::dcat::kDownloadURL, url);
    add_opt(iri, v::dcat::kMediaType, d.media_type);
    add_opt(iri, v::prov::kWasRevisionOf, d.revision_of);
  }
  for (const auto& [iri, ds] : m.datasets) {
    add_type(iri, v::dcat::kDataset);
    add_text(iri, v::rdfs::kLabel, ds.label);
    add_text(iri, v::dc::kDescription, ds.description);
    add_opt(iri, v::dc::kLicense, ds.license);
    for (const Term& d : ds.distributions) add(iri, v::dcat::kDistributionProp, d);
  }
  for (const auto& [iri, a] : m.associations) {
    add_type(iri, v::prov::kAssociation);
    add_opt(iri, v::prov::kAgentProp, a.agent);
    add_opt(iri, v::prov::kHadRole, a.role);
    for (const Term& p : a.plans) add(iri, v::prov::kHadPlan, p);
  }
  for (const auto& [iri, q] : m.shapes) {
    add_type(iri, v::sh::kNodeShape);
    add(iri, v::sh::kSparql, q.constraint);
    add_opt(iri, v::sh::kTargetClass, q.target_usage);
    add_type(q.constraint, v::sh::kSPARQLConstraint);
    add_text(q.constraint, v::sh::kSelect, q.sparql);
  }
  return g;
}

}  // namespace plexflow::workflow
