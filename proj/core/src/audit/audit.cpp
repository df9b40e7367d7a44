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

#include "plexflow/audit/audit.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "plexflow/vocab/catalog.hpp"
#include "plexflow/vocab/terms.hpp"

namespace plexflow::audit {
namespace {

namespace v = plexflow::vocab;
using rdf::Graph;
using rdf::Term;

const Term& type() {
  static const Term t = Term::iri(v::rdf::kType);
  return t;
}

std::set<Term> typed(const Graph& g, std::string_view cls) {
  const auto subjects = g.subjects_of(type(), Term::iri(cls));
  return {subjects.begin(), subjects.end()};
}

bool has(const Graph& g, const Term& s, std::string_view p) {
  return !g.objects_of(s, Term::iri(p)).empty();
}

std::set<Term> datasets_and_workflows(const Graph& g) {
  std::set<Term> out = typed(g, v::dcat::kDataset);
  const std::set<Term> wfs = typed(g, v::dul::kWorkflow);
  out.insert(wfs.begin(), wfs.end());
  return out;
}

// Distributions linked from a dataset.
std::set<Term> dataset_distributions(const Graph& g) {
  std::set<Term> out;
  for (const Term& ds : typed(g, v::dcat::kDataset)) {
    for (const Term& d : g.objects_of(ds, Term::iri(v::dcat::kDistributionProp))) out.insert(d);
  }
  return out;
}

std::string url_scheme(const Term& url) {
  const std::string& s = url.value();
  const auto colon = s.find(':');
  if (colon == std::string::npos) return "";
  std::string scheme = s.substr(0, colon);
  std::transform(scheme.begin(), scheme.end(), scheme.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return scheme;
}

using Check = std::function<std::set<Term>(const Graph&)>;

std::set<Term> check_f1(const Graph& g) {
  std::set<Term> out;
  for (std::string_view cls : {v::dcat::kDataset, v::dcat::kDistribution, v::dul::kWorkflow}) {
    for (const Term& t : typed(g, cls)) {
      if (!t.is_iri()) out.insert(t);
    }
  }
  return out;
}

std::set<Term> check_f2(const Graph& g) {
  std::set<Term> out;
  for (const Term& t : datasets_and_workflows(g)) {
    if (!has(g, t, v::rdfs::kLabel) || !has(g, t, v::dc::kDescription)) out.insert(t);
  }
  return out;
}

std::set<Term> check_f3(const Graph& g) {
  std::set<Term> out;
  for (const Term& ds : typed(g, v::dcat::kDataset)) {
    const auto dists = g.objects_of(ds, Term::iri(v::dcat::kDistributionProp));
    if (dists.empty()) out.insert(ds);
    for (const Term& d : dists) {
      if (!has(g, d, v::dcat::kDownloadURL)) out.insert(d);
    }
  }
  return out;
}

std::set<Term> check_a11(const Graph& g) {
  static const std::set<std::string> kOpen = {"http", "https", "ftp"};
  std::set<Term> out;
  for (const rdf::Triple& t : g.triples()) {
    if (t.predicate.value() == v::dcat::kDownloadURL && kOpen.count(url_scheme(t.object)) == 0) {
      out.insert(t.subject);
    }
  }
  return out;
}

std::set<Term> check_i1(const Graph& g) {
  std::set<Term> out;
  for (const rdf::Triple& t : g.triples()) {
    if (!v::in_catalog_namespace(t.predicate.value())) out.insert(t.predicate);
  }
  return out;
}

std::set<Term> check_i2(const Graph& g) {
  const std::string edam_format = std::string(v::edam::kBase) + "format_";
  std::set<Term> out;
  for (const Term& d : typed(g, v::dcat::kDistribution)) {
    const auto media = g.objects_of(d, Term::iri(v::dcat::kMediaType));
    const bool edam = std::any_of(media.begin(), media.end(), [&](const Term& m) {
      return m.is_iri() && m.value().rfind(edam_format, 0) == 0;
    });
    if (!edam) out.insert(d);
  }
  return out;
}

std::set<Term> check_i3(const Graph& g) {
  std::set<Term> used;
  const Term entity = Term::iri(v::prov::kEntity);
  for (const Term& u : typed(g, v::prov::kUsage)) {
    for (const Term& e : g.objects_of(u, entity)) used.insert(e);
  }
  std::set<Term> out;
  for (const Term& d : dataset_distributions(g)) {
    if (used.count(d) == 0) out.insert(d);
  }
  return out;
}

std::set<Term> check_r11(const Graph& g) {
  std::set<Term> out;
  for (const Term& t : datasets_and_workflows(g)) {
    if (!has(g, t, v::dc::kLicense)) out.insert(t);
  }
  return out;
}

std::set<Term> check_r12(const Graph& g) {
  std::set<Term> out;
  for (const Term& wf : typed(g, v::dul::kWorkflow)) {
    if (!has(g, wf, v::dc::kCreator) || !has(g, wf, v::dc::kCreated)) out.insert(wf);
  }
  return out;
}

struct RuleDef {
  AuditRule rule;
  Check check;  // empty for rules that cannot be checked on the graph
};

const std::vector<RuleDef>& rule_defs() {
  static const std::vector<RuleDef> defs = {
      {{"F1", "(Meta)data are assigned a globally unique and persistent identifier",
        "every dcat:Dataset, dcat:Distribution and dul:Workflow is an IRI, not a blank node",
        Severity::kError, true},
       check_f1},
      {{"F2", "Data are described with rich metadata",
        "every dataset and workflow has rdfs:label and dcterms:description", Severity::kError,
        true},
       check_f2},
      {{"F3", "Metadata clearly and explicitly include the identifier of the data they describe",
        "every dcat:Dataset links a dcat:Distribution, and each has a dcat:downloadURL",
        Severity::kError, true},
       check_f3},
      {{"A1.1", "The protocol is open, free, and universally implementable",
        "every dcat:downloadURL uses http, https or ftp", Severity::kError, true},
       check_a11},
      {{"A1.2", "The protocol allows for an authentication and authorisation procedure",
        "access control lives in the serving infrastructure; the graph records no access "
        "policy to inspect, and all download URLs are expected to be public",
        Severity::kError, false},
       nullptr},
      {{"A2", "Metadata are accessible, even when the data are no longer available",
        "depends on the metadata being deposited in a registry separate from the data host, "
        "which is a publication step outside the graph",
        Severity::kError, false},
       nullptr},
      {{"I1", "(Meta)data use a formal, accessible, shared language for knowledge representation",
        "every predicate comes from a registered vocabulary namespace", Severity::kWarning,
        true},
       check_i1},
      {{"I2", "(Meta)data use vocabularies that follow FAIR principles",
        "every dcat:Distribution has a dcat:mediaType from EDAM formats", Severity::kError,
        true},
       check_i2},
      {{"I3", "(Meta)data include qualified references to other (meta)data",
        "every distribution of a dataset is the prov:entity of some prov:Usage",
        Severity::kError, true},
       check_i3},
      {{"R1.1", "(Meta)data are released with a clear and accessible data usage license",
        "every workflow and dataset has dcterms:license", Severity::kError, true},
       check_r11},
      {{"R1.2", "(Meta)data are associated with detailed provenance",
        "every workflow has dcterms:creator and dcterms:created", Severity::kError, true},
       check_r12},
  };
  return defs;
}

const char* severity_name(Severity s) { return s == Severity::kError ? "error" : "warning"; }

const char* status_name(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kNotMachineCheckable:
      return "not-machine-checkable";
  }
  return "";
}

}  // namespace

const std::vector<AuditRule>& audit_rules() {
  static const std::vector<AuditRule> rules = [] {
    std::vector<AuditRule> out;
    for (const RuleDef& d : rule_defs()) out.push_back(d.rule);
    return out;
  }();
  return rules;
}

const RuleResult& AuditReport::result(const std::string& id) const {
  for (const RuleResult& r : results) {
    if (r.rule.id == id) return r;
  }
  throw std::out_of_range("no audit rule " + id);
}

std::size_t AuditReport::error_count() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) {
    return r.status == Status::kFail && r.rule.severity == Severity::kError;
  }));
}

std::size_t AuditReport::warning_count() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) {
    return r.status == Status::kFail && r.rule.severity == Severity::kWarning;
  }));
}

std::string AuditReport::to_json() const {
  nlohmann::json rules = nlohmann::json::array();
  std::size_t passed = 0;
  std::size_t unchecked = 0;
  for (const RuleResult& r : results) {
    nlohmann::json offenders = nlohmann::json::array();
    for (const Term& t : r.offenders) offenders.push_back(t.ntriples());
    rules.push_back({{"id", r.rule.id},
                     {"principle", r.rule.principle},
                     {"check", r.rule.check},
                     {"severity", severity_name(r.rule.severity)},
                     {"status", status_name(r.status)},
                     {"offenders", std::move(offenders)}});
    passed += r.status == Status::kPass;
    unchecked += r.status == Status::kNotMachineCheckable;
  }
  nlohmann::json doc = {{"rules", std::move(rules)},
                        {"summary",
                         {{"passed", passed},
                          {"errors", error_count()},
                          {"warnings", warning_count()},
                          {"not_machine_checkable", unchecked},
                          {"ok", ok()}}}};
  return doc.dump(2) + "\n";
}

AuditReport audit(const Graph& g) {
  AuditReport report;
  for (const RuleDef& d : rule_defs()) {
    RuleResult r{d.rule, Status::kNotMachineCheckable, {}};
    if (d.check) {
      const std::set<Term> offenders = d.check(g);
      r.offenders.assign(offenders.begin(), offenders.end());
      r.status = offenders.empty() ? Status::kPass : Status::kFail;
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace plexflow::audit
