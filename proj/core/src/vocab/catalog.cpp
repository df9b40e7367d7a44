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

#include "plexflow/vocab/catalog.hpp"

#include <algorithm>
#include <array>

namespace plexflow::vocab {
namespace {

constexpr std::array kNamespaces = {
    Namespace{rdf::kPrefix, rdf::kBase},
    Namespace{rdfs::kPrefix, rdfs::kBase},
    Namespace{xsd::kPrefix, xsd::kBase},
    Namespace{pplan::kPrefix, pplan::kBase},
    Namespace{prov::kPrefix, prov::kBase},
    Namespace{dul::kPrefix, dul::kBase},
    Namespace{pwo::kPrefix, pwo::kBase},
    Namespace{bpmn::kPrefix, bpmn::kBase},
    Namespace{dcat::kPrefix, dcat::kBase},
    Namespace{dc::kPrefix, dc::kBase},
    Namespace{opmw::kPrefix, opmw::kBase},
    Namespace{mls::kPrefix, mls::kBase},
    Namespace{sh::kPrefix, sh::kBase},
    Namespace{edam::kPrefix, edam::kBase},
    Namespace{fabio::kPrefix, fabio::kBase},
    Namespace{reprod::kPrefix, reprod::kBase},
    Namespace{schema::kPrefix, schema::kBase},
    Namespace{opredict::kPrefix, opredict::kBase},
};

bool is_local_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
}

bool usable_local(std::string_view local) {
  if (local.empty() || local.back() == '.' || local.front() == '.' ||
      local.front() == '-') {
    return false;
  }
  return std::all_of(local.begin(), local.end(), is_local_char);
}

}  // namespace

std::span<const Namespace> namespaces() { return kNamespaces; }

const std::map<std::string, std::string, std::less<>>& term_catalog() {
  static const auto* catalog =
      new std::map<std::string, std::string, std::less<>>{
          {"rdf:type", std::string(rdf::kType)},
          {"rdf:langString", std::string(rdf::kLangString)},
          {"rdf:Property", std::string(rdf::kProperty)},
          {"rdfs:label", std::string(rdfs::kLabel)},
          {"rdfs:comment", std::string(rdfs::kComment)},
          {"xsd:string", std::string(xsd::kString)},
          {"xsd:date", std::string(xsd::kDate)},
          {"xsd:dateTime", std::string(xsd::kDateTime)},
          {"xsd:language", std::string(xsd::kLanguage)},
          {"xsd:integer", std::string(xsd::kInteger)},
          {"xsd:decimal", std::string(xsd::kDecimal)},
          {"xsd:double", std::string(xsd::kDouble)},
          {"xsd:boolean", std::string(xsd::kBoolean)},
          {"p-plan:Plan", std::string(pplan::kPlan)},
          {"p-plan:Step", std::string(pplan::kStep)},
          {"p-plan:Variable", std::string(pplan::kVariable)},
          {"p-plan:Activity", std::string(pplan::kActivity)},
          {"p-plan:Entity", std::string(pplan::kEntity)},
          {"p-plan:isStepOfPlan", std::string(pplan::kIsStepOfPlan)},
          {"p-plan:hasInputVar", std::string(pplan::kHasInputVar)},
          {"p-plan:hasOutputVar", std::string(pplan::kHasOutputVar)},
          {"p-plan:correspondsToStep", std::string(pplan::kCorrespondsToStep)},
          {"prov:Usage", std::string(prov::kUsage)},
          {"prov:qualifiedUsage", std::string(prov::kQualifiedUsage)},
          {"prov:entity", std::string(prov::kEntity)},
          {"prov:Association", std::string(prov::kAssociation)},
          {"prov:qualifiedAssociation", std::string(prov::kQualifiedAssociation)},
          {"prov:agent", std::string(prov::kAgentProp)},
          {"prov:hadRole", std::string(prov::kHadRole)},
          {"prov:hadPlan", std::string(prov::kHadPlan)},
          {"prov:wasAttributedTo", std::string(prov::kWasAttributedTo)},
          {"prov:generated", std::string(prov::kGenerated)},
          {"prov:qualifiedGeneration", std::string(prov::kQualifiedGeneration)},
          {"prov:Generation", std::string(prov::kGeneration)},
          {"prov:atTime", std::string(prov::kAtTime)},
          {"prov:wasRevisionOf", std::string(prov::kWasRevisionOf)},
          {"prov:SoftwareAgent", std::string(prov::kSoftwareAgent)},
          {"prov:Person", std::string(prov::kPerson)},
          {"prov:Role", std::string(prov::kRole)},
          {"prov:Agent", std::string(prov::kAgent)},
          {"prov:Activity", std::string(prov::kActivity)},
          {"prov:startedAtTime", std::string(prov::kStartedAtTime)},
          {"prov:endedAtTime", std::string(prov::kEndedAtTime)},
          {"dul:Workflow", std::string(dul::kWorkflow)},
          {"dul:isDescribedBy", std::string(dul::kIsDescribedBy)},
          {"dul:precedes", std::string(dul::kPrecedes)},
          {"pwo:hasFirstStep", std::string(pwo::kHasFirstStep)},
          {"bpmn:ManualTask", std::string(bpmn::kManualTask)},
          {"bpmn:ScriptTask", std::string(bpmn::kScriptTask)},
          {"dcat:Dataset", std::string(dcat::kDataset)},
          {"dcat:Distribution", std::string(dcat::kDistribution)},
          {"dcat:distribution", std::string(dcat::kDistributionProp)},
          {"dcat:downloadURL", std::string(dcat::kDownloadURL)},
          {"dcat:mediaType", std::string(dcat::kMediaType)},
          {"dc:hasVersion", std::string(dc::kHasVersion)},
          {"dc:creator", std::string(dc::kCreator)},
          {"dc:created", std::string(dc::kCreated)},
          {"dc:modified", std::string(dc::kModified)},
          {"dc:description", std::string(dc::kDescription)},
          {"dc:language", std::string(dc::kLanguage)},
          {"dc:publisher", std::string(dc::kPublisher)},
          {"dc:LinguisticSystem", std::string(dc::kLinguisticSystem)},
          {"dc:license", std::string(dc::kLicense)},
          {"dc:title", std::string(dc::kTitle)},
          {"opmw:WorkflowExecutionArtifact", std::string(opmw::kWorkflowExecutionArtifact)},
          {"mls:ModelEvaluation", std::string(mls::kModelEvaluation)},
          {"mls:specifiedBy", std::string(mls::kSpecifiedBy)},
          {"mls:EvaluationMeasure", std::string(mls::kEvaluationMeasure)},
          {"sh:NodeShape", std::string(sh::kNodeShape)},
          {"sh:sparql", std::string(sh::kSparql)},
          {"sh:SPARQLConstraint", std::string(sh::kSPARQLConstraint)},
          {"sh:targetClass", std::string(sh::kTargetClass)},
          {"sh:select", std::string(sh::kSelect)},
          {"edam:operation_0004", std::string(edam::kOperation0004)},
          {"edam:operation_2409", std::string(edam::kOperation2409)},
          {"edam:format_1915", std::string(edam::kFormat1915)},
          {"edam:format_2330", std::string(edam::kFormat2330)},
          {"edam:format_2376", std::string(edam::kFormat2376)},
          {"edam:format_3256", std::string(edam::kFormat3256)},
          {"edam:topic_0128", std::string(edam::kTopic0128)},
          {"fabio:Triplestore", std::string(fabio::kTriplestore)},
          {"reprod:Cell", std::string(reprod::kCell)},
          {"schema:ComputerLanguage", std::string(schema::kComputerLanguage)},
          {"schema:Language", std::string(schema::kLanguage)},
      };
  return *catalog;
}

const plexflow::rdf::PrefixMap& prefix_map() {
  static const auto* map = [] {
    auto* m = new plexflow::rdf::PrefixMap;
    for (const Namespace& ns : kNamespaces) {
      m->emplace(std::string(ns.prefix), std::string(ns.base));
    }
    return m;
  }();
  return *map;
}

bool in_catalog_namespace(std::string_view iri) {
  return std::any_of(kNamespaces.begin(), kNamespaces.end(),
                     [&](const Namespace& ns) {
                       return iri.substr(0, ns.base.size()) == ns.base;
                     });
}

plexflow::rdf::Term expand(std::string_view curie) {
  std::size_t colon = curie.find(':');
  if (colon == std::string_view::npos) {
    throw VocabError("not a CURIE: '" + std::string(curie) + "'");
  }
  std::string_view prefix = curie.substr(0, colon);
  const auto& prefixes = prefix_map();
  auto it = prefixes.find(prefix);
  if (it == prefixes.end()) {
    throw VocabError("unknown prefix '" + std::string(prefix) + "'");
  }
  return plexflow::rdf::Term::iri(it->second +
                                  std::string(curie.substr(colon + 1)));
}

std::string compress(std::string_view iri) {
  const Namespace* best = nullptr;
  for (const Namespace& ns : kNamespaces) {
    if (iri.substr(0, ns.base.size()) == ns.base &&
        (best == nullptr || ns.base.size() > best->base.size())) {
      best = &ns;
    }
  }
  if (best == nullptr) return std::string(iri);
  std::string_view local = iri.substr(best->base.size());
  if (!usable_local(local)) return std::string(iri);
  return std::string(best->prefix) + ":" + std::string(local);
}

std::string compress(const plexflow::rdf::Term& term) {
  if (!term.is_iri()) return term.ntriples();
  return compress(std::string_view(term.value()));
}

std::string prefixes_turtle() {
  std::string out;
  for (const auto& [prefix, base] : prefix_map()) {
    out += "@prefix " + prefix + ": <" + base + "> .\n";
  }
  return out;
}

}  // namespace plexflow::vocab
