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

#ifndef PLEXFLOW_VOCAB_TERMS_HPP_
#define PLEXFLOW_VOCAB_TERMS_HPP_

#include <string_view>

// Full IRIs of every profile term, grouped by namespace.

namespace plexflow::vocab {

namespace rdf {
inline constexpr std::string_view kPrefix = "rdf";
inline constexpr std::string_view kBase = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kLangString = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr std::string_view kProperty = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Property";
}  // namespace rdf

namespace rdfs {
inline constexpr std::string_view kPrefix = "rdfs";
inline constexpr std::string_view kBase = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kLabel = "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr std::string_view kComment = "http://www.w3.org/2000/01/rdf-schema#comment";
}  // namespace rdfs

namespace xsd {
inline constexpr std::string_view kPrefix = "xsd";
inline constexpr std::string_view kBase = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kDate = "http://www.w3.org/2001/XMLSchema#date";
inline constexpr std::string_view kDateTime = "http://www.w3.org/2001/XMLSchema#dateTime";
inline constexpr std::string_view kLanguage = "http://www.w3.org/2001/XMLSchema#language";
inline constexpr std::string_view kInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view kDouble = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view kBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
}  // namespace xsd

namespace pplan {
inline constexpr std::string_view kPrefix = "p-plan";
inline constexpr std::string_view kBase = "http://purl.org/net/p-plan#";
inline constexpr std::string_view kPlan = "http://purl.org/net/p-plan#Plan";
inline constexpr std::string_view kStep = "http://purl.org/net/p-plan#Step";
inline constexpr std::string_view kVariable = "http://purl.org/net/p-plan#Variable";
inline constexpr std::string_view kActivity = "http://purl.org/net/p-plan#Activity";
inline constexpr std::string_view kEntity = "http://purl.org/net/p-plan#Entity";
inline constexpr std::string_view kIsStepOfPlan = "http://purl.org/net/p-plan#isStepOfPlan";
inline constexpr std::string_view kHasInputVar = "http://purl.org/net/p-plan#hasInputVar";
inline constexpr std::string_view kHasOutputVar = "http://purl.org/net/p-plan#hasOutputVar";
inline constexpr std::string_view kCorrespondsToStep = "http://purl.org/net/p-plan#correspondsToStep";
}  // namespace pplan

namespace prov {
inline constexpr std::string_view kPrefix = "prov";
inline constexpr std::string_view kBase = "http://www.w3.org/ns/prov#";
inline constexpr std::string_view kUsage = "http://www.w3.org/ns/prov#Usage";
inline constexpr std::string_view kQualifiedUsage = "http://www.w3.org/ns/prov#qualifiedUsage";
inline constexpr std::string_view kEntity = "http://www.w3.org/ns/prov#entity";
inline constexpr std::string_view kAssociation = "http://www.w3.org/ns/prov#Association";
inline constexpr std::string_view kQualifiedAssociation = "http://www.w3.org/ns/prov#qualifiedAssociation";
inline constexpr std::string_view kAgentProp = "http://www.w3.org/ns/prov#agent";
inline constexpr std::string_view kHadRole = "http://www.w3.org/ns/prov#hadRole";
inline constexpr std::string_view kHadPlan = "http://www.w3.org/ns/prov#hadPlan";
inline constexpr std::string_view kWasAttributedTo = "http://www.w3.org/ns/prov#wasAttributedTo";
inline constexpr std::string_view kGenerated = "http://www.w3.org/ns/prov#generated";
inline constexpr std::string_view kQualifiedGeneration = "http://www.w3.org/ns/prov#qualifiedGeneration";
inline constexpr std::string_view kGeneration = "http://www.w3.org/ns/prov#Generation";
inline constexpr std::string_view kAtTime = "http://www.w3.org/ns/prov#atTime";
inline constexpr std::string_view kWasRevisionOf = "http://www.w3.org/ns/prov#wasRevisionOf";
inline constexpr std::string_view kSoftwareAgent = "http://www.w3.org/ns/prov#SoftwareAgent";
inline constexpr std::string_view kPerson = "http://www.w3.org/ns/prov#Person";
inline constexpr std::string_view kRole = "http://www.w3.org/ns/prov#Role";
inline constexpr std::string_view kAgent = "http://www.w3.org/ns/prov#Agent";
inline constexpr std::string_view kActivity = "http://www.w3.org/ns/prov#Activity";
inline constexpr std::string_view kStartedAtTime = "http://www.w3.org/ns/prov#startedAtTime";
inline constexpr std::string_view kEndedAtTime = "http://www.w3.org/ns/prov#endedAtTime";
}  // namespace prov

namespace dul {
inline constexpr std::string_view kPrefix = "dul";
inline constexpr std::string_view kBase = "http://www.ontologydesignpatterns.org/ont/dul/DUL.owl#";
inline constexpr std::string_view kWorkflow = "http://www.ontologydesignpatterns.org/ont/dul/DUL.owl#Workflow";
inline constexpr std::string_view kIsDescribedBy = "http://www.ontologydesignpatterns.org/ont/dul/DUL.owl#isDescribedBy";
inline constexpr std::string_view kPrecedes = "http://www.ontologydesignpatterns.org/ont/dul/DUL.owl#precedes";
}  // namespace dul

namespace pwo {
inline constexpr std::string_view kPrefix = "pwo";
inline constexpr std::string_view kBase = "http://purl.org/spar/pwo/";
inline constexpr std::string_view kHasFirstStep = "http://purl.org/spar/pwo/hasFirstStep";
}  // namespace pwo

namespace bpmn {
inline constexpr std::string_view kPrefix = "bpmn";
inline constexpr std::string_view kBase = "http://dkm.fbk.eu/index.php/BPMN2_Ontology#";
inline constexpr std::string_view kManualTask = "http://dkm.fbk.eu/index.php/BPMN2_Ontology#ManualTask";
inline constexpr std::string_view kScriptTask = "http://dkm.fbk.eu/index.php/BPMN2_Ontology#ScriptTask";
}  // namespace bpmn

namespace dcat {
inline constexpr std::string_view kPrefix = "dcat";
inline constexpr std::string_view kBase = "http://www.w3.org/ns/dcat#";
inline constexpr std::string_view kDataset = "http://www.w3.org/ns/dcat#Dataset";
inline constexpr std::string_view kDistribution = "http://www.w3.org/ns/dcat#Distribution";
inline constexpr std::string_view kDistributionProp = "http://www.w3.org/ns/dcat#distribution";
inline constexpr std::string_view kDownloadURL = "http://www.w3.org/ns/dcat#downloadURL";
inline constexpr std::string_view kMediaType = "http://www.w3.org/ns/dcat#mediaType";
}  // namespace dcat

namespace dc {
inline constexpr std::string_view kPrefix = "dc";
inline constexpr std::string_view kBase = "http://purl.org/dc/terms/";
inline constexpr std::string_view kHasVersion = "http://purl.org/dc/terms/hasVersion";
inline constexpr std::string_view kCreator = "http://purl.org/dc/terms/creator";
inline constexpr std::string_view kCreated = "http://purl.org/dc/terms/created";
inline constexpr std::string_view kModified = "http://purl.org/dc/terms/modified";
inline constexpr std::string_view kDescription = "http://purl.org/dc/terms/description";
inline constexpr std::string_view kLanguage = "http://purl.org/dc/terms/language";
inline constexpr std::string_view kPublisher = "http://purl.org/dc/terms/publisher";
inline constexpr std::string_view kLinguisticSystem = "http://purl.org/dc/terms/LinguisticSystem";
inline constexpr std::string_view kLicense = "http://purl.org/dc/terms/license";
inline constexpr std::string_view kTitle = "http://purl.org/dc/terms/title";
}  // namespace dc

namespace opmw {
inline constexpr std::string_view kPrefix = "opmw";
inline constexpr std::string_view kBase = "http://www.opmw.org/ontology/";
inline constexpr std::string_view kWorkflowExecutionArtifact = "http://www.opmw.org/ontology/WorkflowExecutionArtifact";
}  // namespace opmw

namespace mls {
inline constexpr std::string_view kPrefix = "mls";
inline constexpr std::string_view kBase = "http://www.w3.org/ns/mls#";
inline constexpr std::string_view kModelEvaluation = "http://www.w3.org/ns/mls#ModelEvaluation";
inline constexpr std::string_view kSpecifiedBy = "http://www.w3.org/ns/mls#specifiedBy";
inline constexpr std::string_view kEvaluationMeasure = "http://www.w3.org/ns/mls#EvaluationMeasure";
}  // namespace mls

namespace sh {
inline constexpr std::string_view kPrefix = "sh";
inline constexpr std::string_view kBase = "http://www.w3.org/ns/shacl#";
inline constexpr std::string_view kNodeShape = "http://www.w3.org/ns/shacl#NodeShape";
inline constexpr std::string_view kSparql = "http://www.w3.org/ns/shacl#sparql";
inline constexpr std::string_view kSPARQLConstraint = "http://www.w3.org/ns/shacl#SPARQLConstraint";
inline constexpr std::string_view kTargetClass = "http://www.w3.org/ns/shacl#targetClass";
inline constexpr std::string_view kSelect = "http://www.w3.org/ns/shacl#select";
}  // namespace sh

namespace edam {
inline constexpr std::string_view kPrefix = "edam";
inline constexpr std::string_view kBase = "http://edamontology.org/";
inline constexpr std::string_view kOperation0004 = "http://edamontology.org/operation_0004";
inline constexpr std::string_view kOperation2409 = "http://edamontology.org/operation_2409";
inline constexpr std::string_view kFormat1915 = "http://edamontology.org/format_1915";
inline constexpr std::string_view kFormat2330 = "http://edamontology.org/format_2330";
inline constexpr std::string_view kFormat2376 = "http://edamontology.org/format_2376";
inline constexpr std::string_view kFormat3256 = "http://edamontology.org/format_3256";
inline constexpr std::string_view kTopic0128 = "http://edamontology.org/topic_0128";
}  // namespace edam

namespace fabio {
inline constexpr std::string_view kPrefix = "fabio";
inline constexpr std::string_view kBase = "http://purl.org/spar/fabio/";
inline constexpr std::string_view kTriplestore = "http://purl.org/spar/fabio/Triplestore";
}  // namespace fabio

namespace reprod {
inline constexpr std::string_view kPrefix = "reprod";
inline constexpr std::string_view kBase = "https://w3id.org/reproduceme#";
inline constexpr std::string_view kCell = "https://w3id.org/reproduceme#Cell";
}  // namespace reprod

namespace schema {
inline constexpr std::string_view kPrefix = "schema";
inline constexpr std::string_view kBase = "http://schema.org/";
inline constexpr std::string_view kComputerLanguage = "http://schema.org/ComputerLanguage";
inline constexpr std::string_view kLanguage = "http://schema.org/Language";
}  // namespace schema

namespace opredict {
inline constexpr std::string_view kPrefix = "opredict";
inline constexpr std::string_view kBase = "https://w3id.org/fair/openpredict/";
}  // namespace opredict

}  // namespace plexflow::vocab

#endif  // PLEXFLOW_VOCAB_TERMS_HPP_
