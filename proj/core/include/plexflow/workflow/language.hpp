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

#ifndef PLEXFLOW_WORKFLOW_LANGUAGE_HPP_
#define PLEXFLOW_WORKFLOW_LANGUAGE_HPP_

#include <set>
#include <string_view>

#include "plexflow/rdf/graph.hpp"
#include "plexflow/workflow/model.hpp"

namespace plexflow::workflow {

inline constexpr std::string_view kEnglish =
    "https://w3id.org/fair/openpredict/LinguisticSystem_xsd_language_English";
inline constexpr std::string_view kPython35 =
    "https://w3id.org/fair/openpredict/LinguisticSystem_Python_3_5";

enum class InstructionKind { kNaturalLanguage, kComputerLanguage };

// Known language IRIs split into natural and computer languages.
class LanguageRegistry {
 public:
  // English and Python 3.5.
  static LanguageRegistry defaults();
  // defaults() plus every resource typed dc:LinguisticSystem (natural) or
  // schema:ComputerLanguage (computer) in g.
  static LanguageRegistry from_graph(const rdf::Graph& g);

  void add_natural(const rdf::Term& iri);
  void add_computer(const rdf::Term& iri);

  bool is_natural(const rdf::Term& iri) const { return natural_.count(iri) != 0; }
  bool is_computer(const rdf::Term& iri) const { return computer_.count(iri) != 0; }

 private:
  std::set<rdf::Term> natural_;
  std::set<rdf::Term> computer_;
};

/// Computer-language iff the instruction's language is a registered computer
/// language. A language-tag literal ("en"^^xsd:language) counts as natural.
/// Throws WorkflowError for an unregistered IRI or when the instruction does
/// not have exactly one language.
InstructionKind instruction_kind(const Instruction& instruction,
                                 const LanguageRegistry& registry =
                                     LanguageRegistry::defaults());

}  // namespace plexflow::workflow

#endif  // PLEXFLOW_WORKFLOW_LANGUAGE_HPP_
