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

#include "plexflow/workflow/language.hpp"

#include "plexflow/vocab/terms.hpp"

namespace plexflow::workflow {

LanguageRegistry LanguageRegistry::defaults() {
  LanguageRegistry r;
  r.add_natural(Term::iri(kEnglish));
  r.add_computer(Term::iri(kPython35));
  return r;
}

LanguageRegistry LanguageRegistry::from_graph(const rdf::Graph& g) {
  LanguageRegistry r = defaults();
  const Term type = Term::iri(vocab::rdf::kType);
  for (const Term& t : g.subjects_of(type, Term::iri(vocab::dc::kLinguisticSystem))) {
    if (t.is_iri()) r.add_natural(t);
  }
  for (const Term& t : g.subjects_of(type, Term::iri(vocab::schema::kComputerLanguage))) {
    if (t.is_iri()) r.add_computer(t);
  }
  return r;
}

void LanguageRegistry::add_natural(const rdf::Term& iri) {
  computer_.erase(iri);
  natural_.insert(iri);
}

void LanguageRegistry::add_computer(const rdf::Term& iri) {
  natural_.erase(iri);
  computer_.insert(iri);
}

InstructionKind instruction_kind(const Instruction& instruction,
                                 const LanguageRegistry& registry) {
  if (instruction.languages.size() != 1) {
    throw WorkflowError("instruction " + instruction.iri.ntriples() + " has " +
                        std::to_string(instruction.languages.size()) +
                        " languages, expected 1");
  }
  const Term& lang = instruction.languages.front();
  if (lang.is_literal()) {
    if (rdf::is_valid_language_tag(lang.value())) {
      return InstructionKind::kNaturalLanguage;
    }
    throw WorkflowError("not a language tag: " + lang.ntriples());
  }
  if (registry.is_computer(lang)) return InstructionKind::kComputerLanguage;
  if (registry.is_natural(lang)) return InstructionKind::kNaturalLanguage;
  throw WorkflowError("unknown language " + lang.ntriples());
}

}  // namespace plexflow::workflow
