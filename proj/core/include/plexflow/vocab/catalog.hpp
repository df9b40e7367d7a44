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

#ifndef PLEXFLOW_VOCAB_CATALOG_HPP_
#define PLEXFLOW_VOCAB_CATALOG_HPP_

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "plexflow/rdf/term.hpp"
#include "plexflow/rdf/turtle.hpp"
#include "plexflow/util/error.hpp"
#include "plexflow/vocab/terms.hpp"

namespace plexflow::vocab {

class VocabError : public Error {
 public:
  using Error::Error;
};

struct Namespace {
  std::string_view prefix;
  std::string_view base;
};

// Every registered namespace, in declaration order.
std::span<const Namespace> namespaces();

// CURIE -> IRI for every profile term.
const std::map<std::string, std::string, std::less<>>& term_catalog();

// prefix -> base, suitable as predeclared prefixes for parse_turtle.
const plexflow::rdf::PrefixMap& prefix_map();

// True if `iri` starts with one of the registered bases.
bool in_catalog_namespace(std::string_view iri);

/// "p-plan:Step" -> <http://purl.org/net/p-plan#Step>. Throws VocabError for
/// an unknown prefix or a string without ':'.
plexflow::rdf::Term expand(std::string_view curie);

/// Longest-base-match compression. Returns the IRI unchanged when no base
/// matches or the remainder is not a usable local name; non-IRI terms come
/// back in N-Triples form.
std::string compress(const plexflow::rdf::Term& term);
std::string compress(std::string_view iri);

// Convenience: Term for a full IRI constant from terms.hpp.
inline plexflow::rdf::Term iri(std::string_view full) {
  return plexflow::rdf::Term::iri(full);
}

// "@prefix p: <...> ." lines for every namespace, sorted by prefix.
std::string prefixes_turtle();

}  // namespace plexflow::vocab

#endif  // PLEXFLOW_VOCAB_CATALOG_HPP_
