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

#ifndef PLEXFLOW_RDF_NTRIPLES_HPP_
#define PLEXFLOW_RDF_NTRIPLES_HPP_

#include <string>
#include <string_view>

#include "plexflow/rdf/graph.hpp"

namespace plexflow::rdf {

/// Parses a W3C N-Triples document. Throws ParseError (with line number) on
/// syntax errors, relative IRIs and bad escapes.
Graph parse_ntriples(std::string_view text);

/// Parses an N-Quads document and drops the graph label of every statement.
Graph parse_nquads_as_triples(std::string_view text);

/// Canonical N-Triples: one statement per line, sorted by the serialized
/// (subject, predicate, object), "\n" line ends. Empty graph -> "".
std::string serialize_ntriples(const Graph& g);

std::string to_ntriples_line(const Triple& t);

}  // namespace plexflow::rdf

#endif  // PLEXFLOW_RDF_NTRIPLES_HPP_
