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

#ifndef PLEXFLOW_RDF_TURTLE_HPP_
#define PLEXFLOW_RDF_TURTLE_HPP_

#include <map>
#include <string>
#include <string_view>

#include "plexflow/rdf/graph.hpp"

namespace plexflow::rdf {

// prefix (without ':') -> namespace IRI
using PrefixMap = std::map<std::string, std::string, std::less<>>;

/// Parses the supported Turtle subset:
///   @prefix / PREFIX, <absolute IRIs>, prefixed names, `a`, `;` and `,`
///   lists, string literals (short and long quotes) with language tag or
///   datatype, integer/decimal/double/boolean shorthands, `_:label` blank
///   nodes.
/// Collections, `[ ]` anonymous nodes, @base/BASE and relative IRIs raise
/// UnsupportedError naming the construct. Other problems raise ParseError
/// with line and column.
///
/// `predeclared` prefixes are visible before the document's own directives.
Graph parse_turtle(std::string_view text, const PrefixMap& predeclared = {});

}  // namespace plexflow::rdf

#endif  // PLEXFLOW_RDF_TURTLE_HPP_
