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

#ifndef PLEXFLOW_QUERY_PARSER_HPP_
#define PLEXFLOW_QUERY_PARSER_HPP_

#include <string_view>

#include "plexflow/query/ast.hpp"
#include "plexflow/rdf/turtle.hpp"

namespace plexflow::query {

/// Parses the supported SPARQL subset:
///   PREFIX, SELECT [DISTINCT] (vars | *) WHERE { ... } [ORDER BY ...]
/// where the group holds triple patterns (with ';' / ',' and an optional
/// '+' on an IRI predicate), FILTER, single-variable VALUES, OPTIONAL and
/// MINUS. FILTER supports = != < > <= >= && || ! BOUND REGEX STR.
///
/// Anything else that is valid SPARQL (UNION, LIMIT, aggregates, BIND,
/// GRAPH, other property paths, ...) raises UnsupportedError naming it.
/// Syntax errors and unknown prefixes raise ParseError with position.
Query parse_query(std::string_view text, const rdf::PrefixMap& predeclared = {});

}  // namespace plexflow::query

#endif  // PLEXFLOW_QUERY_PARSER_HPP_
