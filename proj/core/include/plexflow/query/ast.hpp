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

#ifndef PLEXFLOW_QUERY_AST_HPP_
#define PLEXFLOW_QUERY_AST_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "plexflow/rdf/term.hpp"
#include "plexflow/rdf/turtle.hpp"

namespace plexflow::query {

struct Variable {
  std::string name;  // without the leading '?' or '$'
  friend bool operator==(const Variable&, const Variable&) = default;
};

using PatternTerm = std::variant<Variable, rdf::Term>;

struct TriplePatternNode {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
  bool closure = false;  // predicate+ (one or more hops)
};

enum class ExprKind {
  kVariable,
  kConstant,
  kOr,
  kAnd,
  kNot,
  kEqual,
  kNotEqual,
  kLess,
  kGreater,
  kLessEqual,
  kGreaterEqual,
  kBound,
  kRegex,
  kStr,
};

struct Expr {
  ExprKind kind = ExprKind::kConstant;
  std::string variable;           // kVariable, kBound
  std::optional<rdf::Term> term;  // kConstant
  std::vector<Expr> args;         // operands / function arguments
};

struct ValuesClause {
  std::string variable;
  std::vector<std::optional<rdf::Term>> rows;  // nullopt = UNDEF
};

enum class ElementKind { kTriple, kFilter, kValues, kOptional, kMinus };

struct Element {
  ElementKind kind = ElementKind::kTriple;
  std::optional<TriplePatternNode> triple;
  std::optional<Expr> filter;
  std::optional<ValuesClause> values;
  std::vector<Element> group;  // kOptional, kMinus
};

struct OrderKey {
  std::string variable;
  bool descending = false;
};

struct Query {
  rdf::PrefixMap prefixes;
  bool distinct = false;
  bool select_all = false;
  std::vector<std::string> projection;
  std::vector<Element> where;
  std::vector<OrderKey> order_by;
};

// Every variable name in the pattern, in order of first appearance.
std::vector<std::string> pattern_variables(const std::vector<Element>& group);

}  // namespace plexflow::query

#endif  // PLEXFLOW_QUERY_AST_HPP_
