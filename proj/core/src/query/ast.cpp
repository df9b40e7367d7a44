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

#include "plexflow/query/ast.hpp"

#include <algorithm>

namespace plexflow::query {
namespace {

void add(std::vector<std::string>& out, const std::string& name) {
  if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
}

void add_term(std::vector<std::string>& out, const PatternTerm& t) {
  if (const auto* v = std::get_if<Variable>(&t)) add(out, v->name);
}

void collect(const std::vector<Element>& group, std::vector<std::string>& out) {
  for (const Element& e : group) {
    switch (e.kind) {
      case ElementKind::kTriple:
        add_term(out, e.triple->subject);
        add_term(out, e.triple->predicate);
        add_term(out, e.triple->object);
        break;
      case ElementKind::kValues:
        add(out, e.values->variable);
        break;
      case ElementKind::kOptional:
        collect(e.group, out);
        break;
      case ElementKind::kFilter:
      case ElementKind::kMinus:
        // Variables only mentioned here are never bound in the result.
        break;
    }
  }
}

}  // namespace

std::vector<std::string> pattern_variables(const std::vector<Element>& group) {
  std::vector<std::string> out;
  collect(group, out);
  return out;
}

}  // namespace plexflow::query
