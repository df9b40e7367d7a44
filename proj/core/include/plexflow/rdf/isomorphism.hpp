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

#ifndef PLEXFLOW_RDF_ISOMORPHISM_HPP_
#define PLEXFLOW_RDF_ISOMORPHISM_HPP_

#include <cstddef>

#include "plexflow/rdf/graph.hpp"
#include "plexflow/util/error.hpp"

namespace plexflow::rdf {

// Largest combined number of distinct blank nodes isomorphic() accepts.
inline constexpr std::size_t kIsomorphismBlankBudget = 20;

class BlankBudgetError : public Error {
 public:
  using Error::Error;
};

/// True iff some bijection between the blank nodes of `a` and `b` maps the
/// triples of `a` exactly onto the triples of `b`. Backtracking search;
/// throws BlankBudgetError when a and b together hold more than
/// kIsomorphismBlankBudget blank nodes.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace plexflow::rdf

#endif  // PLEXFLOW_RDF_ISOMORPHISM_HPP_
