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

#ifndef PLEXFLOW_RDF_GRAPH_HPP_
#define PLEXFLOW_RDF_GRAPH_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "plexflow/rdf/term.hpp"

namespace plexflow::rdf {

struct Triple {
  // Throws TermError if the subject is a literal or the predicate is not an
  // IRI.
  Triple(Term s, Term p, Term o);

  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// A triple pattern; std::nullopt is a wildcard.
struct TriplePattern {
  std::optional<Term> subject;
  std::optional<Term> predicate;
  std::optional<Term> object;
};

/// Set of triples with subject-, predicate- and object-major indexes.
///
/// Terms are interned to dense ids. The graph is mutable until freeze();
/// afterwards every mutator throws std::logic_error and the graph may be
/// shared between reader threads.
class Graph {
 public:
  using TermId = std::uint32_t;
  using IdTriple = std::array<TermId, 3>;  // subject, predicate, object

  Graph() = default;

  // Returns true if the triple was not already present.
  bool insert(const Triple& t);
  bool insert(const Term& s, const Term& p, const Term& o) {
    return insert(Triple(s, p, o));
  }
  void insert_all(const Graph& other);
  // Returns true if the triple was present.
  bool erase(const Triple& t);

  bool contains(const Triple& t) const;
  std::size_t size() const noexcept { return spo_.size(); }
  bool empty() const noexcept { return spo_.empty(); }

  // Matching triples in canonical (subject, predicate, object) order.
  std::vector<Triple> match(const TriplePattern& pattern) const;
  // All triples in canonical order.
  std::vector<Triple> triples() const;

  // First object of (s, p, *) in canonical order, if any.
  std::optional<Term> object_of(const Term& s, const Term& p) const;
  std::vector<Term> objects_of(const Term& s, const Term& p) const;
  std::vector<Term> subjects_of(const Term& p, const Term& o) const;

  // Blank node labels that occur anywhere in the graph.
  std::set<std::string> blank_labels() const;
  // A blank node whose label does not occur in the graph yet.
  Term fresh_blank();

  void freeze() noexcept { frozen_ = true; }
  bool frozen() const noexcept { return frozen_; }

  // Id-level access for index-backed evaluators. Ids are stable for the
  // lifetime of the graph and are not comparable across graphs.
  std::optional<TermId> lookup(const Term& t) const;
  const Term& term(TermId id) const { return terms_.at(id); }

  // Calls fn(IdTriple) for each triple agreeing with the bound positions,
  // using the most selective index. Order is index order, not canonical.
  template <typename Fn>
  void for_each(std::optional<TermId> s, std::optional<TermId> p,
                std::optional<TermId> o, Fn&& fn) const;

  // Set equality.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  TermId intern(const Term& t);
  void check_mutable() const;
  static Triple materialize(const Graph& g, const IdTriple& t);

  template <typename Fn>
  static void scan_prefix(const std::set<IdTriple>& index, TermId a,
                          std::optional<TermId> b, Fn&& fn);

  std::vector<Term> terms_;
  std::unordered_map<std::string, TermId> ids_;
  std::set<IdTriple> spo_;
  std::set<IdTriple> pos_;  // stored as (p, o, s)
  std::set<IdTriple> osp_;  // stored as (o, s, p)
  std::uint64_t blank_counter_ = 0;
  bool frozen_ = false;
};

template <typename Fn>
void Graph::scan_prefix(const std::set<IdTriple>& index, TermId a,
                        std::optional<TermId> b, Fn&& fn) {
  auto it = index.lower_bound({a, b.value_or(0), 0});
  for (; it != index.end(); ++it) {
    const IdTriple& k = *it;
    if (k[0] != a || (b && k[1] != *b)) break;
    fn(k);
  }
}

template <typename Fn>
void Graph::for_each(std::optional<TermId> s, std::optional<TermId> p,
                     std::optional<TermId> o, Fn&& fn) const {
  if (s && p && o) {
    if (spo_.count({*s, *p, *o}) != 0) fn(IdTriple{*s, *p, *o});
  } else if (s && o) {
    scan_prefix(osp_, *o, s, [&](const IdTriple& k) {
      fn(IdTriple{k[1], k[2], k[0]});
    });
  } else if (s) {
    scan_prefix(spo_, *s, p, [&](const IdTriple& k) { fn(k); });
  } else if (p) {
    scan_prefix(pos_, *p, o, [&](const IdTriple& k) {
      fn(IdTriple{k[2], k[0], k[1]});
    });
  } else if (o) {
    scan_prefix(osp_, *o, std::nullopt, [&](const IdTriple& k) {
      fn(IdTriple{k[1], k[2], k[0]});
    });
  } else {
    for (const IdTriple& k : spo_) fn(k);
  }
}

}  // namespace plexflow::rdf

#endif  // PLEXFLOW_RDF_GRAPH_HPP_
