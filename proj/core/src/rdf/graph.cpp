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

#include "plexflow/rdf/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace plexflow::rdf {

Triple::Triple(Term s, Term p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (subject.is_literal()) {
    throw TermError("triple subject cannot be a literal: " +
                    subject.ntriples());
  }
  if (!predicate.is_iri()) {
    throw TermError("triple predicate must be an IRI: " +
                    predicate.ntriples());
  }
}

void Graph::check_mutable() const {
  if (frozen_) throw std::logic_error("graph is frozen");
}

Graph::TermId Graph::intern(const Term& t) {
  auto [it, inserted] = ids_.try_emplace(t.ntriples(), 0);
  if (inserted) {
    if (terms_.size() >= std::numeric_limits<TermId>::max()) {
      throw Error("term dictionary overflow");
    }
    it->second = static_cast<TermId>(terms_.size());
    terms_.push_back(t);
  }
  return it->second;
}

std::optional<Graph::TermId> Graph::lookup(const Term& t) const {
  auto it = ids_.find(t.ntriples());
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

bool Graph::insert(const Triple& t) {
  check_mutable();
  TermId s = intern(t.subject);
  TermId p = intern(t.predicate);
  TermId o = intern(t.object);
  if (!spo_.insert({s, p, o}).second) return false;
  pos_.insert({p, o, s});
  osp_.insert({o, s, p});
  return true;
}

void Graph::insert_all(const Graph& other) {
  for (const IdTriple& k : other.spo_) {
    insert(materialize(other, k));
  }
}

bool Graph::erase(const Triple& t) {
  check_mutable();
  auto s = lookup(t.subject);
  auto p = lookup(t.predicate);
  auto o = lookup(t.object);
  if (!s || !p || !o) return false;
  if (spo_.erase({*s, *p, *o}) == 0) return false;
  pos_.erase({*p, *o, *s});
  osp_.erase({*o, *s, *p});
  return true;
}

bool Graph::contains(const Triple& t) const {
  auto s = lookup(t.subject);
  auto p = lookup(t.predicate);
  auto o = lookup(t.object);
  return s && p && o && spo_.count({*s, *p, *o}) != 0;
}

Triple Graph::materialize(const Graph& g, const IdTriple& t) {
  return Triple(g.terms_[t[0]], g.terms_[t[1]], g.terms_[t[2]]);
}

std::vector<Triple> Graph::match(const TriplePattern& pattern) const {
  std::optional<TermId> s, p, o;
  // A bound term absent from the dictionary cannot match anything.
  if (pattern.subject && !(s = lookup(*pattern.subject))) return {};
  if (pattern.predicate && !(p = lookup(*pattern.predicate))) return {};
  if (pattern.object && !(o = lookup(*pattern.object))) return {};
  std::vector<Triple> out;
  for_each(s, p, o, [&](const IdTriple& k) {
    out.push_back(materialize(*this, k));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triple> Graph::triples() const { return match({}); }

std::optional<Term> Graph::object_of(const Term& s, const Term& p) const {
  auto objects = objects_of(s, p);
  if (objects.empty()) return std::nullopt;
  return objects.front();
}

std::vector<Term> Graph::objects_of(const Term& s, const Term& p) const {
  std::vector<Term> out;
  for (Triple& t : match({s, p, std::nullopt})) {
    out.push_back(std::move(t.object));
  }
  return out;
}

std::vector<Term> Graph::subjects_of(const Term& p, const Term& o) const {
  std::vector<Term> out;
  for (Triple& t : match({std::nullopt, p, o})) {
    out.push_back(std::move(t.subject));
  }
  return out;
}

std::set<std::string> Graph::blank_labels() const {
  std::set<std::string> labels;
  for (const IdTriple& k : spo_) {
    for (TermId id : {k[0], k[2]}) {
      if (terms_[id].is_blank()) labels.insert(terms_[id].value());
    }
  }
  return labels;
}

Term Graph::fresh_blank() {
  check_mutable();
  for (;;) {
    Term candidate = Term::blank("b" + std::to_string(blank_counter_++));
    if (!lookup(candidate)) {
      intern(candidate);
      return candidate;
    }
  }
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  for (const Graph::IdTriple& k : a.spo_) {
    if (!b.contains(Graph::materialize(a, k))) return false;
  }
  return true;
}

}  // namespace plexflow::rdf
