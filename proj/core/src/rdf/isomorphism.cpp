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

#include "plexflow/rdf/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace plexflow::rdf {
namespace {

// Per-blank fingerprint: sorted (role, predicate, ground neighbour) entries.
// Blank neighbours are recorded as "_" so the fingerprint is label-free.
using Signature = std::vector<std::string>;

std::map<std::string, Signature> signatures(const std::vector<Triple>& ts) {
  std::map<std::string, Signature> out;
  auto label_or = [](const Term& t) {
    return t.is_blank() ? std::string("_") : t.ntriples();
  };
  for (const Triple& t : ts) {
    if (t.subject.is_blank()) {
      out[t.subject.value()].push_back("s " + t.predicate.ntriples() + " " +
                                       label_or(t.object));
    }
    if (t.object.is_blank()) {
      out[t.object.value()].push_back("o " + t.predicate.ntriples() + " " +
                                      label_or(t.subject));
    }
  }
  for (auto& [label, sig] : out) std::sort(sig.begin(), sig.end());
  return out;
}

class Matcher {
 public:
  Matcher(std::vector<Triple> left, std::set<Triple> right)
      : left_(std::move(left)), right_(std::move(right)) {}

  bool run(const std::map<std::string, Signature>& sig_a,
           const std::map<std::string, Signature>& sig_b) {
    for (const auto& [label, sig] : sig_a) {
      std::vector<std::string> cands;
      for (const auto& [other, other_sig] : sig_b) {
        if (other_sig == sig) cands.push_back(other);
      }
      if (cands.empty()) return false;
      order_.push_back(label);
      candidates_[label] = std::move(cands);
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](const std::string& x, const std::string& y) {
                       return candidates_[x].size() < candidates_[y].size();
                     });
    return search(0);
  }

 private:
  Term map_term(const Term& t) const {
    if (!t.is_blank()) return t;
    return Term::blank(mapping_.at(t.value()));
  }

  bool assigned(const Term& t) const {
    return !t.is_blank() || mapping_.count(t.value()) != 0;
  }

  bool consistent(const std::string& label) const {
    for (const Triple& t : left_) {
      bool touches = (t.subject.is_blank() && t.subject.value() == label) ||
                     (t.object.is_blank() && t.object.value() == label);
      if (!touches || !assigned(t.subject) || !assigned(t.object)) continue;
      Triple image(map_term(t.subject), t.predicate, map_term(t.object));
      if (right_.count(image) == 0) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::string& label = order_[depth];
    for (const std::string& cand : candidates_[label]) {
      if (used_.count(cand) != 0) continue;
      mapping_[label] = cand;
      used_.insert(cand);
      if (consistent(label) && search(depth + 1)) return true;
      used_.erase(cand);
      mapping_.erase(label);
    }
    return false;
  }

  std::vector<Triple> left_;
  std::set<Triple> right_;
  std::vector<std::string> order_;
  std::map<std::string, std::vector<std::string>> candidates_;
  std::map<std::string, std::string> mapping_;
  std::set<std::string> used_;
};

bool is_ground(const Triple& t) {
  return !t.subject.is_blank() && !t.object.is_blank();
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  std::set<std::string> blanks_a = a.blank_labels();
  std::set<std::string> blanks_b = b.blank_labels();
  if (blanks_a.size() + blanks_b.size() > kIsomorphismBlankBudget) {
    throw BlankBudgetError(
        "isomorphism check refused: " +
        std::to_string(blanks_a.size() + blanks_b.size()) +
        " blank nodes exceed the budget of " +
        std::to_string(kIsomorphismBlankBudget));
  }
  if (a.size() != b.size() || blanks_a.size() != blanks_b.size()) return false;

  std::vector<Triple> open_a;
  std::set<Triple> open_b;
  for (const Triple& t : a.triples()) {
    if (is_ground(t)) {
      if (!b.contains(t)) return false;
    } else {
      open_a.push_back(t);
    }
  }
  for (const Triple& t : b.triples()) {
    if (!is_ground(t)) open_b.insert(t);
  }
  if (open_a.size() != open_b.size()) return false;
  if (open_a.empty()) return true;

  std::vector<Triple> list_b(open_b.begin(), open_b.end());
  Matcher matcher(open_a, std::move(open_b));
  return matcher.run(signatures(open_a), signatures(list_b));
}

}  // namespace plexflow::rdf
