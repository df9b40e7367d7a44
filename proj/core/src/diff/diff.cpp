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

#include "plexflow/diff/diff.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "json.hpp"

namespace plexflow::diff {
namespace {

using workflow::StepKind;
using workflow::WorkflowModel;

struct Partition {
  std::set<Term> removed;
  std::set<TermPair> changed;
  std::set<Term> added;
};

// `revision_of` maps a member of `after` to what it revises, if anything.
template <typename RevisionOf>
Partition partition(const std::set<Term>& before, const std::set<Term>& after,
                    RevisionOf revision_of) {
  Partition p;
  std::set<Term> olds;
  std::set<Term> news;
  for (const Term& n : after) {
    std::optional<Term> old = revision_of(n);
    if (old && before.count(n) == 0 && before.count(*old) != 0 && after.count(*old) == 0) {
      p.changed.emplace(*old, n);
      olds.insert(*old);
      news.insert(n);
    }
  }
  for (const Term& o : before) {
    if (after.count(o) == 0 && olds.count(o) == 0) p.removed.insert(o);
  }
  for (const Term& n : after) {
    if (before.count(n) == 0 && news.count(n) == 0) p.added.insert(n);
  }
  return p;
}

nlohmann::json iri_array(const std::set<Term>& terms) {
  nlohmann::json out = nlohmann::json::array();
  for (const Term& t : terms) out.push_back(t.value());
  return out;
}

nlohmann::json pair_array(const std::set<TermPair>& pairs, const char* first,
                          const char* second) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [a, b] : pairs) out.push_back({{first, a.value()}, {second, b.value()}});
  return out;
}

}  // namespace

bool DiffReport::empty() const {
  return removed_instructions.empty() && changed_instructions.empty() &&
         added_instructions.empty() && automatized_steps.empty() && removed_datasets.empty() &&
         changed_datasets.empty() && added_datasets.empty();
}

std::string DiffReport::to_json() const {
  nlohmann::json doc = {
      {"from", from.value()},
      {"to", to.value()},
      {"instructions",
       {{"removed", iri_array(removed_instructions)},
        {"changed", pair_array(changed_instructions, "old", "new")},
        {"added", iri_array(added_instructions)}}},
      {"datasets",
       {{"removed", iri_array(removed_datasets)},
        {"changed", pair_array(changed_datasets, "old", "new")},
        {"added", iri_array(added_datasets)}}},
      {"automatized_steps", pair_array(automatized_steps, "manual", "script")},
      {"counts",
       {{"removed", removed_instructions.size()},
        {"changed", changed_instructions.size()},
        {"added", added_instructions.size()},
        {"automatized", automatized_steps.size()},
        {"datasets_removed", removed_datasets.size()},
        {"datasets_changed", changed_datasets.size()},
        {"datasets_added", added_datasets.size()}}},
  };
  return doc.dump(2) + "\n";
}

DiffReport diff_instructions(const WorkflowModel& a, const WorkflowModel& b) {
  Partition p = partition(a.used_instructions(), b.used_instructions(),
                          [&](const Term& t) { return b.instructions.at(t).revision_of; });
  DiffReport r;
  r.from = a.workflow.iri;
  r.to = b.workflow.iri;
  r.removed_instructions = std::move(p.removed);
  r.changed_instructions = std::move(p.changed);
  r.added_instructions = std::move(p.added);
  return r;
}

std::set<TermPair> automatized_steps(const WorkflowModel& a, const WorkflowModel& b) {
  auto steps_by_instruction = [](const WorkflowModel& m, StepKind kind) {
    std::multimap<Term, Term> out;
    for (const auto& [iri, step] : m.steps) {
      if (step.kinds.count(kind) == 0) continue;
      for (const Term& i : step.described_by) out.emplace(i, iri);
    }
    return out;
  };
  const auto manual = steps_by_instruction(a, StepKind::kManual);
  const auto script = steps_by_instruction(b, StepKind::kScript);
  std::set<TermPair> out;
  for (const auto& [old_i, new_i] : diff_instructions(a, b).changed_instructions) {
    auto [m_lo, m_hi] = manual.equal_range(old_i);
    auto [s_lo, s_hi] = script.equal_range(new_i);
    for (auto m = m_lo; m != m_hi; ++m) {
      for (auto s = s_lo; s != s_hi; ++s) out.emplace(m->second, s->second);
    }
  }
  return out;
}

DiffReport diff_datasets(const WorkflowModel& a, const WorkflowModel& b) {
  Partition p = partition(a.used_distributions(), b.used_distributions(),
                          [&](const Term& t) { return b.distributions.at(t).revision_of; });
  DiffReport r;
  r.from = a.workflow.iri;
  r.to = b.workflow.iri;
  r.removed_datasets = std::move(p.removed);
  r.changed_datasets = std::move(p.changed);
  r.added_datasets = std::move(p.added);
  return r;
}

DiffReport diff(const WorkflowModel& a, const WorkflowModel& b) {
  DiffReport r = diff_instructions(a, b);
  r.automatized_steps = automatized_steps(a, b);
  DiffReport d = diff_datasets(a, b);
  r.removed_datasets = std::move(d.removed_datasets);
  r.changed_datasets = std::move(d.changed_datasets);
  r.added_datasets = std::move(d.added_datasets);
  return r;
}

DiffReport diff(const rdf::Graph& g, const Term& a, const Term& b) {
  const std::vector<Term> known = workflow::find_workflows(g);
  for (const Term& wf : {a, b}) {
    if (!std::binary_search(known.begin(), known.end(), wf)) {
      throw DiffError("workflow not found: " + wf.value());
    }
  }
  return diff(workflow::load_workflow(g, a), workflow::load_workflow(g, b));
}

}  // namespace plexflow::diff
