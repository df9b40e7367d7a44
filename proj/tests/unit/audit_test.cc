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

#include "plexflow/audit/audit.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "plexflow/fixture/openpredict.hpp"
#include "plexflow/vocab/terms.hpp"

namespace plexflow::audit {
namespace {

namespace v = plexflow::vocab;
using rdf::Term;

rdf::Graph fixture_copy() {
  static const rdf::Graph g = fixture::generate_fixture();
  rdf::Graph copy;
  for (const rdf::Triple& t : g.triples()) copy.insert(t.subject, t.predicate, t.object);
  return copy;
}

std::map<std::string, Status> statuses(const AuditReport& r) {
  std::map<std::string, Status> out;
  for (const RuleResult& res : r.results) out[res.rule.id] = res.status;
  return out;
}

TEST(AuditTest, RuleIdsAreUnique) {
  std::set<std::string> ids;
  for (const AuditRule& r : audit_rules()) EXPECT_TRUE(ids.insert(r.id).second) << r.id;
  EXPECT_EQ(ids.size(), 11u);
}

TEST(AuditTest, FixturePasses) {
  const AuditReport r = audit(fixture_copy());
  for (const RuleResult& res : r.results) {
    if (res.rule.machine_checkable) {
      EXPECT_EQ(res.status, Status::kPass) << res.rule.id;
    } else {
      EXPECT_EQ(res.status, Status::kNotMachineCheckable) << res.rule.id;
    }
  }
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.warning_count(), 0u);
}

TEST(AuditTest, MissingDownloadUrlFailsOnlyF3) {
  rdf::Graph g = fixture_copy();
  const Term dist = Term::iri(std::string(v::opredict::kBase) +
                              "Distribution_release-4-kegg-kegg-drug.nq.gz");
  const Term url = Term::iri(v::dcat::kDownloadURL);
  for (const Term& o : g.objects_of(dist, url)) g.erase({dist, url, o});
  const AuditReport before = audit(fixture_copy());
  const AuditReport after = audit(g);
  auto b = statuses(before);
  auto a = statuses(after);
  EXPECT_EQ(a.at("F3"), Status::kFail);
  EXPECT_EQ(after.result("F3").offenders, std::vector<Term>{dist});
  a.erase("F3");
  b.erase("F3");
  EXPECT_EQ(a, b);
}

TEST(AuditTest, UnregisteredPredicateWarns) {
  rdf::Graph g = fixture_copy();
  const Term p = Term::iri("http://example.org/unregistered#p");
  g.insert(Term::iri(fixture::kMainProtocolV01), p, Term::literal("x"));
  const AuditReport r = audit(g);
  EXPECT_EQ(r.result("I1").status, Status::kFail);
  EXPECT_EQ(r.result("I1").offenders, std::vector<Term>{p});
  EXPECT_EQ(r.warning_count(), 1u);
  EXPECT_TRUE(r.ok());
}

TEST(AuditTest, BlankDatasetAndBadScheme) {
  rdf::Graph g;
  const Term ds = Term::blank("d1");
  const Term dist = Term::iri("http://example.org/dist");
  g.insert(ds, Term::iri(v::rdf::kType), Term::iri(v::dcat::kDataset));
  g.insert(ds, Term::iri(v::dcat::kDistributionProp), dist);
  g.insert(dist, Term::iri(v::rdf::kType), Term::iri(v::dcat::kDistribution));
  g.insert(dist, Term::iri(v::dcat::kDownloadURL), Term::literal("file:///tmp/data.tsv"));
  const AuditReport r = audit(g);
  EXPECT_EQ(r.result("F1").offenders, std::vector<Term>{ds});
  EXPECT_EQ(r.result("A1.1").offenders, std::vector<Term>{dist});
  EXPECT_EQ(r.result("I2").offenders, std::vector<Term>{dist});
  EXPECT_EQ(r.result("I3").offenders, std::vector<Term>{dist});
  EXPECT_EQ(r.result("R1.1").offenders, std::vector<Term>{ds});
  EXPECT_FALSE(r.ok());
}

TEST(AuditTest, ReportIsByteIdentical) {
  EXPECT_EQ(audit(fixture_copy()).to_json(), audit(fixture_copy()).to_json());
}

// Removing edges a rule requires never turns that rule from failing to passing.
TEST(AuditTest, MonotoneUnderRequiredEdgeRemoval) {
  const std::map<std::string, std::vector<std::string_view>> required = {
      {"F2", {v::rdfs::kLabel, v::dc::kDescription}},
      {"F3", {v::dcat::kDownloadURL}},
      {"I2", {v::dcat::kMediaType}},
      {"I3", {v::prov::kEntity}},
      {"R1.1", {v::dc::kLicense}},
      {"R1.2", {v::dc::kCreator, v::dc::kCreated}},
  };
  std::mt19937 rng(11);
  for (const auto& [id, predicates] : required) {
    rdf::Graph g = fixture_copy();
    std::vector<rdf::Triple> candidates;
    for (const rdf::Triple& t : g.triples()) {
      for (std::string_view p : predicates) {
        if (t.predicate.value() == p) candidates.push_back(t);
      }
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    bool failing = false;
    std::size_t offenders = 0;
    for (std::size_t i = 0; i < candidates.size() && i < 40; ++i) {
      g.erase(candidates[i]);
      const RuleResult r = audit(g).result(id);
      if (failing) EXPECT_EQ(r.status, Status::kFail) << id;
      EXPECT_GE(r.offenders.size(), offenders) << id;
      failing = r.status == Status::kFail;
      offenders = r.offenders.size();
    }
    EXPECT_TRUE(failing) << id;
  }
}

}  // namespace
}  // namespace plexflow::audit
