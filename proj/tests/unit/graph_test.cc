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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "plexflow/rdf/turtle.hpp"
#include "plexflow/rdf/io.hpp"
#include "support/random_graph.hpp"

namespace plexflow::rdf {
namespace {

Term iri(const std::string& s) { return Term::iri(s); }

TEST(GraphTest, InsertIsIdempotent) {
  Graph g;
  EXPECT_TRUE(g.insert(iri("urn:a"), iri("urn:p"), iri("urn:b")));
  EXPECT_FALSE(g.insert(iri("urn:a"), iri("urn:p"), iri("urn:b")));
  EXPECT_EQ(g.size(), 1u);
}

TEST(GraphTest, TripleRejectsLiteralSubjectAndNonIriPredicate) {
  EXPECT_THROW(Triple(Term::literal("x"), iri("urn:p"), iri("urn:o")),
               TermError);
  EXPECT_THROW(Triple(iri("urn:s"), Term::blank("p"), iri("urn:o")),
               TermError);
}

TEST(GraphTest, EraseAndContains) {
  Graph g;
  Triple t(iri("urn:a"), iri("urn:p"), Term::literal("v"));
  g.insert(t);
  EXPECT_TRUE(g.contains(t));
  EXPECT_TRUE(g.erase(t));
  EXPECT_FALSE(g.contains(t));
  EXPECT_FALSE(g.erase(t));
  EXPECT_TRUE(g.empty());
}

TEST(GraphTest, FrozenGraphRejectsMutation) {
  Graph g;
  g.insert(iri("urn:a"), iri("urn:p"), iri("urn:b"));
  g.freeze();
  EXPECT_THROW(g.insert(iri("urn:a"), iri("urn:p"), iri("urn:c")),
               std::logic_error);
  EXPECT_EQ(g.match({}).size(), 1u);
}

TEST(GraphTest, MatchSixGeneratedArtifacts) {
  Graph g = load_graph_file(std::string(PLEXFLOW_TEST_DATA_DIR) +
                            "/model_evaluation.ttl");
  const std::string base = "https://w3id.org/fair/openpredict/";
  TriplePattern p;
  p.subject = iri(base +
                  "Activity_Model_preparation_train_and_evaluation_"
                  "Execution_1546302862");
  p.predicate = iri("http://www.w3.org/ns/prov#generated");
  EXPECT_EQ(g.match(p).size(), 6u);
  EXPECT_EQ(g.match({}).size(), g.size());
}

TEST(GraphTest, MatchAgreesWithFullScan) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 120; ++round) {
    Graph g = testing::random_ground_graph(rng, 200, 10);
    std::vector<Triple> all = g.triples();
    if (all.empty()) continue;
    const Triple& probe = all[rng() % all.size()];
    for (int mask = 0; mask < 8; ++mask) {
      TriplePattern p;
      if (mask & 1) p.subject = probe.subject;
      if (mask & 2) p.predicate = probe.predicate;
      if (mask & 4) p.object = probe.object;
      std::vector<Triple> expected;
      for (const Triple& t : all) {
        if ((!p.subject || t.subject == *p.subject) &&
            (!p.predicate || t.predicate == *p.predicate) &&
            (!p.object || t.object == *p.object)) {
          expected.push_back(t);
        }
      }
      EXPECT_EQ(g.match(p), expected) << "mask " << mask;
    }
    // A term absent from the graph matches nothing.
    TriplePattern missing;
    missing.subject = iri("urn:absent");
    EXPECT_TRUE(g.match(missing).empty());
  }
}

TEST(GraphTest, MatchIsCanonicallySorted) {
  std::mt19937_64 rng(11);
  Graph g = testing::random_ground_graph(rng, 150);
  std::vector<Triple> all = g.match({});
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(GraphTest, ObjectAccessors) {
  Graph g;
  g.insert(iri("urn:s"), iri("urn:p"), iri("urn:b"));
  g.insert(iri("urn:s"), iri("urn:p"), iri("urn:a"));
  EXPECT_EQ(g.object_of(iri("urn:s"), iri("urn:p")), iri("urn:a"));
  EXPECT_EQ(g.objects_of(iri("urn:s"), iri("urn:p")).size(), 2u);
  EXPECT_EQ(g.subjects_of(iri("urn:p"), iri("urn:b")),
            std::vector<Term>{iri("urn:s")});
  EXPECT_FALSE(g.object_of(iri("urn:x"), iri("urn:p")).has_value());
}

TEST(GraphTest, FreshBlankAvoidsExistingLabels) {
  Graph g;
  g.insert(Term::blank("b0"), iri("urn:p"), Term::blank("b1"));
  Term fresh = g.fresh_blank();
  EXPECT_FALSE(g.blank_labels().count(fresh.value()));
}

}  // namespace
}  // namespace plexflow::rdf
