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

#include "plexflow/rdf/ntriples.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "plexflow/rdf/io.hpp"
#include "plexflow/rdf/turtle.hpp"
#include "support/random_graph.hpp"

namespace plexflow::rdf {
namespace {

TEST(NTriplesTest, MinimalStatement) {
  Graph g = parse_ntriples("<urn:a> <urn:p> <urn:b> .");
  ASSERT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.contains(
      Triple(Term::iri("urn:a"), Term::iri("urn:p"), Term::iri("urn:b"))));
}

TEST(NTriplesTest, EmptyInputAndComments) {
  EXPECT_TRUE(parse_ntriples("").empty());
  EXPECT_TRUE(parse_ntriples("# only a comment\n\n   \n").empty());
  Graph g = parse_ntriples(
      "<urn:a> <urn:p> \"x\" . # trailing comment\r\n"
      "_:b1 <urn:p> \"y\"@en .\n"
      "_:b1 <urn:q> \"1\"^^<http://www.w3.org/2001/XMLSchema#integer>.\n");
  EXPECT_EQ(g.size(), 3u);
}

TEST(NTriplesTest, ModelEvaluationFragmentHasFourteenStatements) {
  Graph g = load_graph_file(std::string(PLEXFLOW_TEST_DATA_DIR) +
                            "/model_evaluation.ttl");
  Graph reparsed = parse_ntriples(serialize_ntriples(g));
  EXPECT_EQ(reparsed.size(), 14u);
  EXPECT_EQ(reparsed, g);
}

TEST(NTriplesTest, ErrorsCarryLineNumbers) {
  try {
    parse_ntriples("<urn:a> <urn:p> <urn:b> .\n<urn:a> <urn:p> .\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_ntriples("<a> <urn:p> <urn:b> ."), ParseError);
  EXPECT_THROW(parse_ntriples("<urn:a> <urn:p> \"bad \\q\" ."), ParseError);
  EXPECT_THROW(parse_ntriples("<urn:a> <urn:p> \"x\\uD800\" ."), ParseError);
  EXPECT_THROW(parse_ntriples("<urn:a> <urn:p> <urn:b>"), ParseError);
  EXPECT_THROW(parse_ntriples("<urn:a> <urn:p> <urn:b> . <urn:c>"),
               ParseError);
  EXPECT_THROW(parse_ntriples("\"lit\" <urn:p> <urn:b> ."), ParseError);
  EXPECT_THROW(parse_ntriples("_:a-b <urn:p> <urn:b> ."), ParseError);
}

TEST(NTriplesTest, EscapesDecode) {
  Graph g = parse_ntriples(
      "<urn:a> <urn:p> \"tab\\there \\u00E9 \\U0001F600 \\\"q\\\"\" .\n");
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.triples()[0].object.value(),
            "tab\there \xC3\xA9 \xF0\x9F\x98\x80 \"q\"");
}

TEST(NTriplesTest, NQuadsGraphLabelDropped) {
  Graph g = parse_nquads_as_triples(
      "<urn:a> <urn:p> <urn:b> <urn:g1> .\n"
      "<urn:a> <urn:p> <urn:b> <urn:g2> .\n"
      "<urn:a> <urn:p> <urn:c> .\n");
  EXPECT_EQ(g.size(), 2u);
}

TEST(NTriplesTest, SerializationIsCanonical) {
  EXPECT_EQ(serialize_ntriples(Graph{}), "");
  Graph g = parse_ntriples(
      "<urn:b> <urn:p> \"x\" .\n<urn:a> <urn:p> \"line\\nbreak\" .\n");
  EXPECT_EQ(serialize_ntriples(g),
            "<urn:a> <urn:p> \"line\\nbreak\" .\n"
            "<urn:b> <urn:p> \"x\" .\n");
}

TEST(NTriplesTest, InsertionOrderIndependence) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 30; ++round) {
    Graph g = testing::random_ground_graph(rng, 80);
    std::vector<Triple> ts = g.triples();
    std::shuffle(ts.begin(), ts.end(), rng);
    Graph h;
    for (const Triple& t : ts) h.insert(t);
    EXPECT_EQ(serialize_ntriples(g), serialize_ntriples(h));
  }
}

TEST(NTriplesTest, RoundTripRandomGroundGraphs) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 100; ++round) {
    Graph g = testing::random_ground_graph(rng, 200);
    EXPECT_EQ(parse_ntriples(serialize_ntriples(g)), g);
  }
}

}  // namespace
}  // namespace plexflow::rdf
