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

#include "plexflow/rdf/turtle.hpp"

#include <gtest/gtest.h>

#include "plexflow/rdf/io.hpp"
#include "plexflow/rdf/ntriples.hpp"

namespace plexflow::rdf {
namespace {

const std::string kOpredict = "https://w3id.org/fair/openpredict/";

Graph load(const std::string& name) {
  return load_graph_file(std::string(PLEXFLOW_TEST_DATA_DIR) + "/" + name);
}

TEST(TurtleTest, SinglePrefixedTriple) {
  Graph g = parse_turtle("@prefix ex: <urn:e#> . ex:s ex:p ex:o .");
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.triples()[0].subject, Term::iri("urn:e#s"));
}

TEST(TurtleTest, VersionRecordsParse) {
  Graph g = load("main_protocol_versions.ttl");
  TriplePattern v02;
  v02.subject = Term::iri(kOpredict + "Plan_Main_Protocol_v02");
  std::vector<Triple> ts = g.match(v02);
  EXPECT_EQ(ts.size(), 12u);
  EXPECT_TRUE(g.contains(Triple(
      Term::iri(kOpredict + "Plan_Main_Protocol_v02"),
      Term::iri("http://www.w3.org/ns/prov#wasRevisionOf"),
      Term::iri(kOpredict + "Plan_Main_Protocol_v01"))));
  EXPECT_EQ(g.size(), 23u);
}

TEST(TurtleTest, DrugbankFragment) {
  Graph g = load("drugbank_download.ttl");
  EXPECT_EQ(g.size(), 23u);
  EXPECT_TRUE(g.contains(Triple(
      Term::iri(kOpredict + "Usage_Fetch_download_Drugbank_dataset_to_variable"),
      Term::iri("http://www.w3.org/ns/prov#entity"),
      Term::iri(kOpredict + "Distribution_release-4-drugbank-drugbank.nq.gz"))));
}

TEST(TurtleTest, SugarEqualsExpandedForm) {
  Graph sugar = parse_turtle(
      "PREFIX ex: <urn:e#>\n"
      "ex:s a ex:C ; ex:p ex:o1 , ex:o2 ; ex:q \"v\"@EN ;\n"
      "  ex:r 42, -1.5, 2e3, true .\n");
  Graph expanded = parse_ntriples(
      "<urn:e#s> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <urn:e#C> .\n"
      "<urn:e#s> <urn:e#p> <urn:e#o1> .\n"
      "<urn:e#s> <urn:e#p> <urn:e#o2> .\n"
      "<urn:e#s> <urn:e#q> \"v\"@en .\n"
      "<urn:e#s> <urn:e#r> \"42\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
      "<urn:e#s> <urn:e#r> \"-1.5\"^^<http://www.w3.org/2001/XMLSchema#decimal> .\n"
      "<urn:e#s> <urn:e#r> \"2e3\"^^<http://www.w3.org/2001/XMLSchema#double> .\n"
      "<urn:e#s> <urn:e#r> \"true\"^^<http://www.w3.org/2001/XMLSchema#boolean> .\n");
  EXPECT_EQ(sugar, expanded);
}

TEST(TurtleTest, LongStringsAndEscapes) {
  Graph g = parse_turtle(
      "@prefix ex: <urn:e#> .\n"
      "ex:s ex:p \"\"\"multi\nline \"quoted\" \"\"\" .\n"
      "ex:s ex:q 'single\\'s' .\n"
      "ex:s ex:r ex:local\\-name%41 .\n");
  EXPECT_EQ(g.object_of(Term::iri("urn:e#s"), Term::iri("urn:e#p"))->value(),
            "multi\nline \"quoted\" ");
  EXPECT_EQ(g.object_of(Term::iri("urn:e#s"), Term::iri("urn:e#q"))->value(),
            "single's");
  EXPECT_EQ(*g.object_of(Term::iri("urn:e#s"), Term::iri("urn:e#r")),
            Term::iri("urn:e#local-name%41"));
}

TEST(TurtleTest, PredeclaredPrefixes) {
  Graph g = parse_turtle("ex:s ex:p _:b1 .", {{"ex", "urn:e#"}});
  EXPECT_EQ(g.size(), 1u);
}

TEST(TurtleTest, UnknownPrefixIsParseError) {
  try {
    parse_turtle("@prefix ex: <urn:e#> .\n\nex:s nope:p ex:o .");
    FAIL();
  } catch (const UnsupportedError&) {
    FAIL() << "unknown prefix is not an unsupported construct";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 6u);
    EXPECT_NE(std::string(e.what()).find("nope"), std::string::npos);
  }
}

std::string unsupported_name(const std::string& text) {
  try {
    parse_turtle(text);
  } catch (const UnsupportedError& e) {
    return e.construct();
  }
  return "";
}

TEST(TurtleTest, UnsupportedConstructsAreNamed) {
  const std::string p = "@prefix ex: <urn:e#> .\n";
  EXPECT_NE(unsupported_name(p + "ex:s ex:p ( ex:a ex:b ) .").find("collection"),
            std::string::npos);
  EXPECT_NE(unsupported_name(p + "ex:s ex:p [ ex:q ex:o ] .").find("anonymous"),
            std::string::npos);
  EXPECT_NE(unsupported_name("@base <urn:b/> .").find("base"),
            std::string::npos);
  EXPECT_NE(unsupported_name(p + "ex:s ex:p <rel> .").find("relative IRI"),
            std::string::npos);
  EXPECT_NE(unsupported_name(p + "GRAPH ex:g { ex:s ex:p ex:o }").find("GRAPH"),
            std::string::npos);
}

TEST(TurtleTest, SyntaxErrorsHavePosition) {
  EXPECT_THROW(parse_turtle("@prefix ex: <urn:e#> . ex:s ex:p ex:o"),
               ParseError);
  EXPECT_THROW(parse_turtle("@prefix ex: <urn:e#> . \"x\" ex:p ex:o ."),
               ParseError);
  EXPECT_THROW(parse_turtle("@prefix ex: <urn:e#> . ex:s ex:p \"open ."),
               ParseError);
}

}  // namespace
}  // namespace plexflow::rdf
