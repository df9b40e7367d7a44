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

#include <string>

#include <gtest/gtest.h>

#include "plexflow/query/parser.hpp"
#include "plexflow/vocab/catalog.hpp"
#include "plexflow/vocab/terms.hpp"

namespace plexflow::query {
namespace {

const rdf::PrefixMap& prefixes() {
  static const rdf::PrefixMap kMap = vocab::prefix_map();
  return kMap;
}

TEST(QueryParserTest, SinglePattern) {
  Query q = parse_query("SELECT ?s WHERE { ?s a bpmn:ManualTask }", prefixes());
  ASSERT_EQ(q.where.size(), 1u);
  const TriplePatternNode& t = *q.where[0].triple;
  EXPECT_EQ(std::get<Variable>(t.subject).name, "s");
  EXPECT_EQ(std::get<rdf::Term>(t.predicate).value(), vocab::rdf::kType);
  EXPECT_EQ(std::get<rdf::Term>(t.object).value(), vocab::bpmn::kManualTask);
  EXPECT_FALSE(t.closure);
  EXPECT_EQ(q.projection, std::vector<std::string>{"s"});
}

TEST(QueryParserTest, ValuesClause) {
  Query q = parse_query(R"(
    PREFIX p-plan: <http://purl.org/net/p-plan#>
    SELECT ?step ?stepType WHERE {
      ?step p-plan:isStepOfPlan ?plan ; a ?stepType .
      values ?stepType { bpmn:ManualTask }
    })",
                        prefixes());
  ASSERT_EQ(q.where.size(), 3u);
  ASSERT_EQ(q.where[2].kind, ElementKind::kValues);
  const ValuesClause& v = *q.where[2].values;
  EXPECT_EQ(v.variable, "stepType");
  ASSERT_EQ(v.rows.size(), 1u);
  EXPECT_EQ(v.rows[0]->value(), vocab::bpmn::kManualTask);
}

TEST(QueryParserTest, ClosureModifier) {
  Query q = parse_query("SELECT ?a ?b WHERE { ?a dul:precedes+ ?b }", prefixes());
  ASSERT_EQ(q.where.size(), 1u);
  EXPECT_TRUE(q.where[0].triple->closure);
  EXPECT_EQ(std::get<rdf::Term>(q.where[0].triple->predicate).value(),
            vocab::dul::kPrecedes);
}

TEST(QueryParserTest, NestedGroupsAndFilters) {
  Query q = parse_query(R"(
    SELECT DISTINCT ?s WHERE {
      ?s a p-plan:Step .
      OPTIONAL { ?s dul:precedes ?n . FILTER(!BOUND(?x) && ?n != ?s) }
      MINUS { ?s a bpmn:ScriptTask }
      FILTER(REGEX(STR(?s), "step", "i") || ?s = <http://example.org/a>)
    } ORDER BY DESC(?s))",
                        prefixes());
  EXPECT_TRUE(q.distinct);
  ASSERT_EQ(q.where.size(), 4u);
  EXPECT_EQ(q.where[1].kind, ElementKind::kOptional);
  EXPECT_EQ(q.where[1].group.size(), 2u);
  EXPECT_EQ(q.where[2].kind, ElementKind::kMinus);
  EXPECT_EQ(q.where[3].kind, ElementKind::kFilter);
  EXPECT_EQ(q.where[3].filter->kind, ExprKind::kOr);
  ASSERT_EQ(q.order_by.size(), 1u);
  EXPECT_TRUE(q.order_by[0].descending);
}

TEST(QueryParserTest, PredicateObjectLists) {
  Query q = parse_query(
      "PREFIX ex: <http://example.org/> "
      "SELECT * WHERE { ?s ex:p ?a , ?b ; ex:q 12 ; ex:r \"x\"@en . }");
  ASSERT_EQ(q.where.size(), 4u);
  EXPECT_TRUE(q.select_all);
  EXPECT_EQ(std::get<rdf::Term>(q.where[2].triple->object).datatype(),
            vocab::xsd::kInteger);
  EXPECT_EQ(std::get<rdf::Term>(q.where[3].triple->object).language(), "en");
}

TEST(QueryParserTest, DollarVariables) {
  Query q = parse_query("SELECT ?s WHERE { ?s p-plan:isStepOfPlan $workflow }",
                        prefixes());
  EXPECT_EQ(std::get<Variable>(q.where[0].triple->object).name, "workflow");
}

TEST(QueryParserTest, UnknownPrefixHasPosition) {
  try {
    parse_query("SELECT ?s WHERE {\n  ?s nope:x ?o }");
    FAIL() << "expected ParseError";
  } catch (const UnsupportedError&) {
    FAIL() << "unknown prefix is a syntax error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 6u);
    EXPECT_NE(e.detail().find("nope"), std::string::npos);
  }
}

TEST(QueryParserTest, SyntaxErrorHasPosition) {
  try {
    parse_query("SELECT ?s WHERE { ?s ?p }");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_GT(e.column(), 0u);
  }
}

TEST(QueryParserTest, ProjectedVariableMustAppear) {
  EXPECT_THROW(parse_query("SELECT ?z WHERE { ?s ?p ?o }"), ParseError);
}

struct UnsupportedCase {
  const char* text;
  const char* construct;
};

class QueryParserUnsupportedTest
    : public ::testing::TestWithParam<UnsupportedCase> {};

TEST_P(QueryParserUnsupportedTest, RejectedByName) {
  const UnsupportedCase& c = GetParam();
  try {
    parse_query(c.text, prefixes());
    FAIL() << "expected UnsupportedError for " << c.text;
  } catch (const UnsupportedError& e) {
    EXPECT_NE(e.construct().find(c.construct), std::string::npos)
        << e.construct();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Constructs, QueryParserUnsupportedTest,
    ::testing::Values(
        UnsupportedCase{"SELECT ?s WHERE { { ?s ?p ?o } UNION { ?s ?p ?o } }", "UNION"},
        UnsupportedCase{"SELECT ?s WHERE { ?s ?p ?o } LIMIT 3", "LIMIT"},
        UnsupportedCase{"SELECT ?s WHERE { ?s ?p ?o } OFFSET 3", "OFFSET"},
        UnsupportedCase{"SELECT (COUNT(?s) AS ?n) WHERE { ?s ?p ?o }", "projection"},
        UnsupportedCase{"SELECT ?s WHERE { ?s ?p ?o } GROUP BY ?s", "GROUP BY"},
        UnsupportedCase{"ASK { ?s ?p ?o }", "ASK"},
        UnsupportedCase{"CONSTRUCT { ?s ?p ?o } WHERE { ?s ?p ?o }", "CONSTRUCT"},
        UnsupportedCase{"SELECT ?s WHERE { ?s ?p ?o . BIND(?o AS ?x) }", "BIND"},
        UnsupportedCase{"SELECT ?s WHERE { GRAPH ?g { ?s ?p ?o } }", "GRAPH"},
        UnsupportedCase{"SELECT ?s WHERE { ?s dul:precedes* ?o }", "'*'"},
        UnsupportedCase{"SELECT ?s WHERE { ?s dul:precedes/dul:precedes ?o }", "'/'"},
        UnsupportedCase{"SELECT ?s WHERE { ?s ^dul:precedes ?o }", "'^'"},
        UnsupportedCase{"SELECT ?s WHERE { ?s ?p [] }", "[ ]"},
        UnsupportedCase{"SELECT ?s WHERE { ?s ?p ?o FILTER(?o IN (1, 2)) }", "IN"},
        UnsupportedCase{"SELECT ?s WHERE { ?s ?p ?o FILTER(CONTAINS(?o, \"a\")) }",
                        "CONTAINS"},
        UnsupportedCase{"SELECT ?s WHERE { ?s ?p ?o FILTER NOT EXISTS { ?s ?p 1 } }",
                        "EXISTS"},
        UnsupportedCase{"SELECT ?s WHERE { VALUES (?s ?o) { (1 2) } ?s ?p ?o }",
                        "multi-variable VALUES"},
        UnsupportedCase{"BASE <http://example.org/> SELECT ?s WHERE { ?s ?p ?o }",
                        "BASE"}));

}  // namespace
}  // namespace plexflow::query
