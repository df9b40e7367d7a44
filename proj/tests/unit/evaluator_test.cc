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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "plexflow/query/evaluator.hpp"
#include "plexflow/query/parser.hpp"
#include "plexflow/rdf/ntriples.hpp"
#include "plexflow/vocab/catalog.hpp"
#include "support/oracles.hpp"
#include "support/random_graph.hpp"

namespace plexflow::query {
namespace {

using rdf::Graph;
using rdf::Term;

Term ex(const std::string& local) { return Term::iri("http://example.org/" + local); }

ResultTable run(const std::string& text, const Graph& g) {
  return evaluate(parse_query("PREFIX ex: <http://example.org/>\n" + text,
                              vocab::prefix_map()),
                  g);
}

Graph chain(bool frozen = true) {
  Graph g;
  g.insert(ex("s1"), ex("next"), ex("s2"));
  g.insert(ex("s2"), ex("next"), ex("s3"));
  if (frozen) g.freeze();
  return g;
}

TEST(EvaluatorTest, ClosureOnChain) {
  ResultTable t = run("SELECT ?a ?b WHERE { ?a ex:next+ ?b }", chain());
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(testing::rows_of(t), (std::vector<testing::OracleRow>{
                            {"<http://example.org/s1>", "<http://example.org/s2>"},
                            {"<http://example.org/s1>", "<http://example.org/s3>"},
                            {"<http://example.org/s2>", "<http://example.org/s3>"}}));
}

TEST(EvaluatorTest, ClosureFromBoundEnds) {
  Graph g = chain();
  EXPECT_EQ(run("SELECT ?b WHERE { ex:s1 ex:next+ ?b }", g).size(), 2u);
  EXPECT_EQ(run("SELECT ?a WHERE { ?a ex:next+ ex:s3 }", g).size(), 2u);
  EXPECT_EQ(run("SELECT * WHERE { ex:s3 ex:next+ ex:s1 }", g).size(), 0u);
}

TEST(EvaluatorTest, ClosureOnCycleTerminates) {
  Graph g;
  g.insert(ex("a"), ex("next"), ex("b"));
  g.insert(ex("b"), ex("next"), ex("a"));
  // a reaches b and itself; b reaches a and itself.
  EXPECT_EQ(run("SELECT ?x ?y WHERE { ?x ex:next+ ?y }", g).size(), 4u);
  EXPECT_EQ(run("SELECT ?x WHERE { ?x ex:next+ ?x }", g).size(), 2u);
}

TEST(EvaluatorTest, MinusRemovingEverythingIsEmpty) {
  ResultTable t = run(
      "SELECT ?a ?b WHERE { ?a ex:next ?b MINUS { ?a ex:next ?c } }", chain());
  EXPECT_TRUE(t.empty());
  EXPECT_EQ(t.variables(), (std::vector<std::string>{"a", "b"}));
}

TEST(EvaluatorTest, MinusWithoutSharedVariableRemovesNothing) {
  ResultTable t = run(
      "SELECT ?a WHERE { ?a ex:next ?b MINUS { ?x ex:next ?y } }", chain());
  EXPECT_EQ(t.size(), 2u);
}

TEST(EvaluatorTest, OptionalLeftJoinWithCondition) {
  Graph g = chain(false);
  g.insert(ex("s1"), ex("label"), Term::literal("first"));
  ResultTable t = run(
      "SELECT ?a ?l WHERE { ?a ex:next ?b OPTIONAL { ?a ex:label ?l } }", g);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_FALSE(t.get(0, "l").has_value() && t.get(1, "l").has_value());
  ResultTable none = run(
      "SELECT ?a ?l WHERE { ?a ex:next ?b "
      "OPTIONAL { ?a ex:label ?l FILTER(?b = ex:s3) } }",
      g);
  ASSERT_EQ(none.size(), 2u);
  EXPECT_FALSE(none.get(0, "l").has_value());
  EXPECT_FALSE(none.get(1, "l").has_value());
}

TEST(EvaluatorTest, NotBoundAfterOptional) {
  ResultTable t = run(
      "SELECT ?a WHERE { ?x ex:next ?a OPTIONAL { ?a ex:next ?n } "
      "FILTER(!BOUND(?n)) }",
      chain());
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(*t.get(0, "a"), ex("s3"));
}

TEST(EvaluatorTest, ValuesJoin) {
  ResultTable t = run(
      "SELECT ?a WHERE { ?a ex:next ?b VALUES ?b { ex:s3 ex:nowhere } }", chain());
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(*t.get(0, "a"), ex("s2"));
  ResultTable only_values = run("SELECT ?v WHERE { VALUES ?v { 1 2 UNDEF } }", chain());
  EXPECT_EQ(only_values.size(), 3u);
}

TEST(EvaluatorTest, FilterComparisons) {
  Graph g;
  g.insert(ex("a"), ex("score"), Term::typed_literal("0.5", vocab::xsd::kDecimal));
  g.insert(ex("b"), ex("score"), Term::typed_literal("2", vocab::xsd::kInteger));
  g.insert(ex("c"), ex("score"), Term::literal("high"));
  g.insert(ex("d"), ex("score"), ex("iri"));
  EXPECT_EQ(run("SELECT ?s WHERE { ?s ex:score ?v FILTER(?v > 1) }", g).size(), 1u);
  EXPECT_EQ(run("SELECT ?s WHERE { ?s ex:score ?v FILTER(?v < 1) }", g).size(), 1u);
  EXPECT_EQ(run("SELECT ?s WHERE { ?s ex:score ?v FILTER(?v = 2.0) }", g).size(), 1u);
  // Type-mismatched ordering is an error and filters the row out, both ways.
  EXPECT_EQ(run("SELECT ?s WHERE { ?s ex:score ?v FILTER(?v < \"z\") }", g).size(), 1u);
  EXPECT_EQ(run("SELECT ?s WHERE { ?s ex:score ?v FILTER(!(?v < \"z\")) }", g).size(),
            0u);
  EXPECT_EQ(run("SELECT ?s WHERE { ?s ex:score ?v FILTER(?v != ex:iri) }", g).size(), 3u);
  EXPECT_EQ(run("SELECT ?s WHERE { ?s ex:score ?v "
                "FILTER(REGEX(STR(?v), \"^IR|HIGH\", \"i\")) }",
                g)
                .size(),
            1u);
  EXPECT_EQ(run("SELECT ?s WHERE { ?s ex:score ?v "
                "FILTER(REGEX(STR(?s), \"example.org/[ab]$\")) }",
                g)
                .size(),
            2u);
}

TEST(EvaluatorTest, ErrorInOrIsRescuedByTrueOperand) {
  Graph g;
  g.insert(ex("a"), ex("p"), ex("b"));
  EXPECT_EQ(run("SELECT ?s WHERE { ?s ex:p ?o FILTER(?nope = 1 || ?o = ex:b) }", g).size(),
            1u);
  EXPECT_EQ(run("SELECT ?s WHERE { ?s ex:p ?o FILTER(?nope = 1 && ?o = ex:b) }", g).size(),
            0u);
}

TEST(EvaluatorTest, OrderByNumericThenCanonical) {
  Graph g;
  for (int i : {10, 9, 100, 1}) {
    g.insert(ex("n" + std::to_string(i)), ex("v"),
             Term::typed_literal(std::to_string(i), vocab::xsd::kInteger));
  }
  ResultTable asc = run("SELECT ?v WHERE { ?s ex:v ?v } ORDER BY ?v", g);
  std::vector<std::string> got;
  for (std::size_t i = 0; i < asc.size(); ++i) got.push_back(asc.get(i, "v")->value());
  EXPECT_EQ(got, (std::vector<std::string>{"1", "9", "10", "100"}));
  ResultTable desc = run("SELECT ?v WHERE { ?s ex:v ?v } ORDER BY DESC(?v)", g);
  EXPECT_EQ(desc.get(0, "v")->value(), "100");
  // Without ORDER BY rows are canonically sorted.
  ResultTable plain = run("SELECT ?v WHERE { ?s ex:v ?v }", g);
  ResultTable sorted = plain;
  sorted.sort_canonical();
  EXPECT_EQ(plain, sorted);
}

TEST(EvaluatorTest, SelectStarUsesPatternOrder) {
  ResultTable t = run("SELECT * WHERE { ?b ex:next ?a . ?a ex:next ?c }", chain());
  EXPECT_EQ(t.variables(), (std::vector<std::string>{"b", "a", "c"}));
  EXPECT_EQ(t.size(), 1u);
}

TEST(EvaluatorTest, ConstantAbsentFromGraph) {
  EXPECT_TRUE(run("SELECT ?a WHERE { ?a ex:missing ?b }", chain()).empty());
  EXPECT_TRUE(run("SELECT ?a WHERE { ?a ex:next ex:missing }", chain()).empty());
  EXPECT_TRUE(run("SELECT ?b WHERE { ex:missing ex:next+ ?b }", chain()).empty());
}

TEST(EvaluatorTest, BindParametersSubstitutesConstants) {
  Query q = parse_query(
      "PREFIX ex: <http://example.org/> "
      "SELECT ?b WHERE { $from ex:next ?b FILTER(BOUND(?from)) } ORDER BY ?from");
  Query bound = bind_parameters(q, {{"from", ex("s2")}});
  EXPECT_TRUE(bound.order_by.empty());
  ResultTable t = evaluate(bound, chain());
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(*t.get(0, "b"), ex("s3"));
}

TEST(EvaluatorTest, BindParametersRejectsProjectedParameter) {
  Query q = parse_query(
      "PREFIX ex: <http://example.org/> SELECT ?a WHERE { ?a ex:next ?b }");
  EXPECT_THROW(bind_parameters(q, {{"a", ex("s1")}}), QueryError);
  Query v = parse_query(
      "PREFIX ex: <http://example.org/> "
      "SELECT ?a WHERE { ?a ex:next ?b VALUES ?b { ex:s2 } }");
  EXPECT_THROW(bind_parameters(v, {{"b", ex("s2")}}), QueryError);
}

// ---- randomized properties ------------------------------------------------

TEST(EvaluatorPropertyTest, MatchesNestedLoopOracle) {
  std::mt19937_64 rng(20260101);
  for (int i = 0; i < 100; ++i) {
    Graph g = testing::random_ground_graph(rng, 60, 8);
    g.freeze();
    testing::OracleQuery oq = testing::random_oracle_query(rng, g);
    std::string text = testing::to_sparql(oq);
    ResultTable got = evaluate(parse_query(text), g);
    ASSERT_EQ(testing::rows_of(got), testing::oracle_evaluate(oq, g))
        << "case " << i << "\n" << text;
  }
}

TEST(EvaluatorPropertyTest, JoinOrderIndependence) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 50; ++i) {
    Graph g = testing::random_ground_graph(rng, 60, 8);
    testing::OracleQuery oq = testing::random_oracle_query(rng, g);
    auto base = testing::rows_of(evaluate(parse_query(testing::to_sparql(oq)), g));
    std::shuffle(oq.patterns.begin(), oq.patterns.end(), rng);
    auto shuffled = testing::rows_of(evaluate(parse_query(testing::to_sparql(oq)), g));
    ASSERT_EQ(base, shuffled) << testing::to_sparql(oq);
  }
}

TEST(EvaluatorPropertyTest, DistinctIsSetCollapse) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    Graph g = testing::random_ground_graph(rng, 60, 8);
    testing::OracleQuery oq = testing::random_oracle_query(rng, g);
    oq.distinct = false;
    auto bag = testing::rows_of(evaluate(parse_query(testing::to_sparql(oq)), g));
    oq.distinct = true;
    auto set = testing::rows_of(evaluate(parse_query(testing::to_sparql(oq)), g));
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    ASSERT_EQ(bag, set);
  }
}

TEST(EvaluatorPropertyTest, ClosureMatchesTransitiveClosureOnDags) {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 50; ++i) {
    std::size_t nodes = std::uniform_int_distribution<std::size_t>(2, 50)(rng);
    std::bernoulli_distribution edge(3.0 / static_cast<double>(nodes));
    Graph g;
    std::set<std::pair<std::string, std::string>> edges;
    for (std::size_t a = 0; a < nodes; ++a) {
      for (std::size_t b = a + 1; b < nodes; ++b) {
        if (!edge(rng)) continue;
        Term s = ex("n" + std::to_string(a));
        Term o = ex("n" + std::to_string(b));
        g.insert(s, vocab::iri(vocab::dul::kPrecedes), o);
        edges.emplace(s.ntriples(), o.ntriples());
      }
    }
    g.freeze();
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& r :
         testing::rows_of(run("SELECT ?a ?b WHERE { ?a dul:precedes+ ?b }", g))) {
      got.emplace(r[0], r[1]);
    }
    ASSERT_EQ(got, testing::transitive_closure(edges)) << "dag " << i;
  }
}

}  // namespace
}  // namespace plexflow::query
