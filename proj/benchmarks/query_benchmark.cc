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

#include <map>
#include <string>

#include <benchmark/benchmark.h>

#include "plexflow/audit/audit.hpp"
#include "plexflow/diff/diff.hpp"
#include "plexflow/fixture/openpredict.hpp"
#include "plexflow/query/cq.hpp"

namespace plexflow {
namespace {

using rdf::Term;

const rdf::Graph& fixture_graph() {
  static const rdf::Graph g = fixture::generate_fixture();
  return g;
}

void BM_CompetencyQuestion(benchmark::State& state, const char* id) {
  const query::CqEntry& entry = query::find_cq(id);
  std::map<std::string, Term> params;
  for (const std::string& p : entry.parameters) {
    params.emplace(p, Term::iri(p == "from" ? fixture::kMainProtocolV01
                                            : fixture::kMainProtocolV02));
  }
  for (auto _ : state) benchmark::DoNotOptimize(query::run_cq(id, fixture_graph(), params));
}
BENCHMARK_CAPTURE(BM_CompetencyQuestion, CQ1_1, "CQ1.1")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_CompetencyQuestion, CQ2_1, "CQ2.1")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_CompetencyQuestion, CQ2_2, "CQ2.2")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_CompetencyQuestion, CQ3_2, "CQ3.2")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_CompetencyQuestion, CQ3_5, "CQ3.5")->Unit(benchmark::kMicrosecond);

void BM_Diff(benchmark::State& state) {
  const Term a = Term::iri(fixture::kMainProtocolV01);
  const Term b = Term::iri(fixture::kMainProtocolV02);
  for (auto _ : state) benchmark::DoNotOptimize(diff::diff(fixture_graph(), a, b));
}
BENCHMARK(BM_Diff)->Unit(benchmark::kMicrosecond);

void BM_Audit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(audit::audit(fixture_graph()));
}
BENCHMARK(BM_Audit)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace plexflow

BENCHMARK_MAIN();
