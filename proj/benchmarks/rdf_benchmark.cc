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

#include <random>
#include <string>

#include <benchmark/benchmark.h>

#include "plexflow/fixture/openpredict.hpp"
#include "plexflow/rdf/graph.hpp"
#include "plexflow/rdf/ntriples.hpp"

namespace plexflow::rdf {
namespace {

void BM_GenerateFixture(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fixture::generate_fixture());
}
BENCHMARK(BM_GenerateFixture)->Unit(benchmark::kMillisecond);

void BM_ParseFixture(benchmark::State& state) {
  const std::string text = fixture::fixture_ntriples();
  for (auto _ : state) benchmark::DoNotOptimize(parse_ntriples(text));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseFixture)->Unit(benchmark::kMillisecond);

void BM_SerializeFixture(benchmark::State& state) {
  const Graph g = fixture::generate_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(serialize_ntriples(g));
}
BENCHMARK(BM_SerializeFixture)->Unit(benchmark::kMillisecond);

// Insert n random triples over a vocabulary of n/4 terms.
void BM_Insert(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, n / 4);
  auto term = [&] { return Term::iri("urn:t:" + std::to_string(pick(rng))); };
  std::vector<Triple> triples;
  for (std::size_t i = 0; i < n; ++i) triples.push_back({term(), term(), term()});
  for (auto _ : state) {
    Graph g;
    for (const Triple& t : triples) g.insert(t);
    benchmark::DoNotOptimize(g.size());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * n));
}
BENCHMARK(BM_Insert)->Range(1 << 8, 1 << 14);

}  // namespace
}  // namespace plexflow::rdf

BENCHMARK_MAIN();
