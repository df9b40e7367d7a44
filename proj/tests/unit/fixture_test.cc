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

#include "plexflow/fixture/openpredict.hpp"

#include <gtest/gtest.h>

#include <string>

#include "plexflow/rdf/io.hpp"
#include "plexflow/rdf/ntriples.hpp"
#include "plexflow/trace/tracer.hpp"
#include "plexflow/vocab/terms.hpp"
#include "plexflow/workflow/model.hpp"

namespace plexflow::fixture {
namespace {

namespace v = plexflow::vocab;
using rdf::Term;
using workflow::StepKind;

const rdf::Graph& fixture() {
  static const rdf::Graph g = generate_fixture();
  return g;
}

std::pair<int, int> kind_counts(const workflow::WorkflowModel& m) {
  int manual = 0;
  int script = 0;
  for (const workflow::StepDef* s : m.main_steps()) {
    if (s->kinds.count(StepKind::kManual) != 0) ++manual;
    if (s->kinds.count(StepKind::kScript) != 0) ++script;
  }
  return {manual, script};
}

TEST(FixtureTest, IsDeterministic) {
  EXPECT_EQ(fixture_ntriples(), rdf::serialize_ntriples(fixture()));
}

TEST(FixtureTest, ShippedCopyIsCurrent) {
  const std::string shipped =
      rdf::read_text_file(std::string(PLEXFLOW_SOURCE_DIR) + "/data/openpredict-fixture.nt");
  EXPECT_EQ(shipped, fixture_ntriples());
}

TEST(FixtureTest, BothVersionsValidate) {
  const auto wfs = workflow::find_workflows(fixture());
  ASSERT_EQ(wfs.size(), 2u);
  for (const Term& wf : wfs) {
    const auto m = workflow::load_workflow(fixture(), wf);
    const auto violations = workflow::validate(m, &fixture());
    for (const auto& viol : violations) ADD_FAILURE() << viol.code << " " << viol.message;
  }
}

TEST(FixtureTest, StepCounts) {
  const auto v01 = workflow::load_workflow(fixture(), Term::iri(kMainProtocolV01));
  const auto v02 = workflow::load_workflow(fixture(), Term::iri(kMainProtocolV02));
  EXPECT_EQ(kind_counts(v01), std::make_pair(28, 14));
  EXPECT_EQ(kind_counts(v02), std::make_pair(9, 9));
  EXPECT_EQ(v01.steps.size(), 60u);
  EXPECT_EQ(v02.steps.size(), 18u);
  EXPECT_EQ(v01.used_distributions().size(), 5u);
  EXPECT_EQ(v02.used_distributions().size(), 7u);
}

TEST(FixtureTest, InstructionReuse) {
  const auto v01 = workflow::load_workflow(fixture(), Term::iri(kMainProtocolV01));
  const auto v02 = workflow::load_workflow(fixture(), Term::iri(kMainProtocolV02));
  const auto old_used = v01.used_instructions();
  const auto new_used = v02.used_instructions();
  int reused = 0;
  int revisions = 0;
  for (const Term& i : new_used) {
    if (old_used.count(i) != 0) ++reused;
    const auto& rev = v02.instructions.at(i).revision_of;
    if (rev && old_used.count(*rev) != 0) ++revisions;
  }
  EXPECT_EQ(old_used.size(), 58u);
  EXPECT_EQ(reused, 8);
  EXPECT_EQ(revisions, 3);
  EXPECT_EQ(static_cast<int>(new_used.size()) - reused - revisions, 7);
}

TEST(FixtureTest, DatasetDownloadUrls) {
  const Term url = Term::iri(v::dcat::kDownloadURL);
  int found = 0;
  for (const rdf::Triple& t : fixture().triples()) {
    if (t.predicate == url) ++found;
  }
  EXPECT_EQ(found, 7);
  EXPECT_TRUE(fixture().contains(
      {Term::iri(std::string(v::opredict::kBase) + "Distribution_release-4-kegg-kegg-drug.nq.gz"),
       url, Term::literal("http://download.bio2rdf.org/files/release/4/kegg/kegg-drug.nq.gz")}));
}

TEST(FixtureTest, Executions) {
  const trace::Trace t = trace::load_trace(fixture());
  EXPECT_EQ(t.activities.size(), 14u);
  bool accuracy = false;
  for (const auto& [iri, a] : t.artifacts) {
    if (a.measure && a.measure->value() == kMeasureAccuracy && a.value == "0.833336") {
      accuracy = true;
    }
  }
  EXPECT_TRUE(accuracy);
}

}  // namespace
}  // namespace plexflow::fixture
