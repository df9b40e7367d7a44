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

#ifndef PLEXFLOW_FIXTURE_OPENPREDICT_HPP_
#define PLEXFLOW_FIXTURE_OPENPREDICT_HPP_

#include <string>
#include <string_view>

#include "plexflow/rdf/graph.hpp"

// Generator for the OpenPREDICT provenance graph: two versions of the main
// protocol, their instructions and datasets, agents, and 14 recorded
// executions. Resources that have no published name are given descriptive
// synthetic names in the same style.

namespace plexflow::fixture {

#define PLEXFLOW_OPREDICT "https://w3id.org/fair/openpredict/"

inline constexpr std::string_view kMainProtocolV01 = PLEXFLOW_OPREDICT "Plan_Main_Protocol_v01";
inline constexpr std::string_view kMainProtocolV02 = PLEXFLOW_OPREDICT "Plan_Main_Protocol_v02";
inline constexpr std::string_view kModelStep =
    PLEXFLOW_OPREDICT "Step_Model_preparation_train_and_evaluation";

inline constexpr std::string_view kAgentRemzi = PLEXFLOW_OPREDICT "Agent_Remzi";
inline constexpr std::string_view kAgentAhmed = PLEXFLOW_OPREDICT "Agent_Ahmed";
inline constexpr std::string_view kAgentJoao = PLEXFLOW_OPREDICT "Agent_Joao";
inline constexpr std::string_view kAgentJupyter = PLEXFLOW_OPREDICT "Agent_Jupyter_Notebook";

inline constexpr std::string_view kRoleCreator = PLEXFLOW_OPREDICT "Role_Creator";
inline constexpr std::string_view kRoleDeveloper = PLEXFLOW_OPREDICT "Role_Developer";
inline constexpr std::string_view kRoleExecutor = PLEXFLOW_OPREDICT "Role_Executor";
inline constexpr std::string_view kRolePublisher = PLEXFLOW_OPREDICT "Role_Publisher";
inline constexpr std::string_view kRoleExecutionEnvironment =
    PLEXFLOW_OPREDICT "Role_Execution_environment";

inline constexpr std::string_view kMeasureAccuracy =
    PLEXFLOW_OPREDICT "EvaluationMeasure_PredictiveAccuracy";
inline constexpr std::string_view kMeasureAveragePrecision =
    PLEXFLOW_OPREDICT "EvaluationMeasure_AveragePrecision";
inline constexpr std::string_view kMeasureF1 = PLEXFLOW_OPREDICT "EvaluationMeasure_F1";
inline constexpr std::string_view kMeasurePrecision = PLEXFLOW_OPREDICT "EvaluationMeasure_Precision";
inline constexpr std::string_view kMeasureRecall = PLEXFLOW_OPREDICT "EvaluationMeasure_Recall";
inline constexpr std::string_view kMeasureRocAuc = PLEXFLOW_OPREDICT "EvaluationMeasure_RocAuc";

#undef PLEXFLOW_OPREDICT

// Deterministic; every call returns an equal graph.
rdf::Graph generate_fixture();

// serialize_ntriples(generate_fixture()).
std::string fixture_ntriples();

}  // namespace plexflow::fixture

#endif  // PLEXFLOW_FIXTURE_OPENPREDICT_HPP_
