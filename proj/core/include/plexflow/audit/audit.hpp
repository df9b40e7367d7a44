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

#ifndef PLEXFLOW_AUDIT_AUDIT_HPP_
#define PLEXFLOW_AUDIT_AUDIT_HPP_

#include <string>
#include <vector>

#include "plexflow/rdf/graph.hpp"

namespace plexflow::audit {

enum class Severity { kError, kWarning };
enum class Status { kPass, kFail, kNotMachineCheckable };

struct AuditRule {
  std::string id;         // FAIR principle, e.g. "F3"
  std::string principle;  // the principle in one line
  std::string check;      // what is inspected
  Severity severity = Severity::kError;
  bool machine_checkable = true;
};

struct RuleResult {
  AuditRule rule;
  Status status = Status::kPass;
  std::vector<rdf::Term> offenders;  // sorted, distinct
};

struct AuditReport {
  std::vector<RuleResult> results;  // in audit_rules() order

  const RuleResult& result(const std::string& id) const;
  // Failing rules of error severity.
  std::size_t error_count() const;
  std::size_t warning_count() const;
  bool ok() const { return error_count() == 0; }

  // Sorted keys; offenders in N-Triples form.
  std::string to_json() const;
};

// F1, F2, F3, A1.1, A1.2, A2, I1, I2, I3, R1.1, R1.2.
const std::vector<AuditRule>& audit_rules();

AuditReport audit(const rdf::Graph& g);

}  // namespace plexflow::audit

#endif  // PLEXFLOW_AUDIT_AUDIT_HPP_
