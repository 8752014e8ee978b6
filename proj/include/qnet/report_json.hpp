// Copyright 2026 The qnet authors
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

#pragma once

#include <string>

#include <json.hpp>

#include "qnet/experiments.hpp"
#include "qnet/provenance.hpp"

namespace qnet {

/// Version stamped into every emitted report; bump on breaking changes to
/// the layout described by schemas/report.schema.json.
inline constexpr int kReportSchemaVersion = 1;

/// Common envelope: schema_version, kind, generated_at (the one
/// non-reproducible field).
nlohmann::json report_envelope(const std::string& kind);

nlohmann::json experiment_report_json(const ExperimentReport& report,
                                      bool include_trace = true);

/// Final descriptors and per-wire Bloch vectors, plus per-step snapshots
/// when include_trace is set.
nlohmann::json simulate_report_json(const FlowTrace& trace,
                                    bool include_trace);

/// Per (wire, time): structural tags, numerical dependence verdicts and a
/// Bloch summary, plus the locality audit result.
nlohmann::json audit_report_json(const AnnotatedTrace& annotated,
                                 int probes, std::uint64_t seed);

nlohmann::json compare_report_json(double step_vs_global,
                                   double tomography_vs_oracle,
                                   double tolerance);

struct FuzzFailure {
  std::uint64_t seed = 0;
  std::string what;
};

nlohmann::json fuzz_report_json(std::size_t wires, int depth,
                                std::size_t seeds,
                                const std::vector<FuzzFailure>& failures);

/// Validates a report against the subset of JSON Schema the shipped schema
/// uses (type, required, properties, items, enum, const,
/// additionalProperties). Returns an empty string on success, otherwise a
/// path-prefixed description of the first violation.
std::string validate_against_schema(const nlohmann::json& document,
                                    const nlohmann::json& schema);

}  // namespace qnet
