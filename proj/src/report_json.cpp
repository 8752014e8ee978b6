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

#include "qnet/report_json.hpp"

#include <ctime>

#include "qnet/tomography.hpp"

namespace qnet {

using nlohmann::json;

json report_envelope(const std::string& kind) {
  char stamp[32];
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return json{{"schema_version", kReportSchemaVersion},
              {"kind", kind},
              {"generated_at", stamp}};
}

json experiment_report_json(const ExperimentReport& report,
                            bool include_trace) {
  json claims = json::array();
  for (const auto& c : report.claims) {
    claims.push_back(json{{"id", c.id},
                          {"description", c.description},
                          {"expected", c.expected},
                          {"observed", c.observed},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
  }
  json body{{"name", report.name},
            {"params", report.params},
            {"claims", claims},
            {"all_pass", report.all_pass()}};
  if (include_trace) body["trace"] = report.trace_lines;
  json out = report_envelope("experiment");
  out["experiment"] = std::move(body);
  return out;
}

json simulate_report_json(const FlowTrace& trace, bool include_trace) {
  const DescriptorSet& final_set = trace.final();
  json descriptors = json::array();
  json bloch = json::array();
  for (std::size_t w = 1; w <= trace.circuit.n; ++w) {
    descriptors.push_back(json{{"wire", w},
                               {"label", trace.circuit.wire_label(w)},
                               {"x", final_set.wire(w).x.str()},
                               {"z", final_set.wire(w).z.str()}});
    const auto p = bloch_components(final_set, w);
    bloch.push_back(
        json{{"wire", w}, {"x", p[0]}, {"y", p[1]}, {"z", p[2]}});
  }
  json body{{"wires", trace.circuit.n},
            {"time", final_set.time},
            {"descriptors", descriptors},
            {"bloch", bloch}};
  if (include_trace) {
    json snapshots = json::array();
    for (const auto& snap : trace.snapshots) {
      json wires = json::array();
      for (std::size_t w = 1; w <= trace.circuit.n; ++w) {
        wires.push_back(json{{"wire", w},
                             {"x", snap.wire(w).x.str()},
                             {"z", snap.wire(w).z.str()}});
      }
      snapshots.push_back(json{{"time", snap.time}, {"wires", wires}});
    }
    body["snapshots"] = std::move(snapshots);
  }
  json out = report_envelope("simulate");
  out["simulate"] = std::move(body);
  return out;
}

json audit_report_json(const AnnotatedTrace& annotated, int probes,
                       std::uint64_t seed) {
  const FlowTrace& trace = annotated.trace;
  const auto params = trace.circuit.parameter_ids();

  const LocalityReport locality = locality_audit(trace);
  json violations = json::array();
  for (const auto& v : locality.violations)
    violations.push_back(json{{"wire", v.wire}, {"step", v.time_step}});

  // One numerical probe series per parameter fills the verdicts for every
  // (wire, time) at once.
  json entries = json::array();
  for (std::size_t s = 0; s < trace.snapshots.size(); ++s) {
    const DescriptorSet& snap = trace.snapshots[s];
    for (std::size_t w = 1; w <= trace.circuit.n; ++w) {
      json tags_x = json::array(), tags_z = json::array();
      for (const auto& id : annotated.tags[s][w - 1].x) tags_x.push_back(id);
      for (const auto& id : annotated.tags[s][w - 1].z) tags_z.push_back(id);
      json numerical = json::object();
      for (const auto& id : params) {
        numerical[id] = numerical_dependence_check(trace.circuit, w,
                                                   snap.time, id, probes,
                                                   seed);
      }
      const auto p = bloch_components(snap, w);
      entries.push_back(json{{"wire", w},
                             {"label", trace.circuit.wire_label(w)},
                             {"time", snap.time},
                             {"tags", json{{"x", tags_x}, {"z", tags_z}}},
                             {"numerical", numerical},
                             {"bloch", json{{"x", p[0]}, {"y", p[1]},
                                            {"z", p[2]}}}});
    }
  }

  json body{{"wires", trace.circuit.n},
            {"parameters", json::array()},
            {"probes", probes},
            {"locality", json{{"clean", locality.clean()},
                              {"violations", violations}}},
            {"entries", entries}};
  for (const auto& id : params) body["parameters"].push_back(id);
  json out = report_envelope("audit");
  out["audit"] = std::move(body);
  return out;
}

json compare_report_json(double step_vs_global, double tomography_vs_oracle,
                         double tolerance) {
  json out = report_envelope("compare");
  out["compare"] = json{
      {"max_step_vs_global", step_vs_global},
      {"max_tomography_vs_oracle", tomography_vs_oracle},
      {"tolerance", tolerance},
      {"pass", step_vs_global <= tolerance &&
                   tomography_vs_oracle <= tolerance}};
  return out;
}

json fuzz_report_json(std::size_t wires, int depth, std::size_t seeds,
                      const std::vector<FuzzFailure>& failures) {
  json fails = json::array();
  for (const auto& f : failures)
    fails.push_back(json{{"seed", f.seed}, {"what", f.what}});
  json out = report_envelope("fuzz");
  out["fuzz"] = json{{"wires", wires},
                     {"depth", depth},
                     {"seeds", seeds},
                     {"failures", fails},
                     {"pass", failures.empty()}};
  return out;
}

namespace {

bool type_matches(const json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "number") return value.is_number();
  if (type == "integer") return value.is_number_integer();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

std::string validate_node(const json& value, const json& schema,
                          const std::string& path) {
  if (schema.contains("const") && value != schema["const"])
    return path + ": value does not match const";
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& candidate : schema["enum"])
      if (candidate == value) found = true;
    if (!found) return path + ": value not in enum";
  }
  if (schema.contains("type") &&
      !type_matches(value, schema["type"].get<std::string>()))
    return path + ": expected type " + schema["type"].get<std::string>();
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!value.contains(key.get<std::string>()))
          return path + ": missing required key '" + key.get<std::string>() +
                 "'";
      }
    }
    if (schema.contains("properties")) {
      for (auto it = schema["properties"].begin();
           it != schema["properties"].end(); ++it) {
        if (value.contains(it.key())) {
          const std::string err =
              validate_node(value[it.key()], it.value(), path + "/" + it.key());
          if (!err.empty()) return err;
        }
      }
    }
    if (schema.contains("additionalProperties") &&
        schema["additionalProperties"].is_boolean() &&
        !schema["additionalProperties"].get<bool>()) {
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!schema.contains("properties") ||
            !schema["properties"].contains(it.key()))
          return path + ": unexpected key '" + it.key() + "'";
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    std::size_t index = 0;
    for (const auto& element : value) {
      const std::string err = validate_node(
          element, schema["items"], path + "/" + std::to_string(index));
      if (!err.empty()) return err;
      ++index;
    }
  }
  return "";
}

}  // namespace

std::string validate_against_schema(const json& document, const json& schema) {
  return validate_node(document, schema, "$");
}

}  // namespace qnet
