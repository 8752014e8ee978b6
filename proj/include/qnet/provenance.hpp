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

#include <iosfwd>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qnet/engine.hpp"

namespace qnet {

/// Set of parameter identifiers a value may depend on. Tags propagate
/// structurally and over-approximate: absence proves independence, presence
/// does not prove dependence (a dependence could cancel exactly).
using ProvenanceTag = std::set<std::string>;

struct ComponentTags {
  ProvenanceTag x;
  ProvenanceTag z;

  ProvenanceTag combined() const;
};

/// tags[s][w-1] are wire w's tags in snapshot s of the trace.
struct AnnotatedTrace {
  FlowTrace trace;
  std::vector<std::vector<ComponentTags>> tags;

  const std::vector<ComponentTags>& tags_at_time(int t) const;
};

/// Structural propagation: a gate's output tags are the union of the input
/// tags of the components that feed each output, plus the gate's own
/// parameter identifiers (on the wires the gate touches).
AnnotatedTrace tag_descriptors(const FlowTrace& trace);

/// Default number of perturbed re-runs in the numerical dependence check.
inline constexpr int kDefaultProbes = 8;

/// Returns a copy of the circuit with every gate bound to `param_id`
/// perturbed: each underlying scalar moves by a uniform random offset of
/// magnitude [0.1, 0.5] (radians) with random sign — large enough to defeat
/// accidental stationary points of the trigonometric coefficients.
/// Throws std::invalid_argument for an unknown identifier.
Circuit perturb_parameter(const Circuit& circuit, const std::string& param_id,
                          std::mt19937_64& rng);

/// Re-runs the evolution `probes` times with perturbed values of the named
/// parameter; true iff any coefficient of the wire's descriptor at the given
/// time changes by more than 1e-9. A missing structural tag must imply a
/// false result (soundness of the over-approximation).
bool numerical_dependence_check(const Circuit& circuit, std::size_t wire,
                                int time, const std::string& param_id,
                                int probes = kDefaultProbes,
                                std::uint64_t seed = 0x5eed);

struct LocalityViolation {
  std::size_t wire = 0;
  int time_step = 0;
};

struct LocalityReport {
  std::vector<LocalityViolation> violations;
  bool clean() const { return violations.empty(); }
};

/// Independent re-check of the step() contract: for every time step, the
/// descriptors of wires untouched by that step's gates must be key-identical
/// (same term maps bitwise) across the step.
LocalityReport locality_audit(const FlowTrace& trace);

/// DOT digraph of the parameter flow: one node per (wire, time step), gate
/// edges between them, edges carrying `highlight_param` drawn green and
/// thick.
void write_flow_dot(const AnnotatedTrace& annotated,
                    const std::string& highlight_param, std::ostream& out);

}  // namespace qnet
