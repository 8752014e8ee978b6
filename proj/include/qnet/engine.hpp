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

#include <functional>
#include <optional>
#include <vector>

#include "qnet/circuit.hpp"
#include "qnet/descriptor.hpp"
#include "qnet/gates.hpp"

namespace qnet {

/// Evolution aborts with a resource error once any component exceeds this
/// many terms; non-Clifford gates can double term counts, desk-scale
/// experiments stay far below.
inline constexpr std::size_t kTermBudget = std::size_t{1} << 20;

/// Throws std::runtime_error if the sum exceeds the budget.
void check_term_budget(const PauliSum& s, std::size_t budget = kTermBudget);

/// Fresh network: wire i carries the single-term pair (X_i, Z_i) at time 0.
/// Throws std::invalid_argument for n < 1.
DescriptorSet init_descriptors(std::size_t n);

/// Applies one gate, advancing the set to the gate's time step.
/// Descriptors of untouched wires are returned bitwise identical.
/// Throws on a time mismatch (gate.time_step != set.time + 1 is accepted
/// only when the gate continues the current step; use evolve for whole
/// circuits) and on out-of-range wires.
DescriptorSet step(const DescriptorSet& set, const GateInstance& gate);

/// Test hook: invoked after each completed time step and allowed to corrupt
/// the set, to exercise the audits. Production paths pass nothing.
using StepMutator = std::function<void(DescriptorSet&, int time_step)>;

/// Per-time-step snapshot of all descriptors. snapshots.front() is the
/// initial set at time 0; one more snapshot per occupied time step.
struct FlowTrace {
  Circuit circuit;
  std::vector<DescriptorSet> snapshots;

  /// Latest snapshot with time <= t.
  const DescriptorSet& at_time(int t) const;
  const DescriptorSet& final() const { return snapshots.back(); }
};

/// Step-by-step evolution of the whole circuit.
DescriptorSet evolve(const Circuit& circuit);

/// Step-by-step evolution keeping every snapshot.
FlowTrace run_with_trace(const Circuit& circuit,
                         const StepMutator& mutator = nullptr);

/// One-shot evolution q_i(t) = U^dagger q_i(0) U through the dense network
/// unitary; must agree with iterated step(). Width-limited to
/// kDenseWireLimit.
DescriptorSet evolve_global(const Circuit& circuit);

}  // namespace qnet
