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

#include "qnet/engine.hpp"

#include <stdexcept>

#include "qnet/dense.hpp"

namespace qnet {

void check_term_budget(const PauliSum& s, std::size_t budget) {
  if (s.term_count() > budget) {
    throw std::runtime_error(
        "descriptor component exceeded the term budget (" +
        std::to_string(s.term_count()) + " > " + std::to_string(budget) + ")");
  }
}

DescriptorSet init_descriptors(std::size_t n) {
  if (n < 1) throw std::invalid_argument("need at least one wire");
  DescriptorSet set;
  set.n = n;
  set.time = 0;
  set.descriptors.reserve(n);
  for (std::size_t w = 1; w <= n; ++w) {
    set.descriptors.push_back(Descriptor{PauliSum::single(n, w, 'X'),
                                         PauliSum::single(n, w, 'Z'), w, 0});
  }
  return set;
}

namespace {

void require_wires(const DescriptorSet& set, const GateInstance& gate) {
  for (std::size_t w : gate.wires) {
    if (w < 1 || w > set.n)
      throw std::invalid_argument("gate wire " + std::to_string(w) +
                                  " out of range [1, " +
                                  std::to_string(set.n) + "]");
  }
}

// Applies the gate's action in place, leaving times untouched.
void apply_gate(DescriptorSet& set, const GateInstance& gate) {
  require_wires(set, gate);
  switch (gate.kind) {
    case GateKind::kHadamard: {
      Descriptor& q = set.wire(gate.wires[0]);
      q = action_hadamard(q);
      break;
    }
    case GateKind::kCnot: {
      auto [c, t] =
          action_cnot(set.wire(gate.wires[0]), set.wire(gate.wires[1]));
      set.wire(gate.wires[0]) = std::move(c);
      set.wire(gate.wires[1]) = std::move(t);
      break;
    }
    case GateKind::kCz: {
      auto [a, b] =
          action_cz(set.wire(gate.wires[0]), set.wire(gate.wires[1]));
      set.wire(gate.wires[0]) = std::move(a);
      set.wire(gate.wires[1]) = std::move(b);
      break;
    }
    case GateKind::kPauliX: {
      Descriptor& q = set.wire(gate.wires[0]);
      q = action_pauli_x(q);
      break;
    }
    case GateKind::kPauliZ: {
      Descriptor& q = set.wire(gate.wires[0]);
      q = action_pauli_z(q);
      break;
    }
    case GateKind::kPrep:
    case GateKind::kPrepEta: {
      const PauliSum uf = substitute(functional_rep(gate, set.n), set);
      Descriptor& q = set.wire(gate.wires[0]);
      q = action_generic_1q(q, uf);
      break;
    }
    case GateKind::kRaw: {
      const PauliSum uf = substitute(functional_rep(gate, set.n), set);
      if (!(uf.adjoint() * uf)
               .approx_equal(PauliSum::identity(set.n), 1e-9))
        throw std::invalid_argument("raw operator is not unitary within 1e-9");
      for (std::size_t w : gate.wires) {
        Descriptor& q = set.wire(w);
        q = Descriptor{conjugate_by(q.x, uf), conjugate_by(q.z, uf), q.wire,
                       q.time};
      }
      break;
    }
  }
  for (std::size_t w : gate.wires) {
    check_term_budget(set.wire(w).x);
    check_term_budget(set.wire(w).z);
  }
}

void stamp_time(DescriptorSet& set, int t) {
  set.time = t;
  for (auto& d : set.descriptors) d.time = t;
}

}  // namespace

DescriptorSet step(const DescriptorSet& set, const GateInstance& gate) {
  if (gate.time_step != set.time + 1)
    throw std::invalid_argument(
        "gate at step " + std::to_string(gate.time_step) +
        " cannot advance a set at time " + std::to_string(set.time));
  DescriptorSet out = set;
  apply_gate(out, gate);
  stamp_time(out, gate.time_step);
  return out;
}

const DescriptorSet& FlowTrace::at_time(int t) const {
  const DescriptorSet* best = &snapshots.front();
  for (const auto& s : snapshots) {
    if (s.time <= t) best = &s;
  }
  return *best;
}

FlowTrace run_with_trace(const Circuit& circuit, const StepMutator& mutator) {
  FlowTrace trace;
  trace.circuit = circuit;
  DescriptorSet current = init_descriptors(circuit.n);
  trace.snapshots.push_back(current);
  for (const auto& [t, gates] : circuit.steps()) {
    // Simultaneous gates touch disjoint wires (validated), so wire order
    // within the step is immaterial; they are applied lowest wire first.
    for (const GateInstance* g : gates) apply_gate(current, *g);
    stamp_time(current, t);
    if (mutator) mutator(current, t);
    trace.snapshots.push_back(current);
  }
  return trace;
}

DescriptorSet evolve(const Circuit& circuit) {
  DescriptorSet current = init_descriptors(circuit.n);
  for (const auto& [t, gates] : circuit.steps()) {
    for (const GateInstance* g : gates) apply_gate(current, *g);
    stamp_time(current, t);
  }
  return current;
}

DescriptorSet evolve_global(const Circuit& circuit) {
  if (circuit.n > kDenseWireLimit)
    throw std::invalid_argument("global evolution is width-limited to " +
                                std::to_string(kDenseWireLimit) + " wires");
  const std::size_t dim = 1ull << circuit.n;
  // Full network unitary, gates in time order (later gates multiply on the
  // left).
  Matrix u = Matrix::identity(dim);
  for (const auto& [t, gates] : circuit.steps()) {
    for (const GateInstance* g : gates) {
      u = to_dense(functional_rep(*g, circuit.n)) * u;
    }
  }
  const Matrix u_dag = u.adjoint();
  DescriptorSet out = init_descriptors(circuit.n);
  for (std::size_t w = 1; w <= circuit.n; ++w) {
    const Matrix x_t = u_dag * to_dense(out.wire(w).x) * u;
    const Matrix z_t = u_dag * to_dense(out.wire(w).z) * u;
    out.wire(w).x = pauli_decompose(x_t, circuit.n);
    out.wire(w).z = pauli_decompose(z_t, circuit.n);
  }
  stamp_time(out, circuit.final_time());
  return out;
}

}  // namespace qnet
