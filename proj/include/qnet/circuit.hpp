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

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qnet/pauli.hpp"

namespace qnet {

enum class GateKind { kHadamard, kCnot, kCz, kPauliX, kPauliZ, kPrep, kPrepEta, kRaw };

/// Name used in circuit files: h, cnot, cz, x, z, prep, prep_eta, raw.
const char* gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(const std::string& name);

/// One timed gate over 1-indexed wires (control first where applicable).
struct GateInstance {
  GateKind kind = GateKind::kHadamard;
  std::vector<std::size_t> wires;
  int time_step = 1;

  // kPrep: Euler angles of U = e^{i phi3 Z} e^{i phi2 X} e^{i phi1 Z}.
  std::array<double, 3> phi{0.0, 0.0, 0.0};

  // kPrepEta: U = (eta*)^{1/2} [[alpha, -eta conj(beta)], [beta, eta alpha]]
  // with alpha real >= 0, alpha^2 + |beta|^2 = 1, |eta| = 1.
  double alpha = 1.0;
  Complex beta{0.0, 0.0};
  Complex eta{1.0, 0.0};

  // Provenance identifiers. kPrep tags its wire with param_id ("phi" by
  // default); kPrepEta tags with param_id ("psi") and eta_param_id ("eta").
  std::string param_id;
  std::string eta_param_id;

  // kRaw: user-provided operator over the listed wires (full circuit width,
  // support restricted to `wires`), interpreted at time 0.
  std::optional<PauliSum> raw;

  /// Parameter identifiers this gate binds.
  std::set<std::string> parameter_ids() const;

  static GateInstance hadamard(std::size_t wire, int t);
  static GateInstance cnot(std::size_t control, std::size_t target, int t);
  static GateInstance cz(std::size_t a, std::size_t b, int t);
  static GateInstance pauli_x(std::size_t wire, int t);
  static GateInstance pauli_z(std::size_t wire, int t);
  static GateInstance prep(std::size_t wire, std::array<double, 3> phi, int t,
                           std::string param_id = "phi");
  static GateInstance prep_eta(std::size_t wire, double alpha, Complex beta,
                               Complex eta, int t, std::string param_id = "psi",
                               std::string eta_param_id = "eta");
  static GateInstance raw_gate(std::vector<std::size_t> wires, PauliSum sum,
                               int t);
};

/// Timed list of gates over named wires. Gates are kept sorted by
/// (time_step, lowest wire); several gates may share a time step when their
/// wire sets are disjoint.
struct Circuit {
  std::size_t n = 0;
  std::vector<GateInstance> gates;
  /// Optional display labels (size n when set); defaults to "1".."n".
  std::vector<std::string> wire_labels;

  std::string wire_label(std::size_t wire) const;

  /// Structural validation: wire ranges, distinct wires per gate, strictly
  /// increasing time per wire, one gate per wire per step, normalisation of
  /// prep_eta parameters, raw support and unitarity.
  /// Throws std::invalid_argument with a description.
  void validate() const;

  /// Appends a gate and keeps the gate list sorted.
  void add(GateInstance gate);

  /// Gates grouped by time step, ascending.
  std::vector<std::pair<int, std::vector<const GateInstance*>>> steps() const;

  /// All parameter identifiers bound anywhere in the circuit.
  std::set<std::string> parameter_ids() const;

  int final_time() const;
};

}  // namespace qnet
