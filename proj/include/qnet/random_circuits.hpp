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

#include <random>

#include "qnet/circuit.hpp"

namespace qnet {

struct RandomCircuitOptions {
  std::size_t wires = 4;
  int depth = 10;
  /// Relative weights per kind; preparations are kept rare enough that term
  /// counts stay at desk scale.
  double clifford_weight = 0.70;  // h / cnot / cz / x / z
  double prep_weight = 0.18;
  double prep_eta_weight = 0.06;
  double raw_weight = 0.06;  // a random single-wire axis rotation
  /// Give each preparation a unique parameter id ("phi1", "phi2", ...).
  bool unique_param_ids = true;
};

/// Euler angles uniform in the fundamental domain:
/// phi1, phi3 in [0, pi), phi2 in [0, pi/2].
std::array<double, 3> random_phi(std::mt19937_64& rng);

/// Deterministic random circuit with one gate per time step, drawn from all
/// gate kinds.
Circuit random_circuit(const RandomCircuitOptions& options,
                       std::mt19937_64& rng);

}  // namespace qnet
