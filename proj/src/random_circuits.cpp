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

#include "qnet/random_circuits.hpp"

#include <cmath>
#include <numbers>

namespace qnet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

}  // namespace

std::array<double, 3> random_phi(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> half_pi(0.0, kPi / 2);
  std::uniform_real_distribution<double> pi(0.0, kPi);
  return {pi(rng), half_pi(rng), pi(rng)};
}

Circuit random_circuit(const RandomCircuitOptions& options,
                       std::mt19937_64& rng) {
  Circuit circuit;
  circuit.n = options.wires;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  std::uniform_int_distribution<std::size_t> wire_dist(1, options.wires);
  std::uniform_int_distribution<int> clifford_dist(0, 4);
  std::uniform_int_distribution<int> axis_dist(0, 2);

  auto two_wires = [&] {
    const std::size_t a = wire_dist(rng);
    std::size_t b = wire_dist(rng);
    while (b == a) b = wire_dist(rng);
    return std::pair{a, b};
  };

  const double total = options.clifford_weight + options.prep_weight +
                       options.prep_eta_weight + options.raw_weight;
  int prep_counter = 0;
  for (int t = 1; t <= options.depth; ++t) {
    const double roll = unit(rng) * total;
    if (roll < options.clifford_weight) {
      switch (clifford_dist(rng)) {
        case 0:
          circuit.add(GateInstance::hadamard(wire_dist(rng), t));
          break;
        case 1: {
          auto [a, b] = two_wires();
          circuit.add(GateInstance::cnot(a, b, t));
          break;
        }
        case 2: {
          auto [a, b] = two_wires();
          circuit.add(GateInstance::cz(a, b, t));
          break;
        }
        case 3:
          circuit.add(GateInstance::pauli_x(wire_dist(rng), t));
          break;
        default:
          circuit.add(GateInstance::pauli_z(wire_dist(rng), t));
          break;
      }
    } else if (roll < options.clifford_weight + options.prep_weight) {
      const std::string id = options.unique_param_ids
                                 ? "phi" + std::to_string(++prep_counter)
                                 : "phi";
      circuit.add(GateInstance::prep(wire_dist(rng), random_phi(rng), t, id));
    } else if (roll < options.clifford_weight + options.prep_weight +
                          options.prep_eta_weight) {
      std::uniform_real_distribution<double> theta_dist(0.0, kPi / 2);
      const double theta = theta_dist(rng);
      const double barg = angle(rng);
      const Complex beta = std::sin(theta) * std::exp(kI * barg);
      const Complex eta = std::exp(kI * angle(rng));
      const std::string id = options.unique_param_ids
                                 ? "psi" + std::to_string(++prep_counter)
                                 : "psi";
      circuit.add(GateInstance::prep_eta(wire_dist(rng), std::cos(theta), beta,
                                         eta, t, id,
                                         options.unique_param_ids
                                             ? id + "_eta"
                                             : "eta"));
    } else {
      // axis rotation exp(i theta sigma_w) as a raw operator
      const std::size_t w = wire_dist(rng);
      const double theta = angle(rng);
      const char axis = "XYZ"[axis_dist(rng)];
      PauliSum rot =
          PauliSum::identity(options.wires).scaled(std::cos(theta)) +
          PauliSum::single(options.wires, w, axis, kI * std::sin(theta));
      circuit.add(GateInstance::raw_gate({w}, std::move(rot), t));
    }
  }
  circuit.validate();
  return circuit;
}

}  // namespace qnet
