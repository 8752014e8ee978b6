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

#include <vector>

#include "qnet/circuit.hpp"
#include "qnet/dense.hpp"
#include "qnet/tomography.hpp"

namespace qnet {

/// Dense state vector over 2^n amplitudes; wire 1 is the most significant
/// index bit, matching the tomography convention. Norm stays 1.
struct StateVector {
  std::vector<Complex> amplitudes;
  std::size_t n = 0;

  static StateVector zero_state(std::size_t n);

  double norm() const;

  /// Applies an operator given as a PauliSum, term by term. Gate semantics
  /// come from the same functional representations the descriptor engine
  /// uses; there is no second encoding of what a gate does.
  void apply_sum(const PauliSum& op);
};

/// |<a|b>|, the global-phase-insensitive overlap.
double fidelity(const StateVector& a, const StateVector& b);

/// Applies each gate's dense action to |0...0> in time order.
/// Width-limited to kDenseWireLimit.
StateVector simulate(const Circuit& circuit);

/// Like simulate but keeps the state after every time step
/// (index 0 = initial state).
std::vector<StateVector> simulate_with_snapshots(const Circuit& circuit);

/// Standard partial trace over the complement of `wires` (ascending,
/// 1-indexed).
DensityMatrix partial_trace(const StateVector& state,
                            const std::vector<std::size_t>& wires);

/// True iff the states produced by prefix + prep_eta(alpha, beta, eta_k) on
/// wire 1 + suffix agree up to global phase (fidelity >= 1 - 1e-9) for
/// eta_1 vs eta_2. The suffix's gates run after the preparation; the
/// optional prefix runs before it (e.g. a prerotation of wire 1).
bool eta_invariance_check(double alpha, Complex beta, Complex eta1,
                          Complex eta2, const Circuit& suffix,
                          const Circuit* prefix = nullptr);

}  // namespace qnet
