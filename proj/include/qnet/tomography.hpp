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
#include <cstddef>
#include <vector>

#include "qnet/dense.hpp"
#include "qnet/descriptor.hpp"

namespace qnet {

/// Reduced density matrix of the wire subset `wires` (ascending, 1-indexed;
/// the first listed wire is the most significant index bit of `entries`).
struct DensityMatrix {
  std::size_t dim = 0;
  Matrix entries;
  std::vector<std::size_t> wires;

  Complex trace() const { return entries.trace(); }
  double purity() const;  // tr(rho^2)

  /// Hermitian within tol, unit trace within tol, eigenvalues >= -tol.
  /// Throws std::runtime_error naming the violated property.
  void validate(double tol = 1e-9) const;
};

/// Bloch components p_w = <0|q_kw(t)|0>, w in {x, y, z}, with
/// q_ky = i q_kx q_kz. Each must be real within 1e-9 and |p| <= 1 + 1e-9;
/// violations throw std::runtime_error (they indicate a broken evolution).
std::array<double, 3> bloch_components(const DescriptorSet& set,
                                       std::size_t k);

/// rho_I = 2^{-|I|} sum_P <0|P(t)|0> P over all 4^{|I|} Pauli words on I,
/// where P(t) substitutes the current descriptor components. Practical cap
/// |I| <= 8.
DensityMatrix reduced_density(const DescriptorSet& set,
                              const std::vector<std::size_t>& wires);

struct OutcomeVerdict {
  Complex expectation;
  bool is_definite = false;   // |expectation| = 1 within 1e-9 and involutory
  bool is_involutory = false; // O^2 = 1 within 1e-9
};

/// Evaluates observables built from current-time descriptor components.
/// Non-involutory observables are flagged, not rejected.
std::vector<OutcomeVerdict> definite_outcomes(
    const DescriptorSet& set, const std::vector<PauliSum>& observables);

}  // namespace qnet
