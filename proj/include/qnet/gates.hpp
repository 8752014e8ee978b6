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
#include <utility>

#include "qnet/circuit.hpp"
#include "qnet/dense.hpp"
#include "qnet/descriptor.hpp"

namespace qnet {

/// 2x2 matrix of the Euler-parametrised preparation
/// U = e^{i phi3 Z} e^{i phi2 X} e^{i phi1 Z}.
Matrix prep_matrix(const std::array<double, 3>& phi);

/// 2x2 matrix (eta*)^{1/2} [[alpha, -eta conj(beta)], [beta, eta alpha]];
/// the square root takes the principal branch.
Matrix prep_eta_matrix(double alpha, Complex beta, Complex eta);

/// Expands a 2x2 matrix in {1, X, Y, Z} and places it on `wire` of an
/// n-wire network (identity elsewhere).
PauliSum one_qubit_operator(std::size_t wires, std::size_t wire,
                            const Matrix& u);

/// Functional representation of a gate at time 0: the gate's matrix written
/// as a polynomial in the initial descriptor components, as a PauliSum over
/// the full network. to_dense of the result is the gate's network matrix.
PauliSum functional_rep(const GateInstance& gate, std::size_t wires);

/// Substitutes current descriptor components into a time-0 polynomial:
/// every key X^x Z^z becomes the product over wires of q_wx(t)^x q_wz(t)^z
/// (x before z on each wire). At set = time-0 descriptors this returns the
/// polynomial itself.
PauliSum substitute(const PauliSum& rep, const DescriptorSet& set);

/// Functional representation of the preparation with the supplied descriptor
/// components of wire i substituted in.
PauliSum prep_functional_rep(const std::array<double, 3>& phi,
                             std::size_t wire, const DescriptorSet& base);

// Closed-form descriptor actions. Each equals conjugation by the gate's
// substituted functional representation, term for term, but costs a handful
// of exact string products instead.

/// H: (q_x, q_z) -> (q_z, q_x), whatever the components' current expansion.
Descriptor action_hadamard(const Descriptor& q);

/// Cnot: control x picks up the target x; target z picks up the control z.
/// (q_cx, q_cz), (q_tx, q_tz) -> (q_cx q_tx, q_cz), (q_tx, q_cz q_tz)
std::pair<Descriptor, Descriptor> action_cnot(const Descriptor& control,
                                              const Descriptor& target);

/// CZ, symmetric in its wires:
/// (q_ax, q_az), (q_bx, q_bz) -> (q_ax q_bz, q_az), (q_bx q_az, q_bz)
std::pair<Descriptor, Descriptor> action_cz(const Descriptor& a,
                                            const Descriptor& b);

/// X: (q_x, q_z) -> (q_x, -q_z).  Z: (q_x, q_z) -> (-q_x, q_z).
Descriptor action_pauli_x(const Descriptor& q);
Descriptor action_pauli_z(const Descriptor& q);

/// Generic conjugation (U_f^dagger q_w U_f) of both components by an
/// operator that must be unitary within 1e-9; used for prep, prep_eta and
/// raw gates. Throws std::invalid_argument on a non-unitary operator.
Descriptor action_generic_1q(const Descriptor& q, const PauliSum& uf);

/// Conjugates one component: adjoint(uf) * component * uf.
PauliSum conjugate_by(const PauliSum& component, const PauliSum& uf);

}  // namespace qnet
