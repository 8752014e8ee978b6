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

#include "qnet/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qnet {

namespace {

constexpr Complex kI{0.0, 1.0};

Matrix matrix2(Complex a00, Complex a01, Complex a10, Complex a11) {
  Matrix m(2);
  m.at(0, 0) = a00;
  m.at(0, 1) = a01;
  m.at(1, 0) = a10;
  m.at(1, 1) = a11;
  return m;
}

}  // namespace

Matrix prep_matrix(const std::array<double, 3>& phi) {
  const double c2 = std::cos(phi[1]), s2 = std::sin(phi[1]);
  const Complex e13 = std::exp(kI * (phi[0] + phi[2]));
  const Complex e1m3 = std::exp(kI * (phi[0] - phi[2]));
  return matrix2(e13 * c2, kI * std::conj(e1m3) * s2,  //
                 kI * e1m3 * s2, std::conj(e13) * c2);
}

Matrix prep_eta_matrix(double alpha, Complex beta, Complex eta) {
  const Complex root = std::sqrt(std::conj(eta));  // principal branch
  return matrix2(root * alpha, -root * eta * std::conj(beta),  //
                 root * beta, root * eta * alpha);
}

PauliSum one_qubit_operator(std::size_t wires, std::size_t wire,
                            const Matrix& u) {
  if (u.dim != 2) throw std::invalid_argument("expected a 2x2 matrix");
  // Pauli-basis components: u = a0 1 + ax X + ay Y + az Z.
  const Complex a0 = 0.5 * (u.at(0, 0) + u.at(1, 1));
  const Complex ax = 0.5 * (u.at(0, 1) + u.at(1, 0));
  const Complex ay = 0.5 * kI * (u.at(0, 1) - u.at(1, 0));
  const Complex az = 0.5 * (u.at(0, 0) - u.at(1, 1));
  PauliSum s(wires);
  const std::uint64_t bit = 1ull << (wire - 1);
  if (std::abs(a0) >= kPruneTolerance) s.add_term({0, 0}, a0);
  if (std::abs(ax) >= kPruneTolerance) s.add_term({bit, 0}, ax);
  // Y = i X Z in the stored convention, so the Y component lands on the
  // (1,1) key with a folded factor of i.
  if (std::abs(ay) >= kPruneTolerance) s.add_term({bit, bit}, kI * ay);
  if (std::abs(az) >= kPruneTolerance) s.add_term({0, bit}, az);
  return s;
}

PauliSum functional_rep(const GateInstance& gate, std::size_t wires) {
  switch (gate.kind) {
    case GateKind::kHadamard: {
      // H_i = (q_ix(0) + q_iz(0)) / sqrt(2)
      const std::size_t w = gate.wires[0];
      return (PauliSum::single(wires, w, 'X') +
              PauliSum::single(wires, w, 'Z'))
          .scaled(1.0 / std::sqrt(2.0));
    }
    case GateKind::kCnot: {
      // (1 + Z_c + X_t - Z_c X_t) / 2
      const std::size_t c = gate.wires[0], t = gate.wires[1];
      const PauliSum zc = PauliSum::single(wires, c, 'Z');
      const PauliSum xt = PauliSum::single(wires, t, 'X');
      return (PauliSum::identity(wires) + zc + xt - zc * xt).scaled(0.5);
    }
    case GateKind::kCz: {
      const std::size_t a = gate.wires[0], b = gate.wires[1];
      const PauliSum za = PauliSum::single(wires, a, 'Z');
      const PauliSum zb = PauliSum::single(wires, b, 'Z');
      return (PauliSum::identity(wires) + za + zb - za * zb).scaled(0.5);
    }
    case GateKind::kPauliX:
      return PauliSum::single(wires, gate.wires[0], 'X');
    case GateKind::kPauliZ:
      return PauliSum::single(wires, gate.wires[0], 'Z');
    case GateKind::kPrep:
      return one_qubit_operator(wires, gate.wires[0], prep_matrix(gate.phi));
    case GateKind::kPrepEta:
      return one_qubit_operator(
          wires, gate.wires[0],
          prep_eta_matrix(gate.alpha, gate.beta, gate.eta));
    case GateKind::kRaw:
      return *gate.raw;
  }
  throw std::logic_error("unreachable gate kind");
}

PauliSum substitute(const PauliSum& rep, const DescriptorSet& set) {
  if (rep.wires() != set.n)
    throw std::invalid_argument("substitute: wire-count mismatch");
  PauliSum out = PauliSum::zero(set.n);
  for (const auto& [key, coeff] : rep.sorted_terms()) {
    PauliSum term = PauliSum::identity(set.n).scaled(coeff);
    for (std::size_t w = 1; w <= set.n; ++w) {
      const std::uint64_t bit = 1ull << (w - 1);
      if (key.x & bit) term = term * set.wire(w).x;
      if (key.z & bit) term = term * set.wire(w).z;
    }
    out = out + term;
  }
  return out.pruned();
}

PauliSum prep_functional_rep(const std::array<double, 3>& phi,
                             std::size_t wire, const DescriptorSet& base) {
  return substitute(one_qubit_operator(base.n, wire, prep_matrix(phi)), base);
}

Descriptor action_hadamard(const Descriptor& q) {
  return Descriptor{q.z, q.x, q.wire, q.time};
}

std::pair<Descriptor, Descriptor> action_cnot(const Descriptor& control,
                                              const Descriptor& target) {
  if (control.wire == target.wire)
    throw std::invalid_argument("cnot control and target must differ");
  Descriptor c{(control.x * target.x).pruned(), control.z, control.wire,
               control.time};
  Descriptor t{target.x, (control.z * target.z).pruned(), target.wire,
               target.time};
  return {std::move(c), std::move(t)};
}

std::pair<Descriptor, Descriptor> action_cz(const Descriptor& a,
                                            const Descriptor& b) {
  if (a.wire == b.wire)
    throw std::invalid_argument("cz needs two distinct wires");
  Descriptor oa{(a.x * b.z).pruned(), a.z, a.wire, a.time};
  Descriptor ob{(b.x * a.z).pruned(), b.z, b.wire, b.time};
  return {std::move(oa), std::move(ob)};
}

Descriptor action_pauli_x(const Descriptor& q) {
  return Descriptor{q.x, -q.z, q.wire, q.time};
}

Descriptor action_pauli_z(const Descriptor& q) {
  return Descriptor{-q.x, q.z, q.wire, q.time};
}

PauliSum conjugate_by(const PauliSum& component, const PauliSum& uf) {
  return (uf.adjoint() * component * uf).pruned();
}

Descriptor action_generic_1q(const Descriptor& q, const PauliSum& uf) {
  if (!(uf.adjoint() * uf).approx_equal(PauliSum::identity(uf.wires()), 1e-9))
    throw std::invalid_argument("gate operator is not unitary within 1e-9");
  return Descriptor{conjugate_by(q.x, uf), conjugate_by(q.z, uf), q.wire,
                    q.time};
}

}  // namespace qnet
