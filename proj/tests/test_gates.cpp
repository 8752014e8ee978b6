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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle_helpers.hpp"
#include "qnet/engine.hpp"
#include "qnet/gates.hpp"
#include "qnet/random_circuits.hpp"

using namespace qnet;
using qnet_test::sum_matrix;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

// Dense conjugation oracle: U^dagger O U on the full network, via the
// test-side kron matrices.
Matrix conjugated(const Matrix& u, const PauliSum& component) {
  return u.adjoint() * sum_matrix(component) * u;
}

// A small evolved set to exercise actions away from time 0: the Bell pair
// of the teleportation figure on wires {2,3} of a 3-wire network.
DescriptorSet bell_set() {
  DescriptorSet set = init_descriptors(3);
  set = step(set, GateInstance::hadamard(2, 1));
  set = step(set, GateInstance::cnot(2, 3, 2));
  return set;
}

}  // namespace

TEST_CASE("hadamard swaps components, twice is the identity") {
  DescriptorSet set = init_descriptors(3);
  const Descriptor before = set.wire(2);
  const Descriptor once = action_hadamard(before);
  CHECK(once.x.key_equal(before.z));
  CHECK(once.z.key_equal(before.x));
  const Descriptor twice = action_hadamard(once);
  CHECK(twice.x.key_equal(before.x));
  CHECK(twice.z.key_equal(before.z));
}

TEST_CASE("hadamard on an evolved descriptor matches dense conjugation") {
  const DescriptorSet set = bell_set();
  // wire 2 carries (q2z q3x, q2x); the step rule conjugates by the
  // functional representation with current components substituted in
  const Descriptor moved = action_hadamard(set.wire(2));
  const Matrix u = sum_matrix(
      substitute(functional_rep(GateInstance::hadamard(2, 3), 3), set));
  CHECK(Matrix::max_abs_diff(sum_matrix(moved.x),
                             conjugated(u, set.wire(2).x)) < 1e-12);
  CHECK(Matrix::max_abs_diff(sum_matrix(moved.z),
                             conjugated(u, set.wire(2).z)) < 1e-12);
}

TEST_CASE("cnot produces the Bell-pair descriptors") {
  const DescriptorSet set = bell_set();
  const PauliSum q2z_q3x =
      PauliSum::single(3, 2, 'Z') * PauliSum::single(3, 3, 'X');
  const PauliSum q2x_q3z =
      PauliSum::single(3, 2, 'X') * PauliSum::single(3, 3, 'Z');
  CHECK(set.wire(2).x.key_equal(q2z_q3x));
  CHECK(set.wire(2).z.key_equal(PauliSum::single(3, 2, 'X')));
  CHECK(set.wire(3).x.key_equal(PauliSum::single(3, 3, 'X')));
  CHECK(set.wire(3).z.key_equal(q2x_q3z));
}

TEST_CASE("cnot applied twice is the identity on both descriptors") {
  const DescriptorSet set = bell_set();
  auto [c1, t1] = action_cnot(set.wire(2), set.wire(3));
  auto [c2, t2] = action_cnot(c1, t1);
  CHECK(c2.x.key_equal(set.wire(2).x));
  CHECK(c2.z.key_equal(set.wire(2).z));
  CHECK(t2.x.key_equal(set.wire(3).x));
  CHECK(t2.z.key_equal(set.wire(3).z));
}

TEST_CASE("cnot rejects identical control and target") {
  const DescriptorSet set = init_descriptors(2);
  CHECK_THROWS_AS(action_cnot(set.wire(1), set.wire(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(action_cz(set.wire(2), set.wire(2)), std::invalid_argument);
}

TEST_CASE("record-copy step reproduces the figure label") {
  // teleportation at t=7: wire 4 = (q4x, Dx q2z q3x q4z)
  std::mt19937_64 rng(41);
  const auto phi = random_phi(rng);
  DescriptorSet set = init_descriptors(5);
  set = step(set, GateInstance::hadamard(2, 1));
  set = step(set, GateInstance::cnot(2, 3, 2));
  set = step(set, GateInstance::prep(1, phi, 3));
  const PauliSum dx = set.wire(1).x;
  set = step(set, GateInstance::cnot(1, 2, 4));
  set = step(set, GateInstance::hadamard(1, 5));
  set = step(set, GateInstance::cnot(2, 5, 6));
  set = step(set, GateInstance::cnot(1, 4, 7));
  PauliSum expected = dx * PauliSum::single(5, 2, 'Z') *
                      PauliSum::single(5, 3, 'X') *
                      PauliSum::single(5, 4, 'Z');
  CHECK(set.wire(4).z.approx_equal(expected, 1e-12));
  CHECK(set.wire(4).x.key_equal(PauliSum::single(5, 4, 'X')));
}

TEST_CASE("cz equals H CNOT H composed, key-exact") {
  const DescriptorSet set = bell_set();
  auto [a_cz, b_cz] = action_cz(set.wire(2), set.wire(3));

  const Descriptor hb = action_hadamard(set.wire(3));
  auto [a_mid, b_mid] = action_cnot(set.wire(2), hb);
  const Descriptor b_done = action_hadamard(b_mid);
  CHECK(a_cz.x.key_equal(a_mid.x));
  CHECK(a_cz.z.key_equal(a_mid.z));
  CHECK(b_cz.x.key_equal(b_done.x));
  CHECK(b_cz.z.key_equal(b_done.z));
}

TEST_CASE("cz on fresh descriptors and dense oracle") {
  DescriptorSet set = init_descriptors(2);
  auto [a, b] = action_cz(set.wire(1), set.wire(2));
  CHECK(a.x.key_equal(PauliSum::single(2, 1, 'X') *
                      PauliSum::single(2, 2, 'Z')));
  CHECK(a.z.key_equal(PauliSum::single(2, 1, 'Z')));
  CHECK(b.x.key_equal(PauliSum::single(2, 2, 'X') *
                      PauliSum::single(2, 1, 'Z')));

  const Matrix u = sum_matrix(functional_rep(GateInstance::cz(1, 2, 1), 2));
  CHECK(Matrix::max_abs_diff(sum_matrix(a.x), conjugated(u, set.wire(1).x)) <
        1e-12);

  auto [a2, b2] = action_cz(a, b);
  CHECK(a2.x.key_equal(set.wire(1).x));
  CHECK(b2.z.key_equal(set.wire(2).z));
}

TEST_CASE("prep functional representation at phi = 0 is the identity") {
  const DescriptorSet base = init_descriptors(2);
  const PauliSum rep = prep_functional_rep({0, 0, 0}, 1, base);
  CHECK(rep.approx_equal(PauliSum::identity(2), 1e-12));
}

TEST_CASE("prep phi = (0, pi/4, 0) matches the dense matrix exponential") {
  const DescriptorSet base = init_descriptors(1);
  const PauliSum rep = prep_functional_rep({0, kPi / 4, 0}, 1, base);
  // e^{i (pi/4) X} = cos(pi/4) 1 + i sin(pi/4) X
  Matrix expected(2);
  expected.at(0, 0) = expected.at(1, 1) = std::cos(kPi / 4);
  expected.at(0, 1) = expected.at(1, 0) = kI * std::sin(kPi / 4);
  CHECK(Matrix::max_abs_diff(to_dense(rep), expected) < 1e-12);
}

TEST_CASE("prep at time 0 reproduces the gate matrix for random phi") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 25; ++i) {
    const auto phi = random_phi(rng);
    const DescriptorSet base = init_descriptors(3);
    const PauliSum rep = prep_functional_rep(phi, 2, base);
    // wire 2 of 3: 1 (x) U (x) 1
    const Matrix u2 = prep_matrix(phi);
    Matrix expected =
        qnet_test::kron(qnet_test::kron(Matrix::identity(2), u2),
                        Matrix::identity(2));
    CHECK(Matrix::max_abs_diff(to_dense(rep), expected) < 1e-12);
  }
}

TEST_CASE("prep_eta dense form is the displayed matrix") {
  const double alpha = 0.6;
  const Complex beta{0.48, 0.64};
  const Complex eta = std::exp(kI * 0.77);
  const Matrix u = prep_eta_matrix(alpha, beta, eta);
  const Complex root = std::sqrt(std::conj(eta));
  CHECK(std::abs(u.at(0, 0) - root * alpha) < 1e-15);
  CHECK(std::abs(u.at(0, 1) + root * eta * std::conj(beta)) < 1e-15);
  CHECK(std::abs(u.at(1, 0) - root * beta) < 1e-15);
  CHECK(std::abs(u.at(1, 1) - root * eta * alpha) < 1e-15);
  CHECK(u.is_unitary(1e-12));
}

TEST_CASE("prep_eta with eta = 1 reduces to a plain preparation of psi") {
  const double alpha = 0.8;
  const Complex beta{0.0, 0.6};
  const Matrix u = prep_eta_matrix(alpha, beta, Complex{1.0, 0.0});
  const std::vector<Complex> col = {u.at(0, 0), u.at(1, 0)};
  CHECK(std::abs(col[0] - alpha) < 1e-15);
  CHECK(std::abs(col[1] - beta) < 1e-15);
}

TEST_CASE("generic action: phi = 0 leaves the descriptor unchanged") {
  const DescriptorSet set = bell_set();
  const PauliSum id_rep = prep_functional_rep({0, 0, 0}, 2, set);
  const Descriptor after = action_generic_1q(set.wire(2), id_rep);
  CHECK(after.x.approx_equal(set.wire(2).x, 1e-12));
  CHECK(after.z.approx_equal(set.wire(2).z, 1e-12));
}

TEST_CASE("prepared Bloch vector matches the dense simulation of U|0>") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 25; ++i) {
    const auto phi = random_phi(rng);
    DescriptorSet set = init_descriptors(1);
    set = step(set, GateInstance::prep(1, phi, 1));
    const Matrix u = prep_matrix(phi);
    const Complex a = u.at(0, 0), b = u.at(1, 0);
    const double px = 2 * std::real(a * std::conj(b));
    const double py = 2 * std::imag(std::conj(a) * b);
    const double pz = std::norm(a) - std::norm(b);
    CHECK(std::abs(set.wire(1).x.expectation_zero().real() - px) < 1e-12);
    CHECK(std::abs(set.wire(1).y().expectation_zero().real() - py) < 1e-12);
    CHECK(std::abs(set.wire(1).z.expectation_zero().real() - pz) < 1e-12);
  }
}

TEST_CASE("prep followed by its inverse restores the descriptor") {
  std::mt19937_64 rng(53);
  const auto phi = random_phi(rng);
  DescriptorSet set = init_descriptors(2);
  const DescriptorSet before = set;
  const PauliSum rep = prep_functional_rep(phi, 1, set);
  set.wire(1) = action_generic_1q(set.wire(1), rep);
  set.wire(1) = action_generic_1q(set.wire(1), rep.adjoint());
  CHECK(set.wire(1).x.approx_equal(before.wire(1).x, 1e-12));
  CHECK(set.wire(1).z.approx_equal(before.wire(1).z, 1e-12));
}

TEST_CASE("non-unitary operators are rejected") {
  const DescriptorSet set = init_descriptors(1);
  const PauliSum not_unitary = PauliSum::single(1, 1, 'X', 0.5);
  CHECK_THROWS_AS(action_generic_1q(set.wire(1), not_unitary),
                  std::invalid_argument);
}

TEST_CASE("x and z gate kinds flip the right signs, dense oracle") {
  const DescriptorSet set = bell_set();
  const Descriptor after_x = action_pauli_x(set.wire(2));
  CHECK(after_x.x.key_equal(set.wire(2).x));
  CHECK(after_x.z.approx_equal(set.wire(2).z.scaled(-1.0), 1e-15));
  const Descriptor after_z = action_pauli_z(set.wire(2));
  CHECK(after_z.x.approx_equal(set.wire(2).x.scaled(-1.0), 1e-15));
  CHECK(after_z.z.key_equal(set.wire(2).z));

  // conjugation by q_2x(t) resp. q_2z(t), i.e. the substituted reps
  const Matrix ux = sum_matrix(
      substitute(functional_rep(GateInstance::pauli_x(2, 3), 3), set));
  CHECK(Matrix::max_abs_diff(sum_matrix(after_x.z),
                             conjugated(ux, set.wire(2).z)) < 1e-12);
  const Matrix uz = sum_matrix(
      substitute(functional_rep(GateInstance::pauli_z(2, 3), 3), set));
  CHECK(Matrix::max_abs_diff(sum_matrix(after_z.x),
                             conjugated(uz, set.wire(2).x)) < 1e-12);
}

TEST_CASE("every closed form equals conjugation by the substituted rep") {
  // the step-rule/global-rule equivalence at single-gate scale, on sets
  // evolved by a few random gates first
  std::mt19937_64 rng(59);
  RandomCircuitOptions options;
  options.wires = 4;
  options.depth = 6;
  for (int trial = 0; trial < 10; ++trial) {
    const Circuit prefix = random_circuit(options, rng);
    const DescriptorSet set = evolve(prefix);
    const int t = set.time + 1;

    const std::vector<GateInstance> gates = {
        GateInstance::hadamard(1, t),   GateInstance::cnot(1, 3, t),
        GateInstance::cz(2, 4, t),      GateInstance::pauli_x(2, t),
        GateInstance::pauli_z(4, t),
        GateInstance::prep(3, random_phi(rng), t)};
    for (const auto& gate : gates) {
      const DescriptorSet next = step(set, gate);
      const PauliSum uf = substitute(functional_rep(gate, 4), set);
      for (std::size_t w : gate.wires) {
        const PauliSum cx = conjugate_by(set.wire(w).x, uf);
        const PauliSum cz = conjugate_by(set.wire(w).z, uf);
        CHECK(next.wire(w).x.approx_equal(cx, 1e-9));
        CHECK(next.wire(w).z.approx_equal(cz, 1e-9));
      }
    }
  }
}

TEST_CASE("gate actions preserve the descriptor algebra") {
  std::mt19937_64 rng(61);
  RandomCircuitOptions options;
  options.wires = 3;
  options.depth = 8;
  const Circuit circuit = random_circuit(options, rng);
  const DescriptorSet set = evolve(circuit);
  const PauliSum id = PauliSum::identity(3);
  const PauliSum zero = PauliSum::zero(3);
  for (std::size_t w = 1; w <= 3; ++w) {
    CHECK((set.wire(w).x * set.wire(w).x).approx_equal(id, 1e-9));
    CHECK((set.wire(w).z * set.wire(w).z).approx_equal(id, 1e-9));
    CHECK((set.wire(w).x * set.wire(w).z + set.wire(w).z * set.wire(w).x)
              .approx_equal(zero, 1e-9));
    for (std::size_t v = w + 1; v <= 3; ++v) {
      CHECK(commutator(set.wire(w).x, set.wire(v).x)
                .approx_equal(zero, 1e-9));
      CHECK(commutator(set.wire(w).z, set.wire(v).z)
                .approx_equal(zero, 1e-9));
      CHECK(commutator(set.wire(w).x, set.wire(v).z)
                .approx_equal(zero, 1e-9));
    }
  }
}
