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

#include "oracle_helpers.hpp"
#include "qnet/engine.hpp"
#include "qnet/experiments.hpp"
#include "qnet/oracle.hpp"
#include "qnet/random_circuits.hpp"
#include "qnet/tomography.hpp"

using namespace qnet;

namespace {

FlowTrace teleport_trace(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return run_with_trace(build_teleportation(random_phi(rng)));
}

}  // namespace

TEST_CASE("fresh wire has Bloch vector (0, 0, 1)") {
  const DescriptorSet set = init_descriptors(3);
  for (std::size_t w = 1; w <= 3; ++w) {
    const auto p = bloch_components(set, w);
    CHECK(p[0] == 0.0);
    CHECK(p[1] == 0.0);
    CHECK(p[2] == 1.0);
  }
}

TEST_CASE("Bell-pair wires are maximally mixed at t=3") {
  const FlowTrace trace = teleport_trace(101);
  for (std::size_t w : {std::size_t{2}, std::size_t{3}}) {
    const auto p = bloch_components(trace.at_time(3), w);
    CHECK(std::abs(p[0]) < 1e-12);
    CHECK(std::abs(p[1]) < 1e-12);
    CHECK(std::abs(p[2]) < 1e-12);
  }
}

TEST_CASE("teleportation moves the Bloch vector: wire 3 at t=9 equals "
          "wire 1 at t=3, 100 random phi") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const FlowTrace trace = teleport_trace(seed);
    const auto sent = bloch_components(trace.at_time(3), 1);
    const auto received = bloch_components(trace.at_time(9), 3);
    CAPTURE(seed);
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(sent[i] - received[i]) < 1e-9);
  }
}

TEST_CASE("reduced_density on a singleton reproduces bloch_components") {
  const FlowTrace trace = teleport_trace(103);
  const DescriptorSet& final_set = trace.final();
  for (std::size_t w = 1; w <= 5; ++w) {
    const auto p = bloch_components(final_set, w);
    const DensityMatrix rho = reduced_density(final_set, {w});
    rho.validate();
    // rho = (1 + p . sigma) / 2
    CHECK(std::abs(rho.entries.at(0, 0) - Complex{(1 + p[2]) / 2, 0}) < 1e-12);
    CHECK(std::abs(rho.entries.at(1, 1) - Complex{(1 - p[2]) / 2, 0}) < 1e-12);
    CHECK(std::abs(rho.entries.at(0, 1) -
                   Complex{p[0] / 2, -p[1] / 2}) < 1e-12);
  }
}

TEST_CASE("Bell pair on {2,3} at t=3 is the Phi+ projector") {
  const FlowTrace trace = teleport_trace(107);
  const DensityMatrix rho = reduced_density(trace.at_time(3), {2, 3});
  rho.validate();
  Matrix expected(4);
  // |Phi+><Phi+| with basis order |00>,|01>,|10>,|11>
  expected.at(0, 0) = expected.at(0, 3) = 0.5;
  expected.at(3, 0) = expected.at(3, 3) = 0.5;
  CHECK(Matrix::max_abs_diff(rho.entries, expected) < 1e-12);

  // and it matches the dense oracle's partial trace
  Circuit prefix;
  prefix.n = 5;
  prefix.add(GateInstance::hadamard(2, 1));
  prefix.add(GateInstance::cnot(2, 3, 2));
  const DensityMatrix from_oracle =
      partial_trace(simulate(prefix), {2, 3});
  CHECK(Matrix::max_abs_diff(rho.entries, from_oracle.entries) < 1e-12);
}

TEST_CASE("records at t=7 are jointly maximally mixed") {
  const FlowTrace trace = teleport_trace(109);
  const DensityMatrix rho = reduced_density(trace.at_time(7), {4, 5});
  rho.validate();
  const Matrix expected = Complex{0.25, 0.0} * Matrix::identity(4);
  CHECK(Matrix::max_abs_diff(rho.entries, expected) < 1e-9);
}

TEST_CASE("teleportation identity: rho_3(9) = rho_1(3) = |psi><psi|") {
  for (std::uint64_t seed = 201; seed <= 220; ++seed) {
    std::mt19937_64 rng(seed);
    const auto phi = random_phi(rng);
    const FlowTrace trace = run_with_trace(build_teleportation(phi));
    const DensityMatrix sent = reduced_density(trace.at_time(3), {1});
    const DensityMatrix received = reduced_density(trace.at_time(9), {3});
    CAPTURE(seed);
    CHECK(Matrix::max_abs_diff(sent.entries, received.entries) < 1e-9);

    const Matrix u = prep_matrix(phi);
    Matrix projector(2);
    projector.at(0, 0) = u.at(0, 0) * std::conj(u.at(0, 0));
    projector.at(0, 1) = u.at(0, 0) * std::conj(u.at(1, 0));
    projector.at(1, 0) = u.at(1, 0) * std::conj(u.at(0, 0));
    projector.at(1, 1) = u.at(1, 0) * std::conj(u.at(1, 0));
    CHECK(Matrix::max_abs_diff(received.entries, projector) < 1e-9);
  }
}

TEST_CASE("definite outcomes of the Bell pair") {
  const FlowTrace trace = teleport_trace(113);
  const DescriptorSet& at3 = trace.at_time(3);
  const Descriptor& q2 = at3.wire(2);
  const Descriptor& q3 = at3.wire(3);

  const std::vector<PauliSum> observables = {
      (q2.x * q3.x).pruned(),                // +1 definite
      (q2.y() * q3.y()).scaled(-1.0),        // +1 definite
      (q2.z * q3.z).pruned(),                // +1 definite
      q2.x,                                  // expectation 0
      q2.z,
      q3.x,
      q3.z,
  };
  const auto verdicts = definite_outcomes(at3, observables);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(verdicts[i].expectation - Complex{1, 0}) < 1e-12);
    CHECK(verdicts[i].is_definite);
    CHECK(verdicts[i].is_involutory);
  }
  for (int i = 3; i < 7; ++i) {
    CHECK(std::abs(verdicts[i].expectation) < 1e-12);
    CHECK_FALSE(verdicts[i].is_definite);
    CHECK(verdicts[i].is_involutory);
  }
}

TEST_CASE("non-involutory observables are flagged, not rejected") {
  const DescriptorSet set = init_descriptors(2);
  const PauliSum projector_like =
      (PauliSum::identity(2) + PauliSum::single(2, 1, 'Z')).scaled(0.5);
  const auto verdicts = definite_outcomes(set, {projector_like});
  CHECK_FALSE(verdicts[0].is_involutory);
  CHECK_FALSE(verdicts[0].is_definite);
  CHECK(std::abs(verdicts[0].expectation - Complex{1, 0}) < 1e-12);
}

TEST_CASE("oracle equivalence on random circuits, singles and pairs") {
  for (std::uint64_t seed = 301; seed <= 320; ++seed) {
    std::mt19937_64 rng(seed);
    RandomCircuitOptions options;
    options.wires = 4;
    options.depth = 10;
    const Circuit circuit = random_circuit(options, rng);
    const DescriptorSet final_set = evolve(circuit);
    const StateVector state = simulate(circuit);
    CAPTURE(seed);
    for (std::size_t a = 1; a <= 4; ++a) {
      CHECK(Matrix::max_abs_diff(
                reduced_density(final_set, {a}).entries,
                partial_trace(state, {a}).entries) < 1e-9);
      for (std::size_t b = a + 1; b <= 4; ++b) {
        CHECK(Matrix::max_abs_diff(
                  reduced_density(final_set, {a, b}).entries,
                  partial_trace(state, {a, b}).entries) < 1e-9);
      }
    }
  }
}

TEST_CASE("purity stays within [2^-k, 1]") {
  for (std::uint64_t seed = 401; seed <= 410; ++seed) {
    std::mt19937_64 rng(seed);
    RandomCircuitOptions options;
    options.wires = 5;
    options.depth = 12;
    const Circuit circuit = random_circuit(options, rng);
    const DescriptorSet final_set = evolve(circuit);
    for (std::size_t w = 1; w <= 5; ++w) {
      const double purity = reduced_density(final_set, {w}).purity();
      CHECK(purity >= 0.5 - 1e-9);
      CHECK(purity <= 1.0 + 1e-9);
    }
    const double pair_purity = reduced_density(final_set, {1, 3}).purity();
    CHECK(pair_purity >= 0.25 - 1e-9);
    CHECK(pair_purity <= 1.0 + 1e-9);
  }
}

TEST_CASE("reduced_density validates wire subsets") {
  const DescriptorSet set = init_descriptors(3);
  CHECK_THROWS_AS(reduced_density(set, {}), std::invalid_argument);
  CHECK_THROWS_AS(reduced_density(set, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(reduced_density(set, {1, 9}), std::invalid_argument);
}

TEST_CASE("density matrix invariant violations are reported") {
  DensityMatrix bad;
  bad.dim = 2;
  bad.wires = {1};
  bad.entries = Matrix(2);
  bad.entries.at(0, 0) = 1.5;  // trace != 1
  bad.entries.at(1, 1) = Complex{0.0, 0.0};
  CHECK_THROWS_AS(bad.validate(), std::runtime_error);

  bad.entries.at(0, 0) = 2.0;  // trace 1 but negative eigenvalue
  bad.entries.at(1, 1) = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::runtime_error);
}
