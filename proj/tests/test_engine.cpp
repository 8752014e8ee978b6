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

#include "oracle_helpers.hpp"
#include "qnet/engine.hpp"
#include "qnet/experiments.hpp"
#include "qnet/random_circuits.hpp"

using namespace qnet;

TEST_CASE("init_descriptors: fresh singles") {
  const DescriptorSet one = init_descriptors(1);
  CHECK(one.wire(1).x.key_equal(PauliSum::single(1, 1, 'X')));
  CHECK(one.wire(1).z.key_equal(PauliSum::single(1, 1, 'Z')));
  CHECK(one.time == 0);

  const DescriptorSet three = init_descriptors(3);
  const auto terms = three.wire(2).x.sorted_terms();
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].first.x == 0b010);
  CHECK(terms[0].first.z == 0);
  CHECK(terms[0].second == Complex{1.0, 0.0});

  // derived y-component: q_1y(0) = i X1 Z1 = Y1
  CHECK(three.wire(1).y().key_equal(PauliSum::single(3, 1, 'Y')));

  CHECK_THROWS_AS(init_descriptors(0), std::invalid_argument);
}

TEST_CASE("step touches only the gate's wires, key-exact") {
  const DescriptorSet set = init_descriptors(5);
  const DescriptorSet next = step(set, GateInstance::hadamard(2, 1));
  for (std::size_t w = 1; w <= 5; ++w) {
    if (w == 2) continue;
    CHECK(next.wire(w).x.key_equal(set.wire(w).x));
    CHECK(next.wire(w).z.key_equal(set.wire(w).z));
  }
  CHECK(next.wire(2).x.key_equal(set.wire(2).z));
  CHECK(next.time == 1);
}

TEST_CASE("step validates time and wires") {
  const DescriptorSet set = init_descriptors(2);
  CHECK_THROWS_AS(step(set, GateInstance::hadamard(1, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(step(set, GateInstance::hadamard(7, 1)),
                  std::invalid_argument);
}

TEST_CASE("teleportation trace: wire-1 label at t=5 and wire-3 at t=9") {
  std::mt19937_64 rng(71);
  const auto phi = random_phi(rng);
  const Circuit circuit = build_teleportation(phi);
  const FlowTrace trace = run_with_trace(circuit);

  const PauliSum dx = trace.at_time(3).wire(1).x;
  const PauliSum dz = trace.at_time(3).wire(1).z;

  // q1(5) = (Dz, Dx q2z q3x)
  const Descriptor& q1 = trace.at_time(5).wire(1);
  CHECK(q1.x.approx_equal(dz, 1e-12));
  CHECK(q1.z.approx_equal(dx * PauliSum::single(5, 2, 'Z') *
                              PauliSum::single(5, 3, 'X'),
                          1e-12));

  // q3(9) = (Dx q2z q4z, Dz q3z q5z)
  const Descriptor& q3 = trace.at_time(9).wire(3);
  CHECK(q3.x.approx_equal(dx * PauliSum::single(5, 2, 'Z') *
                              PauliSum::single(5, 4, 'Z'),
                          1e-12));
  CHECK(q3.z.approx_equal(dz * PauliSum::single(5, 3, 'Z') *
                              PauliSum::single(5, 5, 'Z'),
                          1e-12));
}

TEST_CASE("trace snapshots: markers present, empty circuit has one") {
  const Circuit circuit = build_teleportation({0.3, 0.7, 1.1});
  const FlowTrace trace = run_with_trace(circuit);
  CHECK(trace.snapshots.size() == 10);  // t=0 plus nine steps
  for (int t : {3, 5, 7, 9}) CHECK(trace.at_time(t).time == t);

  Circuit empty;
  empty.n = 3;
  const FlowTrace empty_trace = run_with_trace(empty);
  CHECK(empty_trace.snapshots.size() == 1);
  CHECK(empty_trace.final().time == 0);
}

TEST_CASE("telephone trace: final wire-3 descriptor carries relay factors") {
  std::mt19937_64 rng(73);
  const auto phi = random_phi(rng);
  const Circuit circuit = build_telephone(phi, 2, true);
  const FlowTrace trace = run_with_trace(circuit);
  const PauliSum dx = trace.at_time(3).wire(1).x;
  const PauliSum dz = trace.at_time(3).wire(1).z;
  const std::size_t n = circuit.n;  // 5 + E,E' + 4',5',4'',5'' = 11

  // (Dx q2z q4z q4'z q4''z, Dz q3z q5z q5'z q5''z); relay wires are
  // 8,9 (4',5') and 10,11 (4'',5'') with E,E' at 6,7
  PauliSum expect_x = dx * PauliSum::single(n, 2, 'Z') *
                      PauliSum::single(n, 4, 'Z') *
                      PauliSum::single(n, 8, 'Z') *
                      PauliSum::single(n, 10, 'Z');
  PauliSum expect_z = dz * PauliSum::single(n, 3, 'Z') *
                      PauliSum::single(n, 5, 'Z') *
                      PauliSum::single(n, 9, 'Z') *
                      PauliSum::single(n, 11, 'Z');
  CHECK(trace.final().wire(3).x.approx_equal(expect_x, 1e-12));
  CHECK(trace.final().wire(3).z.approx_equal(expect_z, 1e-12));
}

TEST_CASE("evolve_global: empty circuit and a single Hadamard") {
  Circuit empty;
  empty.n = 2;
  const DescriptorSet global = evolve_global(empty);
  const DescriptorSet fresh = init_descriptors(2);
  for (std::size_t w = 1; w <= 2; ++w) {
    CHECK(global.wire(w).x.approx_equal(fresh.wire(w).x, 1e-12));
    CHECK(global.wire(w).z.approx_equal(fresh.wire(w).z, 1e-12));
  }

  Circuit single;
  single.n = 2;
  single.add(GateInstance::hadamard(1, 1));
  const DescriptorSet after = evolve_global(single);
  const Descriptor expected = action_hadamard(fresh.wire(1));
  CHECK(after.wire(1).x.approx_equal(expected.x, 1e-12));
  CHECK(after.wire(1).z.approx_equal(expected.z, 1e-12));
}

TEST_CASE("evolve_global rejects widths above the dense limit") {
  Circuit wide;
  wide.n = 13;
  CHECK_THROWS_AS(evolve_global(wide), std::invalid_argument);
}

TEST_CASE("teleportation: stepping equals global conjugation within 1e-9") {
  std::mt19937_64 rng(79);
  const Circuit circuit = build_teleportation(random_phi(rng));
  const DescriptorSet stepped = evolve(circuit);
  const DescriptorSet global = evolve_global(circuit);
  for (std::size_t w = 1; w <= 5; ++w) {
    CHECK(stepped.wire(w).x.max_delta(global.wire(w).x) <= 1e-9);
    CHECK(stepped.wire(w).z.max_delta(global.wire(w).z) <= 1e-9);
  }
}

TEST_CASE("random circuits: step/global equivalence and algebra, 25 seeds") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    std::mt19937_64 rng(seed);
    RandomCircuitOptions options;
    options.wires = 4;
    options.depth = 12;
    const Circuit circuit = random_circuit(options, rng);
    const DescriptorSet stepped = evolve(circuit);
    const DescriptorSet global = evolve_global(circuit);
    double worst = 0.0;
    for (std::size_t w = 1; w <= options.wires; ++w) {
      worst = std::max(worst, stepped.wire(w).x.max_delta(global.wire(w).x));
      worst = std::max(worst, stepped.wire(w).z.max_delta(global.wire(w).z));
    }
    CAPTURE(seed);
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("simultaneous disjoint gates apply in one step, any order") {
  Circuit circuit;
  circuit.n = 4;
  circuit.add(GateInstance::hadamard(3, 1));
  circuit.add(GateInstance::hadamard(1, 1));
  circuit.add(GateInstance::cnot(2, 4, 1));
  circuit.validate();
  const FlowTrace trace = run_with_trace(circuit);
  CHECK(trace.snapshots.size() == 2);

  // equals the same gates applied in sequence on separate steps
  Circuit sequential;
  sequential.n = 4;
  sequential.add(GateInstance::hadamard(1, 1));
  sequential.add(GateInstance::cnot(2, 4, 2));
  sequential.add(GateInstance::hadamard(3, 3));
  const DescriptorSet a = trace.final();
  const DescriptorSet b = evolve(sequential);
  for (std::size_t w = 1; w <= 4; ++w) {
    CHECK(a.wire(w).x.key_equal(b.wire(w).x));
    CHECK(a.wire(w).z.key_equal(b.wire(w).z));
  }
}

TEST_CASE("same-step overlap is rejected by validation") {
  Circuit circuit;
  circuit.n = 3;
  circuit.add(GateInstance::hadamard(1, 1));
  circuit.add(GateInstance::cnot(1, 2, 1));
  CHECK_THROWS_AS(circuit.validate(), std::invalid_argument);
}

TEST_CASE("term budget guard") {
  PauliSum big(12);
  std::mt19937_64 rng(83);
  std::uniform_int_distribution<std::uint64_t> mask(0, (1ull << 12) - 1);
  for (int i = 0; i < 40; ++i) big.add_term({mask(rng), mask(rng)}, 1.0);
  CHECK_NOTHROW(check_term_budget(big));
  CHECK_THROWS_AS(check_term_budget(big, 10), std::runtime_error);
}

TEST_CASE("algebra preservation along every step of teleportation") {
  std::mt19937_64 rng(89);
  const Circuit circuit = build_teleportation(random_phi(rng));
  const FlowTrace trace = run_with_trace(circuit);
  const PauliSum id = PauliSum::identity(5);
  const PauliSum zero = PauliSum::zero(5);
  for (const auto& snap : trace.snapshots) {
    for (std::size_t w = 1; w <= 5; ++w) {
      CHECK((snap.wire(w).x * snap.wire(w).x).approx_equal(id, 1e-9));
      CHECK((snap.wire(w).z * snap.wire(w).z).approx_equal(id, 1e-9));
      // on-wire relation q_x q_y = i q_z
      const PauliSum lhs = snap.wire(w).x * snap.wire(w).y();
      CHECK(lhs.approx_equal(snap.wire(w).z.scaled(Complex{0, 1}), 1e-9));
    }
    for (std::size_t w = 1; w <= 5; ++w)
      for (std::size_t v = w + 1; v <= 5; ++v)
        CHECK(commutator(snap.wire(w).x, snap.wire(v).z)
                  .approx_equal(zero, 1e-9));
  }
}
