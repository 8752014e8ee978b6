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

#include "qnet/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qnet/gates.hpp"

namespace qnet {

StateVector StateVector::zero_state(std::size_t n) {
  if (n < 1) throw std::invalid_argument("need at least one wire");
  if (n > kDenseWireLimit)
    throw std::invalid_argument("width exceeds the dense limit of " +
                                std::to_string(kDenseWireLimit));
  StateVector s;
  s.n = n;
  s.amplitudes.assign(1ull << n, Complex{0.0, 0.0});
  s.amplitudes[0] = 1.0;
  return s;
}

double StateVector::norm() const {
  double total = 0.0;
  for (const auto& a : amplitudes) total += std::norm(a);
  return std::sqrt(total);
}

void StateVector::apply_sum(const PauliSum& op) {
  if (op.wires() != n) throw std::invalid_argument("operator width mismatch");
  const std::size_t dim = amplitudes.size();
  std::vector<Complex> out(dim, Complex{0.0, 0.0});
  for (const auto& [key, coeff] : op.sorted_terms()) {
    const std::uint64_t xf = mask_to_index_space(key.x, n);
    const std::uint64_t zf = mask_to_index_space(key.z, n);
    for (std::uint64_t b = 0; b < dim; ++b) {
      const double sign = (std::popcount(zf & b) & 1) ? -1.0 : 1.0;
      out[b ^ xf] += coeff * sign * amplitudes[b];
    }
  }
  amplitudes = std::move(out);
  // Gates are unitary; renormalising here only removes accumulated
  // floating-point drift.
  const double nrm = norm();
  if (std::abs(nrm - 1.0) > 1e-9)
    throw std::runtime_error("state norm drifted to " + std::to_string(nrm));
  for (auto& a : amplitudes) a /= nrm;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.n != b.n) throw std::invalid_argument("state width mismatch");
  Complex overlap{0.0, 0.0};
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
    overlap += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return std::abs(overlap);
}

StateVector simulate(const Circuit& circuit) {
  StateVector state = StateVector::zero_state(circuit.n);
  for (const auto& [t, gates] : circuit.steps()) {
    for (const GateInstance* g : gates)
      state.apply_sum(functional_rep(*g, circuit.n));
  }
  return state;
}

std::vector<StateVector> simulate_with_snapshots(const Circuit& circuit) {
  std::vector<StateVector> out;
  StateVector state = StateVector::zero_state(circuit.n);
  out.push_back(state);
  for (const auto& [t, gates] : circuit.steps()) {
    for (const GateInstance* g : gates)
      state.apply_sum(functional_rep(*g, circuit.n));
    out.push_back(state);
  }
  return out;
}

DensityMatrix partial_trace(const StateVector& state,
                            const std::vector<std::size_t>& wires) {
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (wires[i] < 1 || wires[i] > state.n)
      throw std::invalid_argument("wire out of range");
    if (i > 0 && wires[i] <= wires[i - 1])
      throw std::invalid_argument("wire subset must be strictly ascending");
  }
  const std::size_t k = wires.size();
  const std::size_t dim = 1ull << k;
  const std::size_t full = state.amplitudes.size();
  DensityMatrix rho;
  rho.dim = dim;
  rho.wires = wires;
  rho.entries = Matrix(dim);

  // For each full-basis index, its subset part r and environment part live
  // in disjoint bits; rho[r][r'] sums psi_b conj(psi_{b'}) over matching
  // environments.
  auto subset_part = [&](std::uint64_t b) {
    std::uint64_t r = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (b & index_bit(state.n, wires[j])) r |= 1ull << (k - 1 - j);
    }
    return r;
  };
  auto with_subset = [&](std::uint64_t b, std::uint64_t r) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint64_t bit = index_bit(state.n, wires[j]);
      if (r & (1ull << (k - 1 - j))) b |= bit;
      else b &= ~bit;
    }
    return b;
  };

  for (std::uint64_t b = 0; b < full; ++b) {
    const Complex amp = state.amplitudes[b];
    if (amp == Complex{0.0, 0.0}) continue;
    const std::uint64_t r = subset_part(b);
    for (std::uint64_t rp = 0; rp < dim; ++rp) {
      const Complex other = state.amplitudes[with_subset(b, rp)];
      if (other == Complex{0.0, 0.0}) continue;
      rho.entries.at(r, rp) += amp * std::conj(other);
    }
  }
  return rho;
}

bool eta_invariance_check(double alpha, Complex beta, Complex eta1,
                          Complex eta2, const Circuit& suffix,
                          const Circuit* prefix) {
  auto build = [&](Complex eta) {
    Circuit c;
    c.n = suffix.n;
    int t = 0;
    if (prefix != nullptr) {
      if (prefix->n != suffix.n)
        throw std::invalid_argument("prefix/suffix width mismatch");
      for (const auto& g : prefix->gates) {
        GateInstance copy = g;
        c.add(std::move(copy));
        t = std::max(t, g.time_step);
      }
    }
    c.add(GateInstance::prep_eta(1, alpha, beta, eta, t + 1));
    for (const auto& g : suffix.gates) {
      GateInstance copy = g;
      copy.time_step += t + 1;
      c.add(std::move(copy));
    }
    return c;
  };
  const StateVector s1 = simulate(build(eta1));
  const StateVector s2 = simulate(build(eta2));
  return fidelity(s1, s2) >= 1.0 - 1e-9;
}

}  // namespace qnet
