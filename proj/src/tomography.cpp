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

#include "qnet/tomography.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qnet {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_sorted_wires(const DescriptorSet& set,
                          const std::vector<std::size_t>& wires) {
  if (wires.empty()) throw std::invalid_argument("empty wire subset");
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (wires[i] < 1 || wires[i] > set.n)
      throw std::invalid_argument("wire " + std::to_string(wires[i]) +
                                  " out of range");
    if (i > 0 && wires[i] <= wires[i - 1])
      throw std::invalid_argument("wire subset must be strictly ascending");
  }
}

}  // namespace

double DensityMatrix::purity() const {
  return (entries * entries).trace().real();
}

void DensityMatrix::validate(double tol) const {
  if (!entries.is_hermitian(tol))
    throw std::runtime_error("density matrix is not Hermitian");
  if (std::abs(trace() - Complex{1.0, 0.0}) > tol)
    throw std::runtime_error("density matrix trace differs from 1");
  const auto eigs = hermitian_eigenvalues(entries);
  if (!eigs.empty() && eigs.front() < -tol)
    throw std::runtime_error("density matrix has a negative eigenvalue (" +
                             std::to_string(eigs.front()) + ")");
}

std::array<double, 3> bloch_components(const DescriptorSet& set,
                                       std::size_t k) {
  if (k < 1 || k > set.n) throw std::invalid_argument("wire out of range");
  const Descriptor& q = set.wire(k);
  const std::array<Complex, 3> raw = {q.x.expectation_zero(),
                                      q.y().expectation_zero(),
                                      q.z.expectation_zero()};
  std::array<double, 3> p{};
  double len2 = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(raw[i].imag()) > 1e-9)
      throw std::runtime_error("Bloch component has an imaginary part");
    p[i] = raw[i].real();
    len2 += p[i] * p[i];
  }
  if (len2 > 1.0 + 1e-9)
    throw std::runtime_error("Bloch vector longer than 1");
  return p;
}

DensityMatrix reduced_density(const DescriptorSet& set,
                              const std::vector<std::size_t>& wires) {
  require_sorted_wires(set, wires);
  if (wires.size() > 8)
    throw std::invalid_argument("reduced_density caps subsets at 8 wires");
  const std::size_t k = wires.size();
  const std::size_t dim = 1ull << k;
  DensityMatrix rho;
  rho.dim = dim;
  rho.wires = wires;
  rho.entries = Matrix(dim);

  // Enumerate all 4^k Pauli words over the subset. Local key bits: bit j
  // corresponds to wires[j].
  for (std::uint64_t lx = 0; lx < dim; ++lx) {
    for (std::uint64_t lz = 0; lz < dim; ++lz) {
      // Hermitian word P = i^{#Y} X^x Z^z, substituted at current time.
      PauliSum p_t = PauliSum::identity(set.n);
      for (std::size_t j = 0; j < k; ++j) {
        const std::uint64_t bit = 1ull << j;
        if (lx & bit) p_t = p_t * set.wire(wires[j]).x;
        if (lz & bit) p_t = p_t * set.wire(wires[j]).z;
      }
      const unsigned n_y = static_cast<unsigned>(std::popcount(lx & lz));
      const Complex expectation =
          i_power(n_y) * p_t.expectation_zero();
      if (std::abs(expectation) < kPruneTolerance) continue;

      // Accumulate expectation * P / 2^k into the dense matrix, with the
      // subset's own index space (wires[0] = most significant bit).
      std::uint64_t xf = 0, zf = 0;
      for (std::size_t j = 0; j < k; ++j) {
        const std::uint64_t bit = 1ull << j;
        if (lx & bit) xf |= 1ull << (k - 1 - j);
        if (lz & bit) zf |= 1ull << (k - 1 - j);
      }
      const Complex scale =
          expectation * i_power(n_y) / static_cast<double>(dim);
      for (std::uint64_t b = 0; b < dim; ++b) {
        const double sign = (std::popcount(zf & b) & 1) ? -1.0 : 1.0;
        rho.entries.at(b ^ xf, b) += scale * sign;
      }
    }
  }
  return rho;
}

std::vector<OutcomeVerdict> definite_outcomes(
    const DescriptorSet& set, const std::vector<PauliSum>& observables) {
  std::vector<OutcomeVerdict> out;
  out.reserve(observables.size());
  for (const auto& obs : observables) {
    if (obs.wires() != set.n)
      throw std::invalid_argument("observable width mismatch");
    OutcomeVerdict v;
    v.expectation = obs.expectation_zero();
    v.is_involutory =
        (obs * obs).approx_equal(PauliSum::identity(set.n), 1e-9);
    v.is_definite =
        v.is_involutory && std::abs(std::abs(v.expectation) - 1.0) <= 1e-9;
    out.push_back(v);
  }
  return out;
}

}  // namespace qnet
