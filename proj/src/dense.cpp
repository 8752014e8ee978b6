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

#include "qnet/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qnet {

namespace {

void require_dense_width(std::size_t wires) {
  if (wires > kDenseWireLimit) {
    throw std::invalid_argument("width " + std::to_string(wires) +
                                " exceeds the dense limit of " +
                                std::to_string(kDenseWireLimit) + " wires");
  }
}

}  // namespace

Matrix Matrix::identity(std::size_t d) {
  Matrix m(d);
  for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) out.at(c, r) = std::conj(at(r, c));
  return out;
}

Complex Matrix::trace() const {
  Complex t{0, 0};
  for (std::size_t i = 0; i < dim; ++i) t += at(i, i);
  return t;
}

Matrix operator*(const Matrix& l, const Matrix& r) {
  if (l.dim != r.dim) throw std::invalid_argument("matrix dim mismatch");
  Matrix out(l.dim);
  for (std::size_t i = 0; i < l.dim; ++i) {
    for (std::size_t k = 0; k < l.dim; ++k) {
      const Complex v = l.at(i, k);
      if (v == Complex{0, 0}) continue;
      for (std::size_t j = 0; j < l.dim; ++j) out.at(i, j) += v * r.at(k, j);
    }
  }
  return out;
}

Matrix operator+(const Matrix& l, const Matrix& r) {
  if (l.dim != r.dim) throw std::invalid_argument("matrix dim mismatch");
  Matrix out = l;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += r.a[i];
  return out;
}

Matrix operator-(const Matrix& l, const Matrix& r) {
  if (l.dim != r.dim) throw std::invalid_argument("matrix dim mismatch");
  Matrix out = l;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] -= r.a[i];
  return out;
}

Matrix operator*(Complex c, const Matrix& m) {
  Matrix out = m;
  for (auto& v : out.a) v *= c;
  return out;
}

std::vector<Complex> Matrix::apply(const std::vector<Complex>& v) const {
  if (v.size() != dim) throw std::invalid_argument("matrix/vector mismatch");
  std::vector<Complex> out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    Complex acc{0, 0};
    for (std::size_t c = 0; c < dim; ++c) acc += at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

double Matrix::max_abs_diff(const Matrix& l, const Matrix& r) {
  if (l.dim != r.dim) throw std::invalid_argument("matrix dim mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < l.a.size(); ++i)
    worst = std::max(worst, std::abs(l.a[i] - r.a[i]));
  return worst;
}

bool Matrix::is_hermitian(double tol) const {
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = r; c < dim; ++c)
      if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) return false;
  return true;
}

bool Matrix::is_unitary(double tol) const {
  return max_abs_diff(*this * adjoint(), identity(dim)) <= tol;
}

std::uint64_t mask_to_index_space(std::uint64_t mask, std::size_t wires) {
  std::uint64_t out = 0;
  for (std::size_t w = 1; w <= wires; ++w) {
    if (mask & (1ull << (w - 1))) out |= index_bit(wires, w);
  }
  return out;
}

Matrix to_dense(const PauliSum& s) {
  require_dense_width(s.wires());
  const std::size_t dim = 1ull << s.wires();
  Matrix m(dim);
  for (const auto& [key, coeff] : s.sorted_terms()) {
    const std::uint64_t xf = mask_to_index_space(key.x, s.wires());
    const std::uint64_t zf = mask_to_index_space(key.z, s.wires());
    // word |b> = (-1)^{|z & b|} |b ^ x>
    for (std::uint64_t b = 0; b < dim; ++b) {
      const double sign = (std::popcount(zf & b) & 1) ? -1.0 : 1.0;
      m.at(b ^ xf, b) += coeff * sign;
    }
  }
  return m;
}

PauliSum pauli_decompose(const Matrix& m, std::size_t wires) {
  require_dense_width(wires);
  const std::size_t dim = 1ull << wires;
  if (m.dim != dim) throw std::invalid_argument("matrix dim != 2^wires");
  PauliSum out(wires);
  const double norm = 1.0 / static_cast<double>(dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    for (std::uint64_t z = 0; z < dim; ++z) {
      // tr(word^dagger M) = sum_b (-1)^{|z & b|} M[b ^ x][b], index space
      Complex t{0, 0};
      for (std::uint64_t b = 0; b < dim; ++b) {
        const double sign = (std::popcount(z & b) & 1) ? -1.0 : 1.0;
        t += sign * m.at(b ^ x, b);
      }
      const Complex coeff = t * norm;
      if (std::abs(coeff) >= kPruneTolerance) {
        // back to per-wire mask space
        std::uint64_t xm = 0, zm = 0;
        for (std::size_t w = 1; w <= wires; ++w) {
          if (x & index_bit(wires, w)) xm |= 1ull << (w - 1);
          if (z & index_bit(wires, w)) zm |= 1ull << (w - 1);
        }
        out.add_term({xm, zm}, coeff);
      }
    }
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(Matrix m) {
  const std::size_t n = m.dim;
  // Cyclic Jacobi on the Hermitian matrix; adequate for the <= 256-dim
  // density matrices this project inspects.
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(m.at(p, q));
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = m.at(p, q);
        if (std::abs(apq) < 1e-15) continue;
        const double app = m.at(p, p).real();
        const double aqq = m.at(q, q).real();
        // Unitary 2x2 rotation G = [[c, -conj(s)], [s, c]] annihilating
        // the (p,q) element, with the complex phase of apq absorbed in s.
        const double theta = 0.5 * std::atan2(2.0 * std::abs(apq), aqq - app);
        const double c = std::cos(theta);
        const Complex phase = apq / std::abs(apq);
        const Complex s = std::sin(theta) * phase;
        for (std::size_t k = 0; k < n; ++k) {  // right-multiply by G
          const Complex mkp = m.at(k, p), mkq = m.at(k, q);
          m.at(k, p) = c * mkp - std::conj(s) * mkq;
          m.at(k, q) = s * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // left-multiply by G^dagger
          const Complex mpk = m.at(p, k), mqk = m.at(q, k);
          m.at(p, k) = c * mpk - s * mqk;
          m.at(q, k) = std::conj(s) * mpk + c * mqk;
        }
      }
    }
  }
  std::vector<double> eigs(n);
  for (std::size_t i = 0; i < n; ++i) eigs[i] = m.at(i, i).real();
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

}  // namespace qnet
