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

#include <cstddef>
#include <vector>

#include "qnet/pauli.hpp"

namespace qnet {

/// Small dense complex matrix, row-major. Only used at desk scale
/// (dim <= 2^kDenseWireLimit); no attempt at performance beyond that.
struct Matrix {
  std::size_t dim = 0;
  std::vector<Complex> a;

  Matrix() = default;
  explicit Matrix(std::size_t d) : dim(d), a(d * d) {}

  static Matrix identity(std::size_t d);

  Complex& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  const Complex& at(std::size_t r, std::size_t c) const {
    return a[r * dim + c];
  }

  Matrix adjoint() const;
  Complex trace() const;

  friend Matrix operator*(const Matrix& l, const Matrix& r);
  friend Matrix operator+(const Matrix& l, const Matrix& r);
  friend Matrix operator-(const Matrix& l, const Matrix& r);
  friend Matrix operator*(Complex c, const Matrix& m);

  std::vector<Complex> apply(const std::vector<Complex>& v) const;

  /// max_ij |l_ij - r_ij|
  static double max_abs_diff(const Matrix& l, const Matrix& r);

  bool is_hermitian(double tol) const;
  /// ||U U^dagger - I||_max <= tol
  bool is_unitary(double tol) const;
};

/// Bit of the dense index carrying wire w (1-indexed): wire 1 is the
/// leftmost tensor factor, i.e. the most significant bit. Fixed repo-wide.
inline std::uint64_t index_bit(std::size_t wires, std::size_t wire) {
  return 1ull << (wires - wire);
}

/// Converts a per-wire mask (bit w-1 = wire w) into dense-index bit space.
std::uint64_t mask_to_index_space(std::uint64_t mask, std::size_t wires);

/// Exact Kronecker expansion of a sum; linear in term count.
/// Throws std::invalid_argument above kDenseWireLimit wires.
Matrix to_dense(const PauliSum& s);

/// Inverse of to_dense: coefficients c(x,z) = tr(word^dagger M) / 2^n over
/// all 4^n Pauli words, pruned at kPruneTolerance.
PauliSum pauli_decompose(const Matrix& m, std::size_t wires);

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, ascending.
std::vector<double> hermitian_eigenvalues(Matrix m);

}  // namespace qnet
