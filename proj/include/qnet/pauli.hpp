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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qnet {

using Complex = std::complex<double>;

/// Coefficients with magnitude below this are dropped after every binary
/// operation on sums. All acceptance tolerances are >= 1e-9, so pruning at
/// 1e-12 only removes floating-point dust.
inline constexpr double kPruneTolerance = 1e-12;

/// Widths above this are rejected by dense conversions and the oracle
/// (4096-dimensional state space, well under 0.5 GB for a dense matrix).
inline constexpr std::size_t kDenseWireLimit = 12;

/// Returns i^k exactly, k taken mod 4.
Complex i_power(unsigned k);

/// Unsigned Pauli word over n wires in the symplectic encoding: bit (w-1) of
/// x_mask is set iff the factor on wire w contains sigma_x, likewise z_mask
/// for sigma_z. A wire with both bits set carries the product XZ (= -iY).
struct PauliKey {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  friend bool operator==(const PauliKey&, const PauliKey&) = default;
  friend auto operator<=>(const PauliKey&, const PauliKey&) = default;
};

struct PauliKeyHash {
  std::size_t operator()(const PauliKey& k) const noexcept;
};

/// One signed/phased tensor product of {I, X, Y, Z} over n wires.
///
/// The represented operator is i^phase_power * prod_w X_w^{x_w} Z_w^{z_w},
/// so Y on a wire is the key (1,1) with phase_power 1 (Y = iXZ). Equality of
/// (masks, phase_power) is equality of operators; no further canonicalization
/// is needed.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t wires) : n_(wires) {}
  PauliString(std::size_t wires, PauliKey key, unsigned phase_power)
      : n_(wires), key_(key), phase_(phase_power & 3u) {}

  static PauliString identity(std::size_t wires) { return PauliString(wires); }

  /// Single Pauli factor on a 1-indexed wire; axis is one of 'X', 'Y', 'Z'.
  static PauliString single(std::size_t wires, std::size_t wire, char axis);

  std::size_t wires() const { return n_; }
  const PauliKey& key() const { return key_; }
  std::uint64_t x_mask() const { return key_.x; }
  std::uint64_t z_mask() const { return key_.z; }
  unsigned phase_power() const { return phase_; }

  /// i^phase_power as an exact complex unit.
  Complex phase() const { return i_power(phase_); }

  bool is_identity() const {
    return key_.x == 0 && key_.z == 0 && phase_ == 0;
  }

  /// Exact operator product with symplectic phase bookkeeping.
  /// Throws std::invalid_argument on wire-count mismatch.
  friend PauliString operator*(const PauliString& a, const PauliString& b);

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::size_t n_ = 0;
  PauliKey key_{};
  unsigned phase_ = 0;  // exponent of the global i factor, mod 4
};

/// Complex-weighted sum of Pauli words; the representation of every operator
/// in the simulator (descriptor components, gates, observables).
///
/// The per-string phase is folded into the coefficient, so terms are keyed by
/// (x_mask, z_mask) alone and addition merges. Values are immutable once
/// built; all operations below are pure and return new sums.
class PauliSum {
 public:
  using Term = std::pair<PauliKey, Complex>;

  PauliSum() = default;
  explicit PauliSum(std::size_t wires) : n_(wires) {}

  static PauliSum zero(std::size_t wires) { return PauliSum(wires); }
  static PauliSum identity(std::size_t wires);
  static PauliSum from_string(const PauliString& s, Complex scale = 1.0);
  /// Single Pauli factor (proper Y, not XZ) on a 1-indexed wire.
  static PauliSum single(std::size_t wires, std::size_t wire, char axis,
                         Complex scale = 1.0);

  std::size_t wires() const { return n_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of a key (zero if absent). The coefficient multiplies the
  /// unsigned word prod X^x Z^z, i.e. Y-sites carry a folded factor of i.
  Complex coefficient(const PauliKey& key) const;

  /// Accumulates a term during construction; merges with an existing key.
  void add_term(const PauliKey& key, Complex coeff);

  /// Terms in canonical order: lexicographic on (x_mask, z_mask).
  std::vector<Term> sorted_terms() const;

  /// Union of wires with a non-identity factor in any term, as a bit mask.
  std::uint64_t support_mask() const;

  PauliSum scaled(Complex c) const;
  PauliSum adjoint() const;

  /// <0...0| S |0...0>: the sum of coefficients of the x_mask == 0 terms
  /// (every all-{I,Z} word has eigenvalue +1 on the reference state).
  Complex expectation_zero() const;

  /// Drops terms with |coefficient| < tol. Binary operators apply this with
  /// kPruneTolerance automatically.
  PauliSum pruned(double tol = kPruneTolerance) const;

  /// True iff both sums have identical key sets with bitwise-equal
  /// coefficients (the locality audit's notion of "unchanged").
  bool key_equal(const PauliSum& other) const;

  /// True iff all coefficients agree within tol over the union of keys.
  bool approx_equal(const PauliSum& other, double tol) const;

  /// Largest |a_k - b_k| over the union of keys.
  double max_delta(const PauliSum& other) const;

  friend PauliSum operator+(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator-(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator*(Complex c, const PauliSum& s) { return s.scaled(c); }
  friend PauliSum operator*(const PauliSum& s, Complex c) { return s.scaled(c); }
  friend PauliSum operator-(const PauliSum& s) { return s.scaled(-1.0); }

  /// Textual form, e.g. "(0.5+0i)*X1Z3 + (0-0.5i)*Y2". Terms appear in
  /// canonical order; sites with both bits set are displayed as proper Y
  /// with the coefficient adjusted accordingly. Wires are 1-indexed.
  std::string str() const;

  /// Parses the textual form back into a sum over `wires` wires.
  /// Accepts '*' or U+00B7 between coefficient and word, parenthesised
  /// "(re+imi)" coefficients or bare reals. Throws std::invalid_argument
  /// with a description on malformed input.
  static PauliSum parse(const std::string& text, std::size_t wires);

 private:
  std::size_t n_ = 0;
  std::unordered_map<PauliKey, Complex, PauliKeyHash> terms_;
};

/// Commutator [a, b] = ab - ba.
PauliSum commutator(const PauliSum& a, const PauliSum& b);

}  // namespace qnet
