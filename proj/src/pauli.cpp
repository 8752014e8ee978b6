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

#include "qnet/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qnet {

namespace {

void require_same_wires(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw std::invalid_argument(std::string(op) + ": wire-count mismatch (" +
                                std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

void require_wire_in_range(std::size_t wires, std::size_t wire) {
  if (wire < 1 || wire > wires) {
    throw std::invalid_argument("wire " + std::to_string(wire) +
                                " out of range [1, " + std::to_string(wires) +
                                "]");
  }
}

// Mask bits count as Y only when both x and z are set on a wire.
unsigned count_y_sites(const PauliKey& k) {
  return static_cast<unsigned>(std::popcount(k.x & k.z));
}

// Canonical number formatting: 12 significant digits, "-0" normalised away.
// Decimal strings of <= 15 digits round-trip through double exactly, so
// serialize(parse(.)) is the identity on canonical text.
std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop signed zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

Complex i_power(unsigned k) {
  switch (k & 3u) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::size_t PauliKeyHash::operator()(const PauliKey& k) const noexcept {
  // splitmix64 finalizer over the two words
  std::uint64_t h = k.x + 0x9e3779b97f4a7c15ull;
  h ^= k.z + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebull;
  h ^= h >> 31;
  return static_cast<std::size_t>(h);
}

PauliString PauliString::single(std::size_t wires, std::size_t wire,
                                char axis) {
  require_wire_in_range(wires, wire);
  const std::uint64_t bit = 1ull << (wire - 1);
  switch (axis) {
    case 'X': return PauliString(wires, {bit, 0}, 0);
    case 'Z': return PauliString(wires, {0, bit}, 0);
    case 'Y': return PauliString(wires, {bit, bit}, 1);  // Y = iXZ
    default:
      throw std::invalid_argument(std::string("unknown Pauli axis '") + axis +
                                  "'");
  }
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  require_same_wires(a.n_, b.n_, "PauliString product");
  // Per wire, (X^a Z^b)(X^c Z^d) = (-1)^{bc} X^{a+c} Z^{b+d}; the sign is
  // i^2 per crossing, tracked in the phase exponent.
  const unsigned crossings =
      static_cast<unsigned>(std::popcount(a.key_.z & b.key_.x));
  return PauliString(a.n_, {a.key_.x ^ b.key_.x, a.key_.z ^ b.key_.z},
                     a.phase_ + b.phase_ + 2 * crossings);
}

PauliSum PauliSum::identity(std::size_t wires) {
  PauliSum s(wires);
  s.add_term({0, 0}, 1.0);
  return s;
}

PauliSum PauliSum::from_string(const PauliString& s, Complex scale) {
  PauliSum out(s.wires());
  out.add_term(s.key(), scale * s.phase());
  return out;
}

PauliSum PauliSum::single(std::size_t wires, std::size_t wire, char axis,
                          Complex scale) {
  return from_string(PauliString::single(wires, wire, axis), scale);
}

Complex PauliSum::coefficient(const PauliKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

void PauliSum::add_term(const PauliKey& key, Complex coeff) {
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (std::abs(it->second) < kPruneTolerance) terms_.erase(it);
  } else if (std::abs(coeff) < kPruneTolerance) {
    terms_.erase(it);
  }
}

std::vector<PauliSum::Term> PauliSum::sorted_terms() const {
  std::vector<Term> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  return out;
}

std::uint64_t PauliSum::support_mask() const {
  std::uint64_t m = 0;
  for (const auto& [key, coeff] : terms_) m |= key.x | key.z;
  return m;
}

PauliSum PauliSum::scaled(Complex c) const {
  PauliSum out(n_);
  if (std::abs(c) == 0.0) return out;
  for (const auto& [key, coeff] : terms_) out.add_term(key, c * coeff);
  return out;
}

PauliSum PauliSum::adjoint() const {
  // (X^x Z^z)^dagger = (-1)^{#Y sites} X^x Z^z, so adjoint is coefficient
  // conjugation plus a sign on words with an odd number of XZ sites.
  PauliSum out(n_);
  for (const auto& [key, coeff] : terms_) {
    const double sign = (count_y_sites(key) & 1u) ? -1.0 : 1.0;
    out.add_term(key, sign * std::conj(coeff));
  }
  return out;
}

Complex PauliSum::expectation_zero() const {
  Complex total{0.0, 0.0};
  for (const auto& [key, coeff] : terms_) {
    if (key.x == 0) total += coeff;
  }
  return total;
}

PauliSum PauliSum::pruned(double tol) const {
  PauliSum out(n_);
  for (const auto& [key, coeff] : terms_) {
    if (std::abs(coeff) >= tol) out.terms_.emplace(key, coeff);
  }
  return out;
}

bool PauliSum::key_equal(const PauliSum& other) const {
  if (n_ != other.n_ || terms_.size() != other.terms_.size()) return false;
  for (const auto& [key, coeff] : terms_) {
    auto it = other.terms_.find(key);
    if (it == other.terms_.end()) return false;
    if (coeff.real() != it->second.real() || coeff.imag() != it->second.imag())
      return false;
  }
  return true;
}

bool PauliSum::approx_equal(const PauliSum& other, double tol) const {
  return max_delta(other) <= tol;
}

double PauliSum::max_delta(const PauliSum& other) const {
  double worst = 0.0;
  for (const auto& [key, coeff] : terms_) {
    worst = std::max(worst, std::abs(coeff - other.coefficient(key)));
  }
  for (const auto& [key, coeff] : other.terms_) {
    worst = std::max(worst, std::abs(coeff - coefficient(key)));
  }
  return worst;
}

PauliSum operator+(const PauliSum& a, const PauliSum& b) {
  require_same_wires(a.n_, b.n_, "PauliSum add");
  PauliSum out = a;
  for (const auto& [key, coeff] : b.terms_) out.add_term(key, coeff);
  return out;
}

PauliSum operator-(const PauliSum& a, const PauliSum& b) {
  require_same_wires(a.n_, b.n_, "PauliSum subtract");
  PauliSum out = a;
  for (const auto& [key, coeff] : b.terms_) out.add_term(key, -coeff);
  return out;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  require_same_wires(a.n_, b.n_, "PauliSum product");
  PauliSum out(a.n_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const unsigned crossings =
          static_cast<unsigned>(std::popcount(ka.z & kb.x));
      const Complex phase = i_power(2 * crossings);
      out.add_term({ka.x ^ kb.x, ka.z ^ kb.z}, ca * cb * phase);
    }
  }
  return out.pruned();
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  return a * b - b * a;
}

std::string PauliSum::str() const {
  const auto terms = sorted_terms();
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, coeff] : terms) {
    // Display Y sites as proper Y: each XZ site is -iY, so the displayed
    // coefficient absorbs one factor of (-i) = i^3 per Y site.
    const Complex display = coeff * i_power(3u * count_y_sites(key));
    if (!first) out << " + ";
    first = false;
    out << '(' << format_double(display.real())
        << (display.imag() < 0.0 ? "-" : "+")
        << format_double(std::abs(display.imag())) << "i)*";
    if (key.x == 0 && key.z == 0) {
      out << 'I';
      continue;
    }
    for (std::size_t w = 1; w <= n_; ++w) {
      const std::uint64_t bit = 1ull << (w - 1);
      const bool x = key.x & bit, z = key.z & bit;
      if (x && z) out << 'Y' << w;
      else if (x) out << 'X' << w;
      else if (z) out << 'Z' << w;
    }
  }
  return out.str();
}

namespace {

struct TextCursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_spaces() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("PauliSum parse error at offset " +
                                std::to_string(pos) + ": " + msg);
  }

  double read_double() {
    std::size_t consumed = 0;
    double v = 0;
    try {
      v = std::stod(text.substr(pos), &consumed);
    } catch (const std::exception&) {
      fail("expected a number");
    }
    pos += consumed;
    return v;
  }

  Complex read_coefficient() {
    skip_spaces();
    if (peek() == '(') {
      ++pos;
      const double re = read_double();
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      const double sign = (text[pos] == '-') ? -1.0 : 1.0;
      ++pos;
      const double im = read_double();
      if (peek() != 'i') fail("expected 'i'");
      ++pos;
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return {re, sign * im};
    }
    return {read_double(), 0.0};
  }
};

}  // namespace

PauliSum PauliSum::parse(const std::string& text, std::size_t wires) {
  TextCursor cur{text};
  cur.skip_spaces();
  PauliSum out(wires);
  if (text.empty()) throw std::invalid_argument("empty PauliSum text");
  if (cur.peek() == '0') {
    cur.pos++;
    cur.skip_spaces();
    if (cur.done()) return out;
    cur.pos = 0;  // not the zero literal after all (e.g. "0.5*...")
  }
  while (true) {
    Complex coeff = cur.read_coefficient();
    cur.skip_spaces();
    // separator between coefficient and word: '*' or UTF-8 middle dot
    if (cur.peek() == '*') {
      ++cur.pos;
    } else if (static_cast<unsigned char>(cur.peek()) == 0xC2 &&
               cur.pos + 1 < text.size() &&
               static_cast<unsigned char>(text[cur.pos + 1]) == 0xB7) {
      cur.pos += 2;
    } else {
      cur.fail("expected '*' between coefficient and Pauli word");
    }
    cur.skip_spaces();
    PauliKey key{};
    unsigned y_sites = 0;
    if (cur.peek() == 'I') {
      ++cur.pos;
    } else {
      bool any = false;
      while (cur.peek() == 'X' || cur.peek() == 'Y' || cur.peek() == 'Z') {
        const char axis = text[cur.pos++];
        if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
          cur.fail("expected wire index after Pauli letter");
        std::size_t wire = 0;
        while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
          wire = wire * 10 + static_cast<std::size_t>(text[cur.pos++] - '0');
        }
        require_wire_in_range(wires, wire);
        const std::uint64_t bit = 1ull << (wire - 1);
        if ((key.x | key.z) & bit)
          cur.fail("wire " + std::to_string(wire) + " repeated in word");
        if (axis == 'X') key.x |= bit;
        if (axis == 'Z') key.z |= bit;
        if (axis == 'Y') {
          key.x |= bit;
          key.z |= bit;
          ++y_sites;
        }
        any = true;
      }
      if (!any) cur.fail("expected Pauli word");
    }
    // Undo the display convention: Y = iXZ per Y site.
    out.add_term(key, coeff * i_power(y_sites));
    cur.skip_spaces();
    if (cur.done()) break;
    if (cur.peek() != '+') cur.fail("expected '+' between terms");
    ++cur.pos;
    cur.skip_spaces();
  }
  return out;
}

}  // namespace qnet
