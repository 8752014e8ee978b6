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

#include <stdexcept>
#include <string>

#include "qnet/circuit.hpp"

namespace qnet {

/// Diagnostic for a malformed circuit file. `syntax` covers unreadable
/// input (bad tokens, unknown gate names, malformed numbers); `semantic`
/// covers well-formed input that violates the format's rules (wire out of
/// range, duplicate wires, parameters outside their domain, time going
/// backwards on a wire).
class CircuitParseError : public std::runtime_error {
 public:
  enum class Code { kSyntax, kSemantic };

  CircuitParseError(Code code, int line, int column, const std::string& what);

  Code code() const { return code_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  Code code_;
  int line_;
  int column_;
};

/// Parses the circuit text format:
///
///   # comment
///   wires N
///   t=<step> <gate> <wire list> [key=value params]
///
/// Gate names: h, cnot, cz, x, z, prep, prep_eta, raw. Wires are 1-indexed,
/// control first. prep takes phi=a,b,c with phi2 in [0, pi/2] and phi1,
/// phi3 in [0, pi); prep_eta takes alpha=a beta=re,im eta=re,im; raw takes
/// sum=<PauliSum text> as the rest of the line. Both preparations accept an
/// optional id=<name> parameter identifier.
Circuit parse_circuit(const std::string& text);

/// Canonical text form; parse(serialize(c)) reproduces the circuit and
/// serialize(parse(t)) is the identity on canonical text.
std::string serialize_circuit(const Circuit& circuit);

Circuit load_circuit_file(const std::string& path);
void save_circuit_file(const Circuit& circuit, const std::string& path);

}  // namespace qnet
