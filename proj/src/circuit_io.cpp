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

#include "qnet/circuit_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <vector>

namespace qnet {

namespace {

constexpr double kPi = std::numbers::pi;

struct Token {
  std::string text;
  int column = 0;  // 1-indexed
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

class LineParser {
 public:
  LineParser(int line_no, std::vector<Token> tokens)
      : line_(line_no), tokens_(std::move(tokens)) {}

  [[noreturn]] void syntax(int column, const std::string& msg) const {
    throw CircuitParseError(CircuitParseError::Code::kSyntax, line_, column,
                            msg);
  }
  [[noreturn]] void semantic(int column, const std::string& msg) const {
    throw CircuitParseError(CircuitParseError::Code::kSemantic, line_, column,
                            msg);
  }

  bool done() const { return next_ >= tokens_.size(); }
  const Token& peek() const {
    if (done()) syntax(end_column(), "unexpected end of line");
    return tokens_[next_];
  }
  Token take() {
    const Token& t = peek();
    ++next_;
    return t;
  }
  int end_column() const {
    if (tokens_.empty()) return 1;
    const Token& last = tokens_.back();
    return last.column + static_cast<int>(last.text.size());
  }
  int line() const { return line_; }

  double parse_double(const std::string& text, int column) const {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      syntax(column, "expected a number, got '" + text + "'");
    }
    if (used != text.size())
      syntax(column + static_cast<int>(used), "trailing characters in number");
    return v;
  }

  std::vector<double> parse_double_list(const std::string& text, int column,
                                        std::size_t count) const {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string piece;
    int offset = 0;
    while (std::getline(ss, piece, ',')) {
      values.push_back(parse_double(piece, column + offset));
      offset += static_cast<int>(piece.size()) + 1;
    }
    if (values.size() != count)
      syntax(column, "expected " + std::to_string(count) +
                         " comma-separated numbers");
    return values;
  }

 private:
  int line_;
  std::vector<Token> tokens_;
  std::size_t next_ = 0;
};

// key=value parameter token; returns (key, value, value column)
struct KeyValue {
  std::string key;
  std::string value;
  int value_column;
};

KeyValue split_key_value(const LineParser& p, const Token& token) {
  const auto eq = token.text.find('=');
  if (eq == std::string::npos)
    p.syntax(token.column, "expected key=value, got '" + token.text + "'");
  return {token.text.substr(0, eq), token.text.substr(eq + 1),
          token.column + static_cast<int>(eq) + 1};
}

}  // namespace

CircuitParseError::CircuitParseError(Code code, int line, int column,
                                     const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " +
                         (code == Code::kSyntax ? "syntax" : "semantic") +
                         " error: " + what),
      code_(code),
      line_(line),
      column_(column) {}

Circuit parse_circuit(const std::string& text) {
  Circuit circuit;
  bool header_seen = false;
  std::map<std::size_t, int> last_time_on_wire;

  std::stringstream stream(text);
  std::string raw_line;
  int line_no = 0;
  while (std::getline(stream, raw_line)) {
    ++line_no;
    if (!raw_line.empty() && raw_line.back() == '\r') raw_line.pop_back();
    auto tokens = tokenize(raw_line);
    if (tokens.empty()) continue;
    LineParser p(line_no, tokens);

    if (!header_seen) {
      const Token head = p.take();
      if (head.text != "wires")
        p.syntax(head.column, "expected 'wires N' header");
      const Token count = p.take();
      const double n = p.parse_double(count.text, count.column);
      if (n < 1 || n != std::floor(n) || n > 64)
        p.semantic(count.column, "wire count must be an integer in [1, 64]");
      circuit.n = static_cast<std::size_t>(n);
      if (!p.done()) p.syntax(p.peek().column, "unexpected trailing token");
      header_seen = true;
      continue;
    }

    // t=<step>
    const Token t_tok = p.take();
    if (t_tok.text.rfind("t=", 0) != 0)
      p.syntax(t_tok.column, "expected 't=<step>'");
    const double t_val = p.parse_double(t_tok.text.substr(2), t_tok.column + 2);
    if (t_val < 1 || t_val != std::floor(t_val))
      p.semantic(t_tok.column + 2, "time step must be a positive integer");
    const int t = static_cast<int>(t_val);

    // gate name
    const Token name = p.take();
    const auto kind = gate_kind_from_name(name.text);
    if (!kind.has_value())
      p.syntax(name.column, "unknown gate '" + name.text + "'");

    // wire list
    std::vector<std::size_t> wires;
    std::vector<int> wire_columns;
    while (!p.done() && p.peek().text.find('=') == std::string::npos) {
      const Token w = p.take();
      const double v = p.parse_double(w.text, w.column);
      if (v < 1 || v != std::floor(v))
        p.syntax(w.column, "wire indices are positive integers");
      wires.push_back(static_cast<std::size_t>(v));
      wire_columns.push_back(w.column);
    }
    const std::size_t expected_arity =
        (*kind == GateKind::kCnot || *kind == GateKind::kCz) ? 2
        : *kind == GateKind::kRaw ? wires.size()
                                  : 1;
    if (*kind == GateKind::kRaw && wires.empty())
      p.semantic(name.column, "raw gate needs at least one wire");
    if (wires.size() != expected_arity)
      p.semantic(name.column, std::string(gate_name(*kind)) + " takes " +
                                  std::to_string(expected_arity) + " wire(s)");
    for (std::size_t i = 0; i < wires.size(); ++i) {
      if (wires[i] > circuit.n)
        p.semantic(wire_columns[i], "wire " + std::to_string(wires[i]) +
                                        " out of range (circuit has " +
                                        std::to_string(circuit.n) + ")");
      for (std::size_t j = 0; j < i; ++j)
        if (wires[i] == wires[j])
          p.semantic(wire_columns[i],
                     "wire " + std::to_string(wires[i]) + " repeated");
    }

    // key=value parameters
    GateInstance gate;
    gate.kind = *kind;
    gate.wires = wires;
    gate.time_step = t;
    bool saw_phi = false, saw_alpha = false, saw_beta = false, saw_eta = false,
         saw_sum = false;
    while (!p.done()) {
      const Token tok = p.take();
      const KeyValue kv = split_key_value(p, tok);
      if (kv.key == "phi" && *kind == GateKind::kPrep) {
        const auto v = p.parse_double_list(kv.value, kv.value_column, 3);
        gate.phi = {v[0], v[1], v[2]};
        saw_phi = true;
      } else if (kv.key == "alpha" && *kind == GateKind::kPrepEta) {
        gate.alpha = p.parse_double(kv.value, kv.value_column);
        saw_alpha = true;
      } else if (kv.key == "beta" && *kind == GateKind::kPrepEta) {
        const auto v = p.parse_double_list(kv.value, kv.value_column, 2);
        gate.beta = {v[0], v[1]};
        saw_beta = true;
      } else if (kv.key == "eta" && *kind == GateKind::kPrepEta) {
        const auto v = p.parse_double_list(kv.value, kv.value_column, 2);
        gate.eta = {v[0], v[1]};
        saw_eta = true;
      } else if (kv.key == "id" && (*kind == GateKind::kPrep ||
                                    *kind == GateKind::kPrepEta)) {
        gate.param_id = kv.value;
      } else if (kv.key == "sum" && *kind == GateKind::kRaw) {
        // the sum expression is the rest of the line
        std::string sum_text = kv.value;
        while (!p.done()) sum_text += " " + p.take().text;
        try {
          gate.raw = PauliSum::parse(sum_text, circuit.n);
        } catch (const std::invalid_argument& e) {
          p.syntax(kv.value_column, e.what());
        }
        saw_sum = true;
      } else {
        p.syntax(tok.column, "unknown parameter '" + kv.key + "' for gate '" +
                                 gate_name(*kind) + "'");
      }
    }

    // per-kind requirements and domains
    if (*kind == GateKind::kPrep) {
      if (!saw_phi) p.semantic(p.end_column(), "prep requires phi=a,b,c");
      if (gate.param_id.empty()) gate.param_id = "phi";
      if (gate.phi[0] < 0 || gate.phi[0] >= kPi || gate.phi[2] < 0 ||
          gate.phi[2] >= kPi || gate.phi[1] < 0 || gate.phi[1] > kPi / 2)
        p.semantic(p.end_column(),
                   "phi outside the fundamental domain: phi1, phi3 in "
                   "[0, pi), phi2 in [0, pi/2]");
    }
    if (*kind == GateKind::kPrepEta) {
      if (!saw_alpha || !saw_beta || !saw_eta)
        p.semantic(p.end_column(),
                   "prep_eta requires alpha=, beta=re,im and eta=re,im");
      if (gate.param_id.empty()) gate.param_id = "psi";
      gate.eta_param_id =
          gate.param_id == "psi" ? "eta" : gate.param_id + "_eta";
      const double norm = gate.alpha * gate.alpha + std::norm(gate.beta);
      if (gate.alpha < 0 || std::abs(norm - 1.0) > 1e-9)
        p.semantic(p.end_column(),
                   "prep_eta needs alpha >= 0 with alpha^2 + |beta|^2 = 1");
      if (std::abs(std::abs(gate.eta) - 1.0) > 1e-9)
        p.semantic(p.end_column(), "prep_eta needs |eta| = 1");
    }
    if (*kind == GateKind::kRaw) {
      if (!saw_sum) p.semantic(p.end_column(), "raw requires sum=<operator>");
      std::uint64_t allowed = 0;
      for (std::size_t w : wires) allowed |= 1ull << (w - 1);
      if (gate.raw->support_mask() & ~allowed)
        p.semantic(p.end_column(), "raw operator acts outside listed wires");
      if (!(gate.raw->adjoint() * *gate.raw)
               .approx_equal(PauliSum::identity(circuit.n), 1e-9))
        p.semantic(p.end_column(), "raw operator is not unitary");
    }

    // time monotonicity per wire; one gate per wire per step
    for (std::size_t i = 0; i < wires.size(); ++i) {
      auto it = last_time_on_wire.find(wires[i]);
      if (it != last_time_on_wire.end() && it->second >= t)
        p.semantic(wire_columns[i],
                   "wire " + std::to_string(wires[i]) +
                       " already has a gate at or after step " +
                       std::to_string(t));
      last_time_on_wire[wires[i]] = t;
    }

    circuit.add(std::move(gate));
  }

  if (!header_seen)
    throw CircuitParseError(CircuitParseError::Code::kSyntax, line_no + 1, 1,
                            "missing 'wires N' header");
  circuit.validate();
  return circuit;
}

std::string serialize_circuit(const Circuit& circuit) {
  std::ostringstream out;
  out << "wires " << circuit.n << "\n";
  for (const auto& g : circuit.gates) {
    out << "t=" << g.time_step << ' ' << gate_name(g.kind);
    for (std::size_t w : g.wires) out << ' ' << w;
    switch (g.kind) {
      case GateKind::kPrep:
        out << " phi=" << format_double(g.phi[0]) << ','
            << format_double(g.phi[1]) << ',' << format_double(g.phi[2]);
        if (g.param_id != "phi") out << " id=" << g.param_id;
        break;
      case GateKind::kPrepEta:
        out << " alpha=" << format_double(g.alpha)
            << " beta=" << format_double(g.beta.real()) << ','
            << format_double(g.beta.imag())
            << " eta=" << format_double(g.eta.real()) << ','
            << format_double(g.eta.imag());
        if (g.param_id != "psi") out << " id=" << g.param_id;
        break;
      case GateKind::kRaw:
        out << " sum=" << g.raw->str();
        break;
      default:
        break;
    }
    out << "\n";
  }
  return out.str();
}

Circuit load_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open circuit file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_circuit(buf.str());
}

void save_circuit_file(const Circuit& circuit, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write circuit file: " + path);
  out << serialize_circuit(circuit);
}

}  // namespace qnet
