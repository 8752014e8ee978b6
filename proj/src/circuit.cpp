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

#include "qnet/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qnet {

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::kHadamard: return "h";
    case GateKind::kCnot: return "cnot";
    case GateKind::kCz: return "cz";
    case GateKind::kPauliX: return "x";
    case GateKind::kPauliZ: return "z";
    case GateKind::kPrep: return "prep";
    case GateKind::kPrepEta: return "prep_eta";
    case GateKind::kRaw: return "raw";
  }
  return "?";
}

std::optional<GateKind> gate_kind_from_name(const std::string& name) {
  if (name == "h") return GateKind::kHadamard;
  if (name == "cnot") return GateKind::kCnot;
  if (name == "cz") return GateKind::kCz;
  if (name == "x") return GateKind::kPauliX;
  if (name == "z") return GateKind::kPauliZ;
  if (name == "prep") return GateKind::kPrep;
  if (name == "prep_eta") return GateKind::kPrepEta;
  if (name == "raw") return GateKind::kRaw;
  return std::nullopt;
}

std::set<std::string> GateInstance::parameter_ids() const {
  std::set<std::string> ids;
  if (kind == GateKind::kPrep) ids.insert(param_id);
  if (kind == GateKind::kPrepEta) {
    ids.insert(param_id);
    ids.insert(eta_param_id);
  }
  return ids;
}

GateInstance GateInstance::hadamard(std::size_t wire, int t) {
  GateInstance g;
  g.kind = GateKind::kHadamard;
  g.wires = {wire};
  g.time_step = t;
  return g;
}

GateInstance GateInstance::cnot(std::size_t control, std::size_t target,
                                int t) {
  GateInstance g;
  g.kind = GateKind::kCnot;
  g.wires = {control, target};
  g.time_step = t;
  return g;
}

GateInstance GateInstance::cz(std::size_t a, std::size_t b, int t) {
  GateInstance g;
  g.kind = GateKind::kCz;
  g.wires = {a, b};
  g.time_step = t;
  return g;
}

GateInstance GateInstance::pauli_x(std::size_t wire, int t) {
  GateInstance g;
  g.kind = GateKind::kPauliX;
  g.wires = {wire};
  g.time_step = t;
  return g;
}

GateInstance GateInstance::pauli_z(std::size_t wire, int t) {
  GateInstance g;
  g.kind = GateKind::kPauliZ;
  g.wires = {wire};
  g.time_step = t;
  return g;
}

GateInstance GateInstance::prep(std::size_t wire, std::array<double, 3> phi,
                                int t, std::string param_id) {
  GateInstance g;
  g.kind = GateKind::kPrep;
  g.wires = {wire};
  g.time_step = t;
  g.phi = phi;
  g.param_id = std::move(param_id);
  return g;
}

GateInstance GateInstance::prep_eta(std::size_t wire, double alpha,
                                    Complex beta, Complex eta, int t,
                                    std::string param_id,
                                    std::string eta_param_id) {
  GateInstance g;
  g.kind = GateKind::kPrepEta;
  g.wires = {wire};
  g.time_step = t;
  g.alpha = alpha;
  g.beta = beta;
  g.eta = eta;
  g.param_id = std::move(param_id);
  g.eta_param_id = std::move(eta_param_id);
  return g;
}

GateInstance GateInstance::raw_gate(std::vector<std::size_t> wires,
                                    PauliSum sum, int t) {
  GateInstance g;
  g.kind = GateKind::kRaw;
  g.wires = std::move(wires);
  g.time_step = t;
  g.raw = std::move(sum);
  return g;
}

std::string Circuit::wire_label(std::size_t wire) const {
  if (!wire_labels.empty() && wire >= 1 && wire <= wire_labels.size())
    return wire_labels[wire - 1];
  return std::to_string(wire);
}

void Circuit::add(GateInstance gate) {
  gates.push_back(std::move(gate));
  std::stable_sort(gates.begin(), gates.end(),
                   [](const GateInstance& a, const GateInstance& b) {
                     if (a.time_step != b.time_step)
                       return a.time_step < b.time_step;
                     return *std::min_element(a.wires.begin(), a.wires.end()) <
                            *std::min_element(b.wires.begin(), b.wires.end());
                   });
}

void Circuit::validate() const {
  if (n < 1) throw std::invalid_argument("circuit needs at least one wire");
  if (!wire_labels.empty() && wire_labels.size() != n)
    throw std::invalid_argument("wire_labels size must equal wire count");
  std::vector<const GateInstance*> by_time;
  by_time.reserve(gates.size());
  for (const auto& g : gates) by_time.push_back(&g);
  std::stable_sort(by_time.begin(), by_time.end(),
                   [](const GateInstance* a, const GateInstance* b) {
                     return a->time_step < b->time_step;
                   });
  std::map<std::size_t, int> last_time_on_wire;
  for (const GateInstance* gp : by_time) {
    const auto& g = *gp;
    if (g.time_step < 1)
      throw std::invalid_argument("gate time steps start at 1");
    if (g.wires.empty())
      throw std::invalid_argument("gate must touch at least one wire");
    std::set<std::size_t> distinct(g.wires.begin(), g.wires.end());
    if (distinct.size() != g.wires.size())
      throw std::invalid_argument(std::string(gate_name(g.kind)) +
                                  " gate repeats a wire");
    for (std::size_t w : g.wires) {
      if (w < 1 || w > n)
        throw std::invalid_argument("wire " + std::to_string(w) +
                                    " out of range [1, " + std::to_string(n) +
                                    "]");
      auto it = last_time_on_wire.find(w);
      if (it != last_time_on_wire.end() && it->second >= g.time_step)
        throw std::invalid_argument(
            "wire " + std::to_string(w) + " touched twice at or before step " +
            std::to_string(g.time_step));
      last_time_on_wire[w] = g.time_step;
    }
    const std::size_t expected_arity =
        (g.kind == GateKind::kCnot || g.kind == GateKind::kCz) ? 2
        : g.kind == GateKind::kRaw                             ? g.wires.size()
                                                               : 1;
    if (g.wires.size() != expected_arity)
      throw std::invalid_argument(std::string(gate_name(g.kind)) +
                                  " gate has the wrong number of wires");
    if (g.kind == GateKind::kPrepEta) {
      const double norm = g.alpha * g.alpha + std::norm(g.beta);
      if (g.alpha < 0.0 || std::abs(norm - 1.0) > 1e-9)
        throw std::invalid_argument(
            "prep_eta requires alpha >= 0 and alpha^2 + |beta|^2 = 1");
      if (std::abs(std::abs(g.eta) - 1.0) > 1e-9)
        throw std::invalid_argument("prep_eta requires |eta| = 1");
    }
    if (g.kind == GateKind::kRaw) {
      if (!g.raw.has_value())
        throw std::invalid_argument("raw gate is missing its operator");
      if (g.raw->wires() != n)
        throw std::invalid_argument(
            "raw operator must span the full circuit width");
      std::uint64_t allowed = 0;
      for (std::size_t w : g.wires) allowed |= 1ull << (w - 1);
      if (g.raw->support_mask() & ~allowed)
        throw std::invalid_argument(
            "raw operator acts outside its listed wires");
      if (!(g.raw->adjoint() * *g.raw)
               .approx_equal(PauliSum::identity(n), 1e-9))
        throw std::invalid_argument("raw operator is not unitary");
    }
  }
}

std::vector<std::pair<int, std::vector<const GateInstance*>>> Circuit::steps()
    const {
  std::map<int, std::vector<const GateInstance*>> grouped;
  for (const auto& g : gates) grouped[g.time_step].push_back(&g);
  std::vector<std::pair<int, std::vector<const GateInstance*>>> out;
  out.reserve(grouped.size());
  for (auto& [t, list] : grouped) {
    std::sort(list.begin(), list.end(),
              [](const GateInstance* a, const GateInstance* b) {
                return *std::min_element(a->wires.begin(), a->wires.end()) <
                       *std::min_element(b->wires.begin(), b->wires.end());
              });
    out.emplace_back(t, std::move(list));
  }
  return out;
}

std::set<std::string> Circuit::parameter_ids() const {
  std::set<std::string> ids;
  for (const auto& g : gates) {
    auto gi = g.parameter_ids();
    ids.insert(gi.begin(), gi.end());
  }
  return ids;
}

int Circuit::final_time() const {
  int t = 0;
  for (const auto& g : gates) t = std::max(t, g.time_step);
  return t;
}

}  // namespace qnet
