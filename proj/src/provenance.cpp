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

#include "qnet/provenance.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace qnet {

namespace {

void merge_into(ProvenanceTag& dst, const ProvenanceTag& src) {
  dst.insert(src.begin(), src.end());
}

}  // namespace

ProvenanceTag ComponentTags::combined() const {
  ProvenanceTag all = x;
  all.insert(z.begin(), z.end());
  return all;
}

const std::vector<ComponentTags>& AnnotatedTrace::tags_at_time(int t) const {
  std::size_t best = 0;
  for (std::size_t s = 0; s < trace.snapshots.size(); ++s) {
    if (trace.snapshots[s].time <= t) best = s;
  }
  return tags[best];
}

AnnotatedTrace tag_descriptors(const FlowTrace& trace) {
  AnnotatedTrace out;
  out.trace = trace;
  const std::size_t n = trace.circuit.n;
  std::vector<ComponentTags> current(n);
  out.tags.push_back(current);

  const auto steps = trace.circuit.steps();
  for (const auto& [t, gates] : steps) {
    // Gates in one step touch disjoint wires, so reading the pre-step tags
    // while writing per-gate updates is race-free.
    const std::vector<ComponentTags> before = current;
    for (const GateInstance* g : gates) {
      switch (g->kind) {
        case GateKind::kHadamard: {
          ComponentTags& w = current[g->wires[0] - 1];
          std::swap(w.x, w.z);
          break;
        }
        case GateKind::kCnot: {
          // control x picks up target x; target z picks up control z
          const std::size_t c = g->wires[0], tw = g->wires[1];
          merge_into(current[c - 1].x, before[tw - 1].x);
          merge_into(current[tw - 1].z, before[c - 1].z);
          break;
        }
        case GateKind::kCz: {
          const std::size_t a = g->wires[0], b = g->wires[1];
          merge_into(current[a - 1].x, before[b - 1].z);
          merge_into(current[b - 1].x, before[a - 1].z);
          break;
        }
        case GateKind::kPauliX:
        case GateKind::kPauliZ:
          // Sign flips only; dependencies are unchanged.
          break;
        case GateKind::kPrep:
        case GateKind::kPrepEta: {
          // Both new components are polynomials in both old components.
          ComponentTags& w = current[g->wires[0] - 1];
          ProvenanceTag all = w.combined();
          for (const auto& id : g->parameter_ids()) all.insert(id);
          w.x = all;
          w.z = all;
          break;
        }
        case GateKind::kRaw: {
          ProvenanceTag all;
          for (std::size_t wi : g->wires)
            merge_into(all, before[wi - 1].combined());
          for (std::size_t wi : g->wires) {
            merge_into(current[wi - 1].x, all);
            merge_into(current[wi - 1].z, all);
          }
          break;
        }
      }
    }
    out.tags.push_back(current);
  }
  return out;
}

Circuit perturb_parameter(const Circuit& circuit, const std::string& param_id,
                          std::mt19937_64& rng) {
  std::uniform_real_distribution<double> magnitude(0.1, 0.5);
  std::bernoulli_distribution flip(0.5);
  auto offset = [&] { return (flip(rng) ? 1.0 : -1.0) * magnitude(rng); };

  Circuit out = circuit;
  bool found = false;
  for (auto& g : out.gates) {
    if (g.kind == GateKind::kPrep && g.param_id == param_id) {
      for (double& component : g.phi) component += offset();
      found = true;
    } else if (g.kind == GateKind::kPrepEta && g.param_id == param_id) {
      // Move along the normalised family: alpha = cos(theta),
      // |beta| = sin(theta), keeping arg(beta) a second degree of freedom.
      double theta = std::atan2(std::abs(g.beta), g.alpha) + offset();
      double barg = std::arg(g.beta) + offset();
      g.alpha = std::cos(theta);
      g.beta = std::sin(theta) * std::exp(Complex{0.0, 1.0} * barg);
      found = true;
    } else if (g.kind == GateKind::kPrepEta && g.eta_param_id == param_id) {
      g.eta = std::exp(Complex{0.0, 1.0} * (std::arg(g.eta) + offset()));
      found = true;
    }
  }
  if (!found)
    throw std::invalid_argument("unknown parameter '" + param_id + "'");
  return out;
}

bool numerical_dependence_check(const Circuit& circuit, std::size_t wire,
                                int time, const std::string& param_id,
                                int probes, std::uint64_t seed) {
  if (wire < 1 || wire > circuit.n)
    throw std::invalid_argument("wire out of range");
  const FlowTrace baseline = run_with_trace(circuit);
  const Descriptor& reference = baseline.at_time(time).wire(wire);
  std::mt19937_64 rng(seed);
  for (int probe = 0; probe < probes; ++probe) {
    const Circuit perturbed = perturb_parameter(circuit, param_id, rng);
    const FlowTrace probe_trace = run_with_trace(perturbed);
    const Descriptor& probe_desc = probe_trace.at_time(time).wire(wire);
    if (reference.x.max_delta(probe_desc.x) > 1e-9 ||
        reference.z.max_delta(probe_desc.z) > 1e-9)
      return true;
  }
  return false;
}

LocalityReport locality_audit(const FlowTrace& trace) {
  LocalityReport report;
  const auto steps = trace.circuit.steps();
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto& [t, gates] = steps[s];
    std::uint64_t touched = 0;
    for (const GateInstance* g : gates)
      for (std::size_t w : g->wires) touched |= 1ull << (w - 1);
    const DescriptorSet& before = trace.snapshots[s];
    const DescriptorSet& after = trace.snapshots[s + 1];
    for (std::size_t w = 1; w <= trace.circuit.n; ++w) {
      if (touched & (1ull << (w - 1))) continue;
      if (!before.wire(w).x.key_equal(after.wire(w).x) ||
          !before.wire(w).z.key_equal(after.wire(w).z)) {
        report.violations.push_back({w, t});
      }
    }
  }
  return report;
}

namespace {

struct DotEdge {
  std::size_t from_wire;
  std::size_t from_snapshot;
  std::size_t to_wire;
  std::size_t to_snapshot;
  bool highlighted;
};

bool contains(const ProvenanceTag& tag, const std::string& id) {
  return tag.count(id) > 0;
}

}  // namespace

void write_flow_dot(const AnnotatedTrace& annotated,
                    const std::string& highlight_param, std::ostream& out) {
  const FlowTrace& trace = annotated.trace;
  const std::size_t n = trace.circuit.n;
  const auto steps = trace.circuit.steps();

  std::vector<DotEdge> edges;
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto& [t, gates] = steps[s];
    const auto& before = annotated.tags[s];
    std::uint64_t touched = 0;
    auto add = [&](std::size_t from, std::size_t to, bool hi) {
      edges.push_back({from, s, to, s + 1, hi});
    };
    for (const GateInstance* g : gates) {
      for (std::size_t w : g->wires) touched |= 1ull << (w - 1);
      const bool introduces =
          g->parameter_ids().count(highlight_param) > 0;
      switch (g->kind) {
        case GateKind::kHadamard:
        case GateKind::kPauliX:
        case GateKind::kPauliZ: {
          const std::size_t w = g->wires[0];
          add(w, w, contains(before[w - 1].combined(), highlight_param));
          break;
        }
        case GateKind::kPrep:
        case GateKind::kPrepEta: {
          const std::size_t w = g->wires[0];
          add(w, w,
              introduces ||
                  contains(before[w - 1].combined(), highlight_param));
          break;
        }
        case GateKind::kCnot: {
          const std::size_t c = g->wires[0], tw = g->wires[1];
          add(c, c, contains(before[c - 1].combined(), highlight_param));
          add(tw, tw, contains(before[tw - 1].combined(), highlight_param));
          // x flows target -> control, z flows control -> target
          add(tw, c, contains(before[tw - 1].x, highlight_param));
          add(c, tw, contains(before[c - 1].z, highlight_param));
          break;
        }
        case GateKind::kCz: {
          const std::size_t a = g->wires[0], b = g->wires[1];
          add(a, a, contains(before[a - 1].combined(), highlight_param));
          add(b, b, contains(before[b - 1].combined(), highlight_param));
          add(b, a, contains(before[b - 1].z, highlight_param));
          add(a, b, contains(before[a - 1].z, highlight_param));
          break;
        }
        case GateKind::kRaw: {
          for (std::size_t from : g->wires)
            for (std::size_t to : g->wires)
              add(from, to,
                  introduces ||
                      contains(before[from - 1].combined(), highlight_param));
          break;
        }
      }
    }
    // untouched wires continue unchanged
    for (std::size_t w = 1; w <= n; ++w) {
      if (touched & (1ull << (w - 1))) continue;
      add(w, w, contains(before[w - 1].combined(), highlight_param));
    }
  }

  auto node = [&](std::size_t wire, std::size_t snapshot) {
    return "w" + std::to_string(wire) + "_t" +
           std::to_string(trace.snapshots[snapshot].time);
  };

  out << "digraph parameter_flow {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=box, fontsize=10];\n";
  for (std::size_t s = 0; s < trace.snapshots.size(); ++s) {
    for (std::size_t w = 1; w <= n; ++w) {
      out << "  " << node(w, s) << " [label=\"" << trace.circuit.wire_label(w)
          << " @ t=" << trace.snapshots[s].time << "\"];\n";
    }
  }
  for (const auto& e : edges) {
    out << "  " << node(e.from_wire, e.from_snapshot) << " -> "
        << node(e.to_wire, e.to_snapshot);
    if (e.highlighted) out << " [color=green, penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
}

}  // namespace qnet
