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

#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "qnet/circuit_io.hpp"
#include "qnet/experiments.hpp"
#include "qnet/oracle.hpp"
#include "qnet/provenance.hpp"
#include "qnet/random_circuits.hpp"
#include "qnet/report_json.hpp"
#include "qnet/tomography.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // claim or divergence failures
constexpr int kExitUsage = 2;    // bad invocation or unreadable input

void write_json(const nlohmann::json& doc, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << doc.dump(2) << "\n";
}

bool parse_csv_doubles(const std::string& text, std::vector<double>& out,
                       std::size_t count) {
  out.clear();
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      out.push_back(std::stod(piece));
    } catch (const std::exception&) {
      return false;
    }
  }
  return out.size() == count;
}

struct DivergenceResult {
  double step_vs_global = 0.0;
  double tomography_vs_oracle = 0.0;
};

// Differential checks shared by compare-oracle and fuzz: step-wise vs
// global evolution, and tomography vs oracle partial traces on every
// single wire and pair.
DivergenceResult divergence_check(const qnet::Circuit& circuit) {
  DivergenceResult r;
  const qnet::DescriptorSet stepped = qnet::evolve(circuit);
  const qnet::DescriptorSet global = qnet::evolve_global(circuit);
  for (std::size_t w = 1; w <= circuit.n; ++w) {
    r.step_vs_global = std::max(
        r.step_vs_global, stepped.wire(w).x.max_delta(global.wire(w).x));
    r.step_vs_global = std::max(
        r.step_vs_global, stepped.wire(w).z.max_delta(global.wire(w).z));
  }
  const qnet::StateVector state = qnet::simulate(circuit);
  for (std::size_t a = 1; a <= circuit.n; ++a) {
    r.tomography_vs_oracle = std::max(
        r.tomography_vs_oracle,
        qnet::Matrix::max_abs_diff(
            qnet::reduced_density(stepped, {a}).entries,
            qnet::partial_trace(state, {a}).entries));
    for (std::size_t b = a + 1; b <= circuit.n; ++b) {
      r.tomography_vs_oracle = std::max(
          r.tomography_vs_oracle,
          qnet::Matrix::max_abs_diff(
              qnet::reduced_density(stepped, {a, b}).entries,
              qnet::partial_trace(state, {a, b}).entries));
    }
  }
  return r;
}

// Per-seed fuzz verdict; empty string means the seed passed.
std::string fuzz_one(std::size_t wires, int depth, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  qnet::RandomCircuitOptions options;
  options.wires = wires;
  options.depth = depth;
  const qnet::Circuit circuit = qnet::random_circuit(options, rng);

  const auto divergence = divergence_check(circuit);
  if (divergence.step_vs_global > 1e-9)
    return "step vs global divergence " +
           std::to_string(divergence.step_vs_global);
  if (divergence.tomography_vs_oracle > 1e-9)
    return "tomography vs oracle divergence " +
           std::to_string(divergence.tomography_vs_oracle);

  const qnet::FlowTrace trace = qnet::run_with_trace(circuit);
  const qnet::LocalityReport audit = qnet::locality_audit(trace);
  if (!audit.clean())
    return "locality violation at wire " +
           std::to_string(audit.violations.front().wire) + ", step " +
           std::to_string(audit.violations.front().time_step);

  // algebra preservation at the final time
  const qnet::DescriptorSet& final_set = trace.final();
  const qnet::PauliSum identity = qnet::PauliSum::identity(circuit.n);
  for (std::size_t w = 1; w <= circuit.n; ++w) {
    const auto& d = final_set.wire(w);
    if (!(d.x * d.x).approx_equal(identity, 1e-9) ||
        !(d.z * d.z).approx_equal(identity, 1e-9))
      return "component square != identity on wire " + std::to_string(w);
    if (!(d.x * d.z + d.z * d.x)
             .approx_equal(qnet::PauliSum::zero(circuit.n), 1e-9))
      return "components fail to anticommute on wire " + std::to_string(w);
    for (std::size_t v = w + 1; v <= circuit.n; ++v) {
      if (!qnet::commutator(d.x, final_set.wire(v).x)
               .approx_equal(qnet::PauliSum::zero(circuit.n), 1e-9) ||
          !qnet::commutator(d.z, final_set.wire(v).z)
               .approx_equal(qnet::PauliSum::zero(circuit.n), 1e-9))
        return "cross-wire commutator nonzero for wires " +
               std::to_string(w) + "," + std::to_string(v);
    }
  }
  return "";
}

void print_claims(const qnet::ExperimentReport& report) {
  for (const auto& c : report.claims) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << ": "
              << c.description << "\n";
    if (!c.pass) {
      std::cout << "       expected " << c.expected << "\n";
      std::cout << "       observed " << c.observed << "\n";
    }
  }
  std::cout << (report.all_pass() ? "all claims pass"
                                  : std::to_string(report.fail_count()) +
                                        " claim(s) failed")
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qnet: Heisenberg-picture quantum network simulator with a dense "
      "Schroedinger oracle"};
  app.require_subcommand(1);

  // simulate
  std::string sim_file, sim_json;
  bool sim_trace = false;
  auto* sim = app.add_subcommand(
      "simulate", "run descriptor evolution on a circuit file");
  sim->add_option("file", sim_file, "circuit file")->required();
  sim->add_flag("--trace", sim_trace, "print every snapshot");
  sim->add_option("--json", sim_json, "write a JSON report to this path");

  // compare-oracle
  std::string cmp_file, cmp_json;
  auto* cmp = app.add_subcommand(
      "compare-oracle",
      "differential check of both pictures; exit 1 on divergence > 1e-9");
  cmp->add_option("file", cmp_file, "circuit file")->required();
  cmp->add_option("--json", cmp_json, "write a JSON report to this path");

  // audit
  std::string audit_file, audit_json, audit_dot;
  int audit_probes = qnet::kDefaultProbes;
  std::uint64_t audit_seed = 0x5eed;
  std::string audit_highlight = "phi";
  auto* audit = app.add_subcommand(
      "audit", "provenance and locality audit of a circuit file");
  audit->add_option("file", audit_file, "circuit file")->required();
  audit->add_option("--dot", audit_dot, "write the parameter-flow digraph");
  audit->add_option("--json", audit_json, "write a JSON report to this path");
  audit->add_option("--probes", audit_probes,
                    "perturbation probes per parameter");
  audit->add_option("--seed", audit_seed, "probe RNG seed");
  audit->add_option("--highlight", audit_highlight,
                    "parameter highlighted in the DOT output");

  // demo
  std::string demo_name, demo_phi = "0.3,0.7,1.1", demo_json;
  std::string demo_beta = "0.48,0.64", demo_eta = "0.28,-0.96";
  double demo_alpha = 0.6;
  int demo_chain = 2;
  bool demo_decohere = false;
  std::uint64_t demo_seed = 1;
  auto* demo = app.add_subcommand("demo", "run a named experiment");
  demo->add_option("name", demo_name, "teleport | telephone | eta")
      ->required()
      ->check(CLI::IsMember({"teleport", "telephone", "eta"}));
  demo->add_option("--phi", demo_phi, "Euler angles a,b,c");
  demo->add_option("--alpha", demo_alpha, "prepared-state alpha (eta demo)");
  demo->add_option("--beta", demo_beta, "prepared-state beta re,im");
  demo->add_option("--eta", demo_eta, "eta re,im (unit norm)");
  demo->add_option("--chain", demo_chain, "telephone relay pairs");
  demo->add_flag("--decohere", demo_decohere,
                 "couple environment wires to the records");
  demo->add_option("--seed", demo_seed, "experiment seed");
  demo->add_option("--json", demo_json, "write a JSON report to this path");

  // fuzz
  std::size_t fuzz_n = 5;
  int fuzz_depth = 12;
  std::size_t fuzz_seeds = 20;
  std::size_t fuzz_jobs = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t fuzz_base = 1;
  std::string fuzz_json;
  auto* fuzz = app.add_subcommand(
      "fuzz", "random-circuit differential sweep across worker threads");
  fuzz->add_option("--n", fuzz_n, "wires")->required();
  fuzz->add_option("--depth", fuzz_depth, "gates per circuit")->required();
  fuzz->add_option("--seeds", fuzz_seeds, "number of random circuits")
      ->required();
  fuzz->add_option("--jobs", fuzz_jobs, "worker threads");
  fuzz->add_option("--seed", fuzz_base, "base seed");
  fuzz->add_option("--json", fuzz_json, "write a JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sim->parsed()) {
      const qnet::Circuit circuit = qnet::load_circuit_file(sim_file);
      const qnet::FlowTrace trace = qnet::run_with_trace(circuit);
      if (sim_trace) {
        for (const auto& snap : trace.snapshots) {
          std::cout << "t=" << snap.time << "\n";
          for (std::size_t w = 1; w <= circuit.n; ++w) {
            std::cout << "  w" << circuit.wire_label(w) << ": x = "
                      << snap.wire(w).x.str()
                      << "  z = " << snap.wire(w).z.str() << "\n";
          }
        }
      }
      std::cout << "final descriptors (t=" << trace.final().time << ")\n";
      for (std::size_t w = 1; w <= circuit.n; ++w) {
        const auto p = qnet::bloch_components(trace.final(), w);
        std::cout << "  w" << circuit.wire_label(w) << ": x = "
                  << trace.final().wire(w).x.str()
                  << "  z = " << trace.final().wire(w).z.str() << "\n";
        std::cout << "     bloch = (" << p[0] << ", " << p[1] << ", " << p[2]
                  << ")\n";
      }
      write_json(qnet::simulate_report_json(trace, sim_trace), sim_json);
      return kExitOk;
    }

    if (cmp->parsed()) {
      const qnet::Circuit circuit = qnet::load_circuit_file(cmp_file);
      const auto divergence = divergence_check(circuit);
      const bool ok = divergence.step_vs_global <= 1e-9 &&
                      divergence.tomography_vs_oracle <= 1e-9;
      std::cout << "step vs global:        max delta = "
                << divergence.step_vs_global << "\n";
      std::cout << "tomography vs oracle:  max delta = "
                << divergence.tomography_vs_oracle << "\n";
      std::cout << (ok ? "agreement within 1e-9" : "DIVERGENCE above 1e-9")
                << "\n";
      write_json(qnet::compare_report_json(divergence.step_vs_global,
                                           divergence.tomography_vs_oracle,
                                           1e-9),
                 cmp_json);
      return ok ? kExitOk : kExitFailure;
    }

    if (audit->parsed()) {
      const qnet::Circuit circuit = qnet::load_circuit_file(audit_file);
      const qnet::FlowTrace trace = qnet::run_with_trace(circuit);
      const qnet::AnnotatedTrace annotated = qnet::tag_descriptors(trace);
      const qnet::LocalityReport locality = qnet::locality_audit(trace);
      if (!audit_dot.empty()) {
        std::ofstream dot(audit_dot);
        if (!dot) throw std::runtime_error("cannot write " + audit_dot);
        qnet::write_flow_dot(annotated, audit_highlight, dot);
      }
      const nlohmann::json doc =
          qnet::audit_report_json(annotated, audit_probes, audit_seed);
      if (audit_json.empty()) {
        std::cout << doc.dump(2) << "\n";
      } else {
        write_json(doc, audit_json);
        std::cout << "audit report written to " << audit_json << "\n";
      }
      return locality.clean() ? kExitOk : kExitFailure;
    }

    if (demo->parsed()) {
      qnet::ExperimentOptions options;
      options.seed = demo_seed;
      options.chain_length = demo_chain;
      options.decohere = demo_decohere;
      std::vector<double> values;
      if (!parse_csv_doubles(demo_phi, values, 3)) {
        std::cerr << "--phi needs three comma-separated numbers\n";
        return kExitUsage;
      }
      options.phi = {values[0], values[1], values[2]};
      if (!parse_csv_doubles(demo_beta, values, 2)) {
        std::cerr << "--beta needs re,im\n";
        return kExitUsage;
      }
      options.beta = {values[0], values[1]};
      if (!parse_csv_doubles(demo_eta, values, 2)) {
        std::cerr << "--eta needs re,im\n";
        return kExitUsage;
      }
      options.eta = {values[0], values[1]};
      options.alpha = demo_alpha;
      const qnet::ExperimentReport report =
          qnet::run_experiment(demo_name, options);
      print_claims(report);
      write_json(qnet::experiment_report_json(report), demo_json);
      return report.all_pass() ? kExitOk : kExitFailure;
    }

    if (fuzz->parsed()) {
      std::vector<qnet::FuzzFailure> failures;
      std::mutex failures_mutex;
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        while (true) {
          const std::size_t index = next.fetch_add(1);
          if (index >= fuzz_seeds) break;
          const std::uint64_t seed = fuzz_base + index;
          const std::string what = fuzz_one(fuzz_n, fuzz_depth, seed);
          if (!what.empty()) {
            std::lock_guard<std::mutex> lock(failures_mutex);
            failures.push_back({seed, what});
          }
        }
      };
      std::vector<std::thread> pool;
      for (std::size_t j = 0; j < std::max<std::size_t>(1, fuzz_jobs); ++j)
        pool.emplace_back(worker);
      for (auto& th : pool) th.join();
      std::sort(failures.begin(), failures.end(),
                [](const auto& a, const auto& b) { return a.seed < b.seed; });
      for (const auto& f : failures)
        std::cout << "[FAIL] seed " << f.seed << ": " << f.what << "\n";
      std::cout << (fuzz_seeds - failures.size()) << "/" << fuzz_seeds
                << " seeds passed\n";
      write_json(qnet::fuzz_report_json(fuzz_n, fuzz_depth, fuzz_seeds,
                                        failures),
                 fuzz_json);
      return failures.empty() ? kExitOk : kExitFailure;
    }
  } catch (const qnet::CircuitParseError& e) {
    std::cerr << "circuit error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // bad user-supplied values (parameter domains, wire ranges, ...)
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
