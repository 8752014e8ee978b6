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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qnet/engine.hpp"
#include "qnet/oracle.hpp"

namespace qnet {

/// One checked statement in an experiment run.
struct Claim {
  std::string id;
  std::string description;
  std::string expected;
  std::string observed;
  double tolerance = 0.0;
  bool pass = false;
};

/// Self-contained record of one experiment run.
struct ExperimentReport {
  std::string name;
  std::map<std::string, std::string> params;
  std::vector<Claim> claims;
  /// Compact trace: one line per wire per snapshot.
  std::vector<std::string> trace_lines;

  bool all_pass() const;
  std::size_t fail_count() const;
};

/// The 5-wire teleportation network: psi on wire 1, Bell pair on 2-3,
/// records on 4-5. Preparation completes at t=3, the protocol ends at t=9.
/// phi must lie in the fundamental domain.
Circuit build_teleportation(const std::array<double, 3>& phi);

/// Teleportation extended with a record-relay chain (chain_length fresh
/// pairs) and, optionally, decohering environment wires E, E' coupled to
/// the records. The final relay pair controls Bob's corrections.
Circuit build_telephone(const std::array<double, 3>& phi, int chain_length,
                        bool decohere);

struct Prerotation {
  char axis = 'X';  // 'X', 'Y' or 'Z'
  double angle = 0.0;
};

/// Teleportation with the eta-parametrised preparation on wire 1 and an
/// optional prerotation of wire 1 before it (applied in the same step as
/// the Bell-pair Hadamard, so the protocol clock is unchanged).
Circuit build_eta_experiment(double alpha, Complex beta, Complex eta,
                             const std::optional<Prerotation>& prerotation);

/// Test hook: corrupts the named wire after the named step, to prove the
/// audits catch a broken gate rule.
struct FaultInjection {
  int time_step = 0;
  std::size_t wire = 0;
};

struct ExperimentOptions {
  std::array<double, 3> phi{0.3, 0.7, 1.1};
  // eta experiment inputs
  double alpha = 0.6;
  Complex beta{0.48, 0.64};
  Complex eta{0.28, -0.96};
  // telephone inputs
  int chain_length = 2;
  bool decohere = true;
  /// Pre-scrambles the telephone's environment wires with a seeded random
  /// Clifford prefix (generic environment descriptors). Exploratory option;
  /// not part of any acceptance claim.
  bool scramble_environment = false;
  std::uint64_t seed = 1;
  std::optional<FaultInjection> fault;
};

/// Builds and runs the named experiment ("teleport", "telephone" or "eta"),
/// evaluates every registered claim in both pictures, and returns the
/// report. Claim evaluation failures become failed verdicts, not crashes.
/// Throws std::invalid_argument for an unknown name.
ExperimentReport run_experiment(const std::string& name,
                                const ExperimentOptions& options);

}  // namespace qnet
