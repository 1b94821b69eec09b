// Copyright 2026 The anyonlin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every subcommand is an ordinary function returning
// its output and exit code, so the test suites drive the CLI in-process.
//
// Exit codes: 0 success, 2 invalid input, 3 a self-check exceeded its
// tolerance.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "anyonlin/fock.hpp"

namespace anyonlin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitSelfCheck = 3;

enum class OutputFormat { Json, Table };

struct RunConfig {
  AnyonSpec spec{ParticleClass::Bosonic, 0.0};
  /// The exchange phase exactly as given (not reduced mod 2 pi).
  double phi = 0.0;
  OutputFormat format = OutputFormat::Json;
  /// Whether --phi / --class were passed explicitly. Circuit files may carry
  /// their own values, which explicit flags override.
  bool phi_given = true;
  bool class_given = true;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Builds a config from flag text; throws ValidationError.
[[nodiscard]] RunConfig make_config(const std::string& phi,
                                    const std::string& cls,
                                    bool table = false);

/// BS_12(pi/4) on |1,1>.
[[nodiscard]] CommandResult cmd_hom(const RunConfig& cfg);
/// Braiding network on a three-mode ket.
[[nodiscard]] CommandResult cmd_braid(const RunConfig& cfg,
                                      const std::string& input,
                                      bool normalize = true);
/// Network DSL text applied to a ket; optionally exports the unitary on each
/// particle-number sector the input touches.
[[nodiscard]] CommandResult cmd_run(const RunConfig& cfg,
                                    const std::string& network_text,
                                    const std::string& input,
                                    bool export_matrix = false,
                                    bool normalize = true);
/// Dual-rail circuit JSON compiled to a network and simulated; self-checks
/// against the gate-level product. The exchange phase must come from the
/// file or from an explicit --phi.
[[nodiscard]] CommandResult cmd_compile(const RunConfig& cfg,
                                        const std::string& circuit_json,
                                        const std::string& input_bits,
                                        bool emit_network = false);
/// Coherent state u on mode 1 pushed through the mirror network.
[[nodiscard]] CommandResult cmd_cat(const RunConfig& cfg, const std::string& u,
                                    int nmax);
/// Two-mode coherent family from its JSON spec, optionally evolved through
/// a network in closed form and checked against exact evolution.
[[nodiscard]] CommandResult cmd_family(const RunConfig& cfg,
                                       const std::string& spec_json,
                                       const std::string& network_text);
/// Seeded Haar-random single-qubit compilation harness.
[[nodiscard]] CommandResult cmd_check_su2(const RunConfig& cfg, int count,
                                          std::uint64_t seed);

/// Parses argv and dispatches. argv[0] is the program name.
[[nodiscard]] CommandResult run(const std::vector<std::string>& args);

// Deterministic JSON pieces, exposed for the tests.
[[nodiscard]] std::string json_number(double value);
[[nodiscard]] std::string json_string(const std::string& text);
[[nodiscard]] std::string amplitudes_json(const StateVector& state,
                                          const std::string& indent);

}  // namespace anyonlin::cli
