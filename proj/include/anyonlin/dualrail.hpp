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

#pragma once

#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "anyonlin/fock.hpp"
#include "anyonlin/network.hpp"

namespace anyonlin {

/// Dual-rail layout: qubit q lives on a neighbouring mode pair, |0_L> = |1,0>
/// and |1_L> = |0,1>. One permanently occupied auxiliary mode sits between
/// consecutive pairs, so two qubits use modes (1,2), aux 3, (4,5).
class LogicalLayout {
 public:
  explicit LogicalLayout(int num_qubits);

  [[nodiscard]] int num_qubits() const { return num_qubits_; }
  [[nodiscard]] int modes() const { return modes_; }
  /// Pair for 1-based qubit q.
  [[nodiscard]] std::pair<Mode, Mode> qubit_modes(int q) const;
  [[nodiscard]] const std::vector<Mode>& aux_modes() const { return aux_; }
  /// Auxiliary mode between qubits q and q + 1.
  [[nodiscard]] Mode aux_between(int q) const;
  [[nodiscard]] int particle_number() const {
    return num_qubits_ + static_cast<int>(aux_.size());
  }
  /// Physical label of a logical basis state; bit 0 of `bits` is the last
  /// qubit, so index 3 of a two-qubit register is "11".
  [[nodiscard]] Occupation occupation(std::size_t bits) const;

 private:
  int num_qubits_;
  int modes_;
  std::vector<std::pair<Mode, Mode>> pairs_;
  std::vector<Mode> aux_;
};

struct RzGate {
  int qubit;
  double beta;
};
struct RxGate {
  int qubit;
  double gamma;
};
/// e^{i alpha} Rz(beta) Rx(gamma) Rz(delta).
struct U1Gate {
  int qubit;
  double alpha;
  double beta;
  double gamma;
  double delta;
};
/// Controlled phase diag(1, 1, 1, e^{i phi}) with phi the exchange phase.
struct CpGate {
  int qubit_a;
  int qubit_b;
};

using LogicalGate = std::variant<RzGate, RxGate, U1Gate, CpGate>;

struct EulerAngles {
  double alpha;
  double beta;
  double gamma;
  double delta;
};

/// U = e^{i alpha} Rz(beta) Rx(gamma) Rz(delta) with
/// Rz(b) = exp(-i b Z / 2), Rx(g) = exp(-i g X / 2).
[[nodiscard]] EulerAngles euler_zxz(const Eigen::Matrix2cd& u);
[[nodiscard]] Eigen::Matrix2cd euler_matrix(const EulerAngles& angles);

/// Basis label for a bitstring such as "01" (first character = qubit 1).
[[nodiscard]] std::size_t parse_bitstring(const LogicalLayout& layout,
                                          const std::string& bits);

[[nodiscard]] StateVector encode(const LogicalLayout& layout,
                                 const std::string& bits);
/// Superposition of encoded basis states with the given logical amplitudes.
[[nodiscard]] StateVector encode(const LogicalLayout& layout,
                                 const Vector& logical);

struct DecodedState {
  Vector amplitudes;
  double leakage;
};

[[nodiscard]] DecodedState decode(const LogicalLayout& layout,
                                  const StateVector& state);

/// PS - BS - PS on the qubit's pair realizing the Euler decomposition up to
/// global phase.
[[nodiscard]] Network compile_single_qubit(const LogicalLayout& layout,
                                           int qubit, double alpha,
                                           double beta, double gamma,
                                           double delta);
[[nodiscard]] Network compile_single_qubit(const LogicalLayout& layout,
                                           int qubit,
                                           const Eigen::Matrix2cd& target);

/// Braiding network on (second mode of qubit_a, aux, first mode of
/// qubit_b). Qubits must be neighbours in the layout.
[[nodiscard]] Network compile_cp(const LogicalLayout& layout, int qubit_a,
                                 int qubit_b);

[[nodiscard]] Network compile_circuit(const LogicalLayout& layout,
                                      const std::vector<LogicalGate>& gates);

/// Physical logical-space matrix of a network: column s is the decoded image
/// of basis state s.
[[nodiscard]] Matrix logical_matrix(const AnyonSpec& spec,
                                    const LogicalLayout& layout,
                                    const Network& network);

[[nodiscard]] Vector simulate_circuit(const AnyonSpec& spec,
                                      const LogicalLayout& layout,
                                      const std::vector<LogicalGate>& gates,
                                      const std::string& input_bits);
[[nodiscard]] Vector simulate_circuit(const AnyonSpec& spec,
                                      const LogicalLayout& layout,
                                      const std::vector<LogicalGate>& gates,
                                      const Vector& input);

/// Gate-level matrix of the circuit built from Kronecker products of the
/// ideal gates, qubit 1 most significant. CP contributes e^{i phi} on |11>.
[[nodiscard]] Matrix reference_logical_matrix(const LogicalLayout& layout,
                                              const std::vector<LogicalGate>& gates,
                                              double phi);

/// Haar-random SU(2) element from a normalized Gaussian quaternion.
template <class Rng>
[[nodiscard]] Eigen::Matrix2cd random_su2(Rng& rng) {
  std::normal_distribution<double> gauss;
  double q[4];
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& x : q) {
      x = gauss(rng);
      norm2 += x * x;
    }
  } while (norm2 < 1e-24);
  const double inv = 1.0 / std::sqrt(norm2);
  const Complex a{q[0] * inv, q[1] * inv};
  const Complex b{q[2] * inv, q[3] * inv};
  Eigen::Matrix2cd u;
  u << a, -std::conj(b), b, std::conj(a);
  return u;
}

/// Multiplies `v` by the phase that makes its largest-magnitude entry real
/// and positive.
[[nodiscard]] Vector align_global_phase(const Vector& v);
/// max |a - e^{i t} b| after aligning both on a's largest entry.
[[nodiscard]] double phase_aligned_distance(const Matrix& a, const Matrix& b);

/// Rank of the 4x4 -> (2x2)(2x2) operator-Schmidt reshuffle; 1 means the
/// two-qubit gate is a tensor product.
[[nodiscard]] int reshuffle_rank(const Matrix& gate, double tol = 1e-9);

}  // namespace anyonlin
