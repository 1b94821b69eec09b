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

#include "anyonlin/dualrail.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace anyonlin {

LogicalLayout::LogicalLayout(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw ValidationError("layout needs at least one qubit");
  modes_ = 3 * num_qubits - 1;
  for (int q = 1; q <= num_qubits; ++q) {
    const int first = 3 * (q - 1) + 1;
    pairs_.emplace_back(Mode{first}, Mode{first + 1});
    if (q < num_qubits) aux_.push_back(Mode{first + 2});
  }
}

std::pair<Mode, Mode> LogicalLayout::qubit_modes(int q) const {
  if (q < 1 || q > num_qubits_) {
    throw ValidationError("qubit " + std::to_string(q) + " out of range 1.." +
                          std::to_string(num_qubits_));
  }
  return pairs_[static_cast<std::size_t>(q - 1)];
}

Mode LogicalLayout::aux_between(int q) const {
  if (q < 1 || q >= num_qubits_) {
    throw ValidationError("no auxiliary mode after qubit " + std::to_string(q));
  }
  return aux_[static_cast<std::size_t>(q - 1)];
}

Occupation LogicalLayout::occupation(std::size_t bits) const {
  std::vector<int> counts(static_cast<std::size_t>(modes_), 0);
  for (int q = 1; q <= num_qubits_; ++q) {
    const bool one = (bits >> (num_qubits_ - q)) & 1u;
    const auto [first, second] = qubit_modes(q);
    counts[static_cast<std::size_t>((one ? second : first).idx())] = 1;
  }
  for (Mode a : aux_) counts[static_cast<std::size_t>(a.idx())] = 1;
  return Occupation(std::move(counts));
}

EulerAngles euler_zxz(const Eigen::Matrix2cd& u) {
  const Complex root = std::sqrt(u.determinant());
  if (std::abs(root) < 1e-12) throw ValidationError("target is not unitary");
  const Eigen::Matrix2cd v = u / root;
  // v = [[c e^{-i(b+d)/2}, -i s e^{-i(b-d)/2}], [-i s e^{i(b-d)/2}, c e^{i(b+d)/2}]]
  const double c = std::abs(v(0, 0));
  const double s = std::abs(v(1, 0));
  const double gamma = 2.0 * std::atan2(s, c);
  const double sum = c > 1e-14 ? -2.0 * std::arg(v(0, 0)) : 0.0;
  const double diff = s > 1e-14 ? 2.0 * std::arg(kI * v(1, 0)) : 0.0;
  return {std::arg(root), 0.5 * (sum + diff), gamma, 0.5 * (sum - diff)};
}

Eigen::Matrix2cd euler_matrix(const EulerAngles& a) {
  auto rz = [](double b) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = std::polar(1.0, -0.5 * b);
    m(1, 1) = std::polar(1.0, 0.5 * b);
    return m;
  };
  Eigen::Matrix2cd rx;
  const double c = std::cos(0.5 * a.gamma);
  const double s = std::sin(0.5 * a.gamma);
  rx << c, -kI * s, -kI * s, c;
  return std::polar(1.0, a.alpha) * rz(a.beta) * rx * rz(a.delta);
}

std::size_t parse_bitstring(const LogicalLayout& layout, const std::string& bits) {
  if (static_cast<int>(bits.size()) != layout.num_qubits()) {
    throw ValidationError("bitstring length " + std::to_string(bits.size()) +
                          " does not match " +
                          std::to_string(layout.num_qubits()) + " qubits");
  }
  std::size_t index = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw ValidationError("bitstring must be 0/1");
    index = (index << 1) | static_cast<std::size_t>(ch == '1');
  }
  return index;
}

StateVector encode(const LogicalLayout& layout, const std::string& bits) {
  return StateVector::basis(layout.occupation(parse_bitstring(layout, bits)));
}

StateVector encode(const LogicalLayout& layout, const Vector& logical) {
  const std::size_t dim = std::size_t{1} << layout.num_qubits();
  if (static_cast<std::size_t>(logical.size()) != dim) {
    throw ValidationError("logical vector has the wrong dimension");
  }
  StateVector out(layout.modes());
  for (std::size_t s = 0; s < dim; ++s) {
    const Complex a = logical(static_cast<Eigen::Index>(s));
    if (a != Complex{}) out.add(layout.occupation(s), a);
  }
  return out;
}

DecodedState decode(const LogicalLayout& layout, const StateVector& state) {
  const std::size_t dim = std::size_t{1} << layout.num_qubits();
  Vector amps(static_cast<Eigen::Index>(dim));
  double captured = 0.0;
  for (std::size_t s = 0; s < dim; ++s) {
    const Complex a = state.amplitude(layout.occupation(s));
    amps(static_cast<Eigen::Index>(s)) = a;
    captured += std::norm(a);
  }
  return {std::move(amps), std::max(0.0, 1.0 - captured)};
}

Network compile_single_qubit(const LogicalLayout& layout, int qubit,
                             double /*alpha*/, double beta, double gamma,
                             double delta) {
  // PS on the second rail is diag(1, e^{i tau}) ~ Rz(tau); BS(theta) acts as
  // exp(i theta X) = Rx(-2 theta). The global phase alpha has no physical
  // counterpart.
  const auto [first, second] = layout.qubit_modes(qubit);
  Network net(layout.modes());
  net.ps(second, Angle::from_radians(delta))
      .bs(first, second, Angle::from_radians(-0.5 * gamma))
      .ps(second, Angle::from_radians(beta));
  return net;
}

Network compile_single_qubit(const LogicalLayout& layout, int qubit,
                             const Eigen::Matrix2cd& target) {
  const EulerAngles a = euler_zxz(target);
  return compile_single_qubit(layout, qubit, a.alpha, a.beta, a.gamma, a.delta);
}

Network compile_cp(const LogicalLayout& layout, int qubit_a, int qubit_b) {
  (void)layout.qubit_modes(qubit_a);
  (void)layout.qubit_modes(qubit_b);
  if (std::abs(qubit_a - qubit_b) != 1) {
    throw CompileError("CP needs neighbouring qubits, got " +
                       std::to_string(qubit_a) + " and " +
                       std::to_string(qubit_b));
  }
  const int lower = std::min(qubit_a, qubit_b);
  const Mode start = layout.qubit_modes(lower).second;
  // start, aux, first mode of the upper qubit are consecutive.
  Network net(layout.modes());
  net.append_shifted(build_braiding_network(), start.label - 1);
  return net;
}

Network compile_circuit(const LogicalLayout& layout,
                        const std::vector<LogicalGate>& gates) {
  Network net(layout.modes());
  for (const auto& gate : gates) {
    std::visit(
        [&](const auto& g) {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, RzGate>) {
            net.ps(layout.qubit_modes(g.qubit).second,
                   Angle::from_radians(g.beta));
          } else if constexpr (std::is_same_v<T, RxGate>) {
            const auto [first, second] = layout.qubit_modes(g.qubit);
            net.bs(first, second, Angle::from_radians(-0.5 * g.gamma));
          } else if constexpr (std::is_same_v<T, U1Gate>) {
            net.append(compile_single_qubit(layout, g.qubit, g.alpha, g.beta,
                                            g.gamma, g.delta));
          } else {
            net.append(compile_cp(layout, g.qubit_a, g.qubit_b));
          }
        },
        gate);
  }
  return net;
}

Matrix logical_matrix(const AnyonSpec& spec, const LogicalLayout& layout,
                      const Network& network) {
  const std::size_t dim = std::size_t{1} << layout.num_qubits();
  Matrix out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t s = 0; s < dim; ++s) {
    const StateVector in = StateVector::basis(layout.occupation(s));
    out.col(static_cast<Eigen::Index>(s)) =
        decode(layout, evolve(spec, network, in)).amplitudes;
  }
  return out;
}

Vector simulate_circuit(const AnyonSpec& spec, const LogicalLayout& layout,
                        const std::vector<LogicalGate>& gates,
                        const std::string& input_bits) {
  const Network net = compile_circuit(layout, gates);
  return decode(layout, evolve(spec, net, encode(layout, input_bits))).amplitudes;
}

Vector simulate_circuit(const AnyonSpec& spec, const LogicalLayout& layout,
                        const std::vector<LogicalGate>& gates,
                        const Vector& input) {
  const Network net = compile_circuit(layout, gates);
  return decode(layout, evolve(spec, net, encode(layout, input))).amplitudes;
}

namespace {

// Embeds a one-qubit matrix at qubit q (1-based, qubit 1 most significant).
Matrix embed_single(int num_qubits, int q, const Eigen::Matrix2cd& u) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  const int shift = num_qubits - q;
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim),
                            static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    const int b = static_cast<int>((col >> shift) & 1u);
    for (int a = 0; a < 2; ++a) {
      const std::size_t row =
          (col & ~(std::size_t{1} << shift)) | (static_cast<std::size_t>(a) << shift);
      out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = u(a, b);
    }
  }
  return out;
}

}  // namespace

Matrix reference_logical_matrix(const LogicalLayout& layout,
                                const std::vector<LogicalGate>& gates,
                                double phi) {
  const int nq = layout.num_qubits();
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << nq);
  Matrix total = Matrix::Identity(dim, dim);
  for (const auto& gate : gates) {
    Matrix g;
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, RzGate>) {
            g = embed_single(nq, x.qubit, euler_matrix({0.0, x.beta, 0.0, 0.0}));
          } else if constexpr (std::is_same_v<T, RxGate>) {
            g = embed_single(nq, x.qubit, euler_matrix({0.0, 0.0, x.gamma, 0.0}));
          } else if constexpr (std::is_same_v<T, U1Gate>) {
            g = embed_single(nq, x.qubit,
                             euler_matrix({x.alpha, x.beta, x.gamma, x.delta}));
          } else {
            (void)layout.qubit_modes(x.qubit_a);
            (void)layout.qubit_modes(x.qubit_b);
            g = Matrix::Identity(dim, dim);
            const std::size_t mask = (std::size_t{1} << (nq - x.qubit_a)) |
                                     (std::size_t{1} << (nq - x.qubit_b));
            for (Eigen::Index s = 0; s < dim; ++s) {
              if ((static_cast<std::size_t>(s) & mask) == mask) {
                g(s, s) = std::polar(1.0, phi);
              }
            }
          }
        },
        gate);
    total = g * total;
  }
  return total;
}

Vector align_global_phase(const Vector& v) {
  if (v.size() == 0) return v;
  Eigen::Index k = 0;
  v.cwiseAbs().maxCoeff(&k);
  if (std::abs(v(k)) == 0.0) return v;
  return v * std::polar(1.0, -std::arg(v(k)));
}

double phase_aligned_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("shape mismatch in phase-aligned comparison");
  }
  Eigen::Index r = 0, c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  Complex phase{1.0, 0.0};
  if (std::abs(b(r, c)) > 0.0) {
    phase = std::polar(1.0, std::arg(a(r, c)) - std::arg(b(r, c)));
  }
  return (a - phase * b).cwiseAbs().maxCoeff();
}

int reshuffle_rank(const Matrix& gate, double tol) {
  if (gate.rows() != 4 || gate.cols() != 4) {
    throw ValidationError("reshuffle rank needs a two-qubit gate");
  }
  Matrix r(4, 4);
  for (int a1 = 0; a1 < 2; ++a1)
    for (int a2 = 0; a2 < 2; ++a2)
      for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2)
          r(2 * a1 + b1, 2 * a2 + b2) = gate(2 * a1 + a2, 2 * b1 + b2);
  const Eigen::JacobiSVD<Matrix> svd(r);
  int rank = 0;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
    if (svd.singularValues()(k) > tol) ++rank;
  }
  return rank;
}

}  // namespace anyonlin
