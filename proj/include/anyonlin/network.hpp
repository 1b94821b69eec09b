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

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "anyonlin/angle.hpp"
#include "anyonlin/fock.hpp"
#include "anyonlin/operators.hpp"

namespace anyonlin {

/// PS_i(tau) = exp(i tau n_i).
struct PhaseShift {
  Mode mode;
  Angle tau;
  friend bool operator==(const PhaseShift&, const PhaseShift&) = default;
};

/// BS_ij(theta) = exp(i theta (chi^dag_i chi_j + chi^dag_j chi_i)).
struct BeamSplit {
  Mode i;
  Mode j;
  Angle theta;
  friend bool operator==(const BeamSplit&, const BeamSplit&) = default;
};

using Element = std::variant<PhaseShift, BeamSplit>;

/// Ordered optical elements over a fixed number of modes. Element k acts
/// before element k + 1.
class Network {
 public:
  explicit Network(int modes);

  Network& ps(Mode mode, Angle tau);
  Network& bs(Mode i, Mode j, Angle theta);
  Network& add(const Element& element);
  Network& append(const Network& other);
  /// Copy of `other` with its mode k relabelled to mode k + offset.
  Network& append_shifted(const Network& other, int offset);

  [[nodiscard]] int modes() const { return modes_; }
  [[nodiscard]] const std::vector<Element>& elements() const {
    return elements_;
  }
  [[nodiscard]] bool empty() const { return elements_.empty(); }

  friend bool operator==(const Network&, const Network&) = default;

 private:
  int modes_;
  std::vector<Element> elements_;
};

/// e^{i n phi J3_ij} BS_ij(theta) e^{-i n phi J3_ij}.
struct GOperator {
  Mode i;
  Mode j;
  int winding = 0;
  double theta = 0.0;
};

/// Hermitian generator of the element on the sector (tau n_i or
/// theta * 2 J1_ij).
[[nodiscard]] OperatorMatrix element_generator(const AnyonSpec& spec,
                                               const SectorHandle& sector,
                                               const Element& element);

[[nodiscard]] OperatorMatrix element_unitary(const AnyonSpec& spec,
                                             const SectorHandle& sector,
                                             const Element& element);

/// Product of all element unitaries in application order.
[[nodiscard]] OperatorMatrix network_unitary(const AnyonSpec& spec,
                                             const SectorHandle& sector,
                                             const Network& network);

[[nodiscard]] OperatorMatrix g_operator_matrix(const AnyonSpec& spec,
                                               const SectorHandle& sector,
                                               const GOperator& g);

/// Exact evolution, sector by sector, through every element in order.
[[nodiscard]] StateVector evolve(const AnyonSpec& spec, const Network& network,
                                 const StateVector& state);

/// m x m single-particle transfer matrix: column l is the image of a particle
/// entering on mode l + 1.
[[nodiscard]] Matrix single_particle_matrix(const AnyonSpec& spec,
                                            const Network& network);

/// Pushes one beam splitter through a creation string applied to the vacuum
/// using the propagation identities, then expands the result with the Fock
/// creation rule. Only modes of the beam splitter and modes strictly between
/// them are supported.
[[nodiscard]] StateVector propagate_algebraic(const AnyonSpec& spec,
                                              int modes,
                                              const BeamSplit& splitter,
                                              std::span<const Mode> monomial);

/// Three-mode network that is the identity on single particles but imprints
/// exchange phases on two-particle states.
[[nodiscard]] Network build_braiding_network();

}  // namespace anyonlin
