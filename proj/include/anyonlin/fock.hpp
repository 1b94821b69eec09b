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

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "anyonlin/common.hpp"

namespace anyonlin {

enum class ParticleClass { Bosonic, Fermionic };

/// Particle class plus the exchange phase. The phase is kept reduced to
/// [0, 2pi).
class AnyonSpec {
 public:
  AnyonSpec(ParticleClass cls, double phi);

  static AnyonSpec bosonic(double phi) { return {ParticleClass::Bosonic, phi}; }
  static AnyonSpec fermionic(double phi) {
    return {ParticleClass::Fermionic, phi};
  }

  [[nodiscard]] ParticleClass particle_class() const { return cls_; }
  [[nodiscard]] bool is_fermionic() const {
    return cls_ == ParticleClass::Fermionic;
  }
  [[nodiscard]] double phi() const { return phi_; }

  /// Same class with the exchange phase switched off.
  [[nodiscard]] AnyonSpec standard() const { return {cls_, 0.0}; }

  friend bool operator==(const AnyonSpec&, const AnyonSpec&) = default;

 private:
  ParticleClass cls_;
  double phi_;
};

/// Sign of (j - i), or 0 when i == j.
[[nodiscard]] constexpr int sign_eps(int i, int j) {
  return (j > i) - (j < i);
}

/// Per-mode particle counts labelling a Fock basis state.
class Occupation {
 public:
  Occupation() = default;
  explicit Occupation(std::vector<int> counts);
  Occupation(std::initializer_list<int> counts);
  static Occupation vacuum(int modes) {
    return Occupation(std::vector<int>(static_cast<std::size_t>(modes), 0));
  }

  [[nodiscard]] int modes() const { return static_cast<int>(counts_.size()); }
  [[nodiscard]] int operator[](int idx) const {
    return counts_[static_cast<std::size_t>(idx)];
  }
  [[nodiscard]] int at(Mode mode) const;
  [[nodiscard]] int total() const;
  /// Particles on modes strictly before `idx` (0-based).
  [[nodiscard]] int count_before(int idx) const;
  [[nodiscard]] int max_count() const;
  [[nodiscard]] const std::vector<int>& counts() const { return counts_; }
  [[nodiscard]] Occupation shifted(int idx, int delta) const;

  friend bool operator==(const Occupation&, const Occupation&) = default;
  friend auto operator<=>(const Occupation&, const Occupation&) = default;

 private:
  std::vector<int> counts_;
};

struct OccupationHash {
  std::size_t operator()(const Occupation& occ) const noexcept;
};

/// Canonical order used for sparse states and serialized output: total
/// particle number ascending, then lexicographically decreasing.
struct CanonicalLess {
  bool operator()(const Occupation& a, const Occupation& b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    return b < a;
  }
};

/// Complete basis of the fixed-particle-number subspace for `modes` modes,
/// `n_total` particles and at most `cap` particles per mode. Basis order is
/// lexicographically decreasing.
class FockSector {
 public:
  FockSector(int modes, int n_total, int cap);

  [[nodiscard]] int modes() const { return modes_; }
  [[nodiscard]] int n_total() const { return n_total_; }
  [[nodiscard]] int cap() const { return cap_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Occupation>& basis() const { return basis_; }
  [[nodiscard]] const Occupation& operator[](std::size_t k) const {
    return basis_[k];
  }
  [[nodiscard]] std::optional<std::size_t> find(const Occupation& occ) const;
  [[nodiscard]] std::size_t index_of(const Occupation& occ) const;
  [[nodiscard]] bool contains(const Occupation& occ) const {
    return find(occ).has_value();
  }

 private:
  int modes_;
  int n_total_;
  int cap_;
  std::vector<Occupation> basis_;
  std::unordered_map<Occupation, std::size_t, OccupationHash> index_;
};

using SectorHandle = std::shared_ptr<const FockSector>;

/// Canonical sector for the particle class: per-mode cap is 1 for fermions
/// and n_total for bosons, so fixed-number sectors carry no truncation.
[[nodiscard]] SectorHandle enumerate_sector(int modes, int n_total,
                                            const AnyonSpec& spec);

/// Number of basis states in the canonical sector (exact combinatorics).
[[nodiscard]] std::size_t sector_dimension(int modes, int n_total,
                                           const AnyonSpec& spec);

struct BasisTerm {
  Occupation occ;
  Complex amp;
};

/// Creation on one basis state: the resulting basis label and its factor,
/// or nothing when the term vanishes (Pauli).
[[nodiscard]] std::optional<BasisTerm> create_on_basis(const AnyonSpec& spec,
                                                       const Occupation& occ,
                                                       int idx);
[[nodiscard]] std::optional<BasisTerm> annihilate_on_basis(
    const AnyonSpec& spec, const Occupation& occ, int idx);

/// Sparse complex amplitudes over Fock basis labels of a fixed mode count.
/// Labels may span several particle-number sectors (coherent states do).
class StateVector {
 public:
  using AmplitudeMap = std::map<Occupation, Complex, CanonicalLess>;

  explicit StateVector(int modes) : modes_(modes) {}
  StateVector(int modes, AmplitudeMap amps);

  static StateVector basis(const Occupation& occ);
  static StateVector vacuum(int modes) {
    return basis(Occupation::vacuum(modes));
  }
  /// Lifts a dense vector in the sector's basis order.
  static StateVector from_dense(const FockSector& sector, const Vector& amps);

  [[nodiscard]] int modes() const { return modes_; }
  [[nodiscard]] const AmplitudeMap& amplitudes() const { return amps_; }
  [[nodiscard]] bool empty() const { return amps_.empty(); }
  [[nodiscard]] std::size_t size() const { return amps_.size(); }
  [[nodiscard]] Complex amplitude(const Occupation& occ) const;

  /// Accumulates `amp` onto `occ`. Intended for building a state.
  void add(const Occupation& occ, Complex amp);

  [[nodiscard]] double norm() const;
  [[nodiscard]] StateVector normalized() const;
  [[nodiscard]] StateVector pruned(double threshold = kPruneThreshold) const;
  [[nodiscard]] StateVector scaled(Complex factor) const;
  [[nodiscard]] StateVector plus(const StateVector& other) const;

  /// Distinct total particle numbers carried by the stored labels.
  [[nodiscard]] std::vector<int> particle_numbers() const;
  /// Dense amplitudes of the component in `sector` (other labels ignored).
  [[nodiscard]] Vector to_dense(const FockSector& sector) const;
  /// Largest per-mode occupation present.
  [[nodiscard]] int max_occupation() const;

 private:
  int modes_;
  AmplitudeMap amps_;
};

[[nodiscard]] Complex inner(const StateVector& bra, const StateVector& ket);
[[nodiscard]] double fidelity(const StateVector& a, const StateVector& b);
[[nodiscard]] double max_abs_diff(const StateVector& a, const StateVector& b);

/// Throws ValidationError when the state breaks the class's occupation
/// rules (more than one fermion on a mode).
void validate_state(const AnyonSpec& spec, const StateVector& state);

[[nodiscard]] StateVector apply_create(const AnyonSpec& spec,
                                       const StateVector& state, Mode mode);
[[nodiscard]] StateVector apply_annihilate(const AnyonSpec& spec,
                                           const StateVector& state,
                                           Mode mode);
/// Applies a creation string to the vacuum. The last entry acts first, so
/// {1, 2} builds chi^dag_1 chi^dag_2 |0>.
[[nodiscard]] StateVector create_monomial(const AnyonSpec& spec, int modes,
                                          std::span<const Mode> monomial);

[[nodiscard]] double number_expectation(const StateVector& state, Mode mode);

}  // namespace anyonlin
