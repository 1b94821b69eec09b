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

#include <vector>

#include "anyonlin/common.hpp"
#include "anyonlin/fock.hpp"

namespace anyonlin {

/// Dense matrix of an operator between two fixed-number sectors. Passive
/// operators have domain == codomain.
class OperatorMatrix {
 public:
  OperatorMatrix(SectorHandle domain, SectorHandle codomain, Matrix mat);
  OperatorMatrix(SectorHandle sector, Matrix mat)
      : OperatorMatrix(sector, sector, std::move(mat)) {}

  [[nodiscard]] const FockSector& domain() const { return *domain_; }
  [[nodiscard]] const FockSector& codomain() const { return *codomain_; }
  [[nodiscard]] const SectorHandle& domain_handle() const { return domain_; }
  [[nodiscard]] const SectorHandle& codomain_handle() const {
    return codomain_;
  }
  [[nodiscard]] const Matrix& mat() const { return mat_; }
  [[nodiscard]] Eigen::Index dim() const { return mat_.cols(); }

  [[nodiscard]] StateVector apply(const StateVector& state) const;
  [[nodiscard]] double hermiticity_residual() const;
  [[nodiscard]] double unitarity_residual() const;

 private:
  SectorHandle domain_;
  SectorHandle codomain_;
  Matrix mat_;
};

[[nodiscard]] Matrix commutator(const Matrix& a, const Matrix& b);
[[nodiscard]] double max_abs(const Matrix& m);

/// Coefficients of a passive quadratic Hamiltonian: real on-site terms and
/// hopping amplitudes with b_ij = conj(b_ji) and zero diagonal.
class QuadraticCoeffs {
 public:
  /// Builds from the on-site vector and the strictly lower triangle of
  /// `hopping`; the upper triangle is the mirrored conjugate.
  static QuadraticCoeffs from_lower(std::vector<double> onsite,
                                    const Matrix& hopping);
  /// Validates a full hopping matrix; rejects non-Hermitian input.
  QuadraticCoeffs(std::vector<double> onsite, Matrix hopping);

  [[nodiscard]] int modes() const { return static_cast<int>(onsite_.size()); }
  [[nodiscard]] const std::vector<double>& onsite() const { return onsite_; }
  [[nodiscard]] const Matrix& hopping() const { return hopping_; }

 private:
  std::vector<double> onsite_;
  Matrix hopping_;
};

/// chi^dag_i (dagger) or chi_i between the sector and its neighbour with one
/// more or one fewer particle, from the direct Fock action.
[[nodiscard]] OperatorMatrix ladder_matrix(const AnyonSpec& spec,
                                           const SectorHandle& sector,
                                           Mode mode, bool dagger);

/// chi^dag_i chi_j on the sector.
[[nodiscard]] OperatorMatrix quadratic_matrix(const AnyonSpec& spec,
                                              const SectorHandle& sector,
                                              Mode i, Mode j);

/// chi^dag_i chi^dag_j chi_k chi_l on the sector.
[[nodiscard]] OperatorMatrix quartic_matrix(const AnyonSpec& spec,
                                            const SectorHandle& sector,
                                            Mode i, Mode j, Mode k, Mode l);

struct Su2Generators {
  OperatorMatrix j1;
  OperatorMatrix j2;
  OperatorMatrix j3;
};

/// Two-mode SU(2) generators J^1, J^2, J^3 on modes (i, j).
[[nodiscard]] Su2Generators su2_generators(const AnyonSpec& spec,
                                           const SectorHandle& sector, Mode i,
                                           Mode j);

/// Coefficient of the quartic term left over in the commutator of two
/// quadratic operators. The term it multiplies is closure_quartic(), i.e.
/// chi^dag_i chi^dag_k chi_j chi_l: the commutator only ever creates on
/// modes i, k and annihilates on j, l.
[[nodiscard]] Complex closure_delta(const AnyonSpec& spec, Mode i, Mode j,
                                    Mode k, Mode l);

/// [chi^dag_i chi_j, chi^dag_k chi_l] minus its quadratic part
/// (delta_jk chi^dag_i chi_l - delta_il chi^dag_k chi_j).
[[nodiscard]] OperatorMatrix closure_defect(const AnyonSpec& spec,
                                            const SectorHandle& sector, Mode i,
                                            Mode j, Mode k, Mode l);

/// chi^dag_i chi^dag_k chi_j chi_l, so that
/// closure_defect(i, j, k, l) == closure_delta(i, j, k, l) * closure_quartic(i, j, k, l).
[[nodiscard]] OperatorMatrix closure_quartic(const AnyonSpec& spec,
                                             const SectorHandle& sector, Mode i,
                                             Mode j, Mode k, Mode l);

/// Anyonic ladder operator obtained from the standard-particle one through
/// the generalized Jordan-Wigner string exp(-+ i phi sum_{k<i} n_k).
[[nodiscard]] OperatorMatrix jw_image(const AnyonSpec& spec,
                                      const SectorHandle& sector, Mode mode,
                                      bool dagger);

[[nodiscard]] OperatorMatrix hamiltonian(const AnyonSpec& spec,
                                         const SectorHandle& sector,
                                         const QuadraticCoeffs& coeffs);

/// (n_i + n_j)(n_i + n_j - 1) / 2, diagonal.
[[nodiscard]] OperatorMatrix kerr_hamiltonian(const SectorHandle& sector,
                                              Mode i, Mode j);

}  // namespace anyonlin
