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

#include "anyonlin/operators.hpp"

#include <cmath>

#include "anyonlin/kernels.hpp"

namespace anyonlin {

OperatorMatrix::OperatorMatrix(SectorHandle domain, SectorHandle codomain,
                               Matrix mat)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      mat_(std::move(mat)) {
  if (static_cast<std::size_t>(mat_.cols()) != domain_->dim() ||
      static_cast<std::size_t>(mat_.rows()) != codomain_->dim()) {
    throw AnyonError("operator matrix shape does not match its sectors");
  }
}

StateVector OperatorMatrix::apply(const StateVector& state) const {
  if (state.modes() != domain_->modes()) {
    throw ValidationError("state mode count does not match operator");
  }
  for (const auto& [occ, amp] : state.amplitudes()) {
    if (!domain_->contains(occ)) {
      throw ValidationError("state has components outside the operator sector");
    }
  }
  return StateVector::from_dense(*codomain_, mat_ * state.to_dense(*domain_));
}

double OperatorMatrix::hermiticity_residual() const {
  return max_abs(mat_ - mat_.adjoint());
}

double OperatorMatrix::unitarity_residual() const {
  return max_abs(mat_.adjoint() * mat_ - Matrix::Identity(mat_.cols(), mat_.cols()));
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

QuadraticCoeffs QuadraticCoeffs::from_lower(std::vector<double> onsite,
                                            const Matrix& hopping) {
  const auto m = static_cast<Eigen::Index>(onsite.size());
  if (hopping.rows() != m || hopping.cols() != m) {
    throw ValidationError("hopping matrix must be m x m");
  }
  Matrix full = Matrix::Zero(m, m);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < r; ++c) {
      full(r, c) = hopping(r, c);
      full(c, r) = std::conj(hopping(r, c));
    }
  }
  return {std::move(onsite), std::move(full)};
}

QuadraticCoeffs::QuadraticCoeffs(std::vector<double> onsite, Matrix hopping)
    : onsite_(std::move(onsite)), hopping_(std::move(hopping)) {
  const auto m = static_cast<Eigen::Index>(onsite_.size());
  if (hopping_.rows() != m || hopping_.cols() != m) {
    throw ValidationError("hopping matrix must be m x m");
  }
  for (Eigen::Index r = 0; r < m; ++r) {
    if (std::abs(hopping_(r, r)) != 0.0) {
      throw ValidationError("hopping matrix must have a zero diagonal");
    }
  }
  if (max_abs(hopping_ - hopping_.adjoint()) > kAtolAlgebra) {
    throw ValidationError("hopping matrix must satisfy b_ij = conj(b_ji)");
  }
}

namespace {

void check_mode(const FockSector& sector, Mode mode) {
  if (mode.label < 1 || mode.label > sector.modes()) {
    throw ValidationError("mode " + std::to_string(mode.label) +
                          " out of range 1.." + std::to_string(sector.modes()));
  }
}

bool canonical_cap(const FockSector& s) { return s.cap() >= s.n_total(); }

SectorHandle neighbour_sector(const AnyonSpec& spec, const FockSector& s,
                              int delta) {
  const int n = s.n_total() + delta;
  if (n < 0) throw ValidationError("no sector below the vacuum");
  int cap = s.cap();
  if (spec.is_fermionic()) {
    cap = 1;
  } else if (canonical_cap(s)) {
    cap = n;
  }
  return std::make_shared<const FockSector>(s.modes(), n, cap);
}

// Standard boson/fermion ladder action, kept separate from the anyonic Fock
// rules so the Jordan-Wigner check compares two independent constructions.
std::optional<BasisTerm> standard_ladder(const AnyonSpec& spec,
                                         const Occupation& occ, int idx,
                                         bool dagger) {
  const int n = occ[idx];
  double factor = 1.0;
  if (spec.is_fermionic()) {
    if (dagger ? n != 0 : n != 1) return std::nullopt;
    if (occ.count_before(idx) % 2 != 0) factor = -1.0;
  } else {
    if (!dagger && n == 0) return std::nullopt;
    factor = std::sqrt(static_cast<double>(dagger ? n + 1 : n));
  }
  return BasisTerm{occ.shifted(idx, dagger ? +1 : -1), Complex{factor, 0.0}};
}

}  // namespace

OperatorMatrix ladder_matrix(const AnyonSpec& spec, const SectorHandle& sector,
                             Mode mode, bool dagger) {
  check_mode(*sector, mode);
  auto target = neighbour_sector(spec, *sector, dagger ? +1 : -1);
  const int idx = mode.idx();
  Matrix mat = kernels::assemble(
      *sector, *target, [&](const Occupation& occ, std::vector<BasisTerm>& out) {
        auto term = dagger ? create_on_basis(spec, occ, idx)
                           : annihilate_on_basis(spec, occ, idx);
        if (term) out.push_back(std::move(*term));
      });
  return {sector, target, std::move(mat)};
}

OperatorMatrix quadratic_matrix(const AnyonSpec& spec,
                                const SectorHandle& sector, Mode i, Mode j) {
  check_mode(*sector, i);
  check_mode(*sector, j);
  const int ci = i.idx();
  const int aj = j.idx();
  Matrix mat = kernels::assemble(
      *sector, *sector, [&](const Occupation& occ, std::vector<BasisTerm>& out) {
        auto lowered = annihilate_on_basis(spec, occ, aj);
        if (!lowered) return;
        auto raised = create_on_basis(spec, lowered->occ, ci);
        if (!raised) return;
        out.push_back({raised->occ, lowered->amp * raised->amp});
      });
  return {sector, std::move(mat)};
}

OperatorMatrix quartic_matrix(const AnyonSpec& spec, const SectorHandle& sector,
                              Mode i, Mode j, Mode k, Mode l) {
  for (Mode m : {i, j, k, l}) check_mode(*sector, m);
  Matrix mat = kernels::assemble(
      *sector, *sector, [&](const Occupation& occ, std::vector<BasisTerm>& out) {
        Complex amp{1.0, 0.0};
        Occupation cur = occ;
        // Rightmost operator acts first: chi_l, chi_k, chi^dag_j, chi^dag_i.
        for (int idx : {l.idx(), k.idx()}) {
          auto t = annihilate_on_basis(spec, cur, idx);
          if (!t) return;
          amp *= t->amp;
          cur = std::move(t->occ);
        }
        for (int idx : {j.idx(), i.idx()}) {
          auto t = create_on_basis(spec, cur, idx);
          if (!t) return;
          amp *= t->amp;
          cur = std::move(t->occ);
        }
        out.push_back({std::move(cur), amp});
      });
  return {sector, std::move(mat)};
}

Su2Generators su2_generators(const AnyonSpec& spec, const SectorHandle& sector,
                             Mode i, Mode j) {
  const Matrix hop_ij = quadratic_matrix(spec, sector, i, j).mat();
  const Matrix hop_ji = quadratic_matrix(spec, sector, j, i).mat();
  const Matrix n_i = quadratic_matrix(spec, sector, i, i).mat();
  const Matrix n_j = quadratic_matrix(spec, sector, j, j).mat();
  return {
      OperatorMatrix(sector, 0.5 * (hop_ij + hop_ji)),
      OperatorMatrix(sector, Complex{0.0, -0.5} * (hop_ij - hop_ji)),
      OperatorMatrix(sector, 0.5 * (n_i - n_j)),
  };
}

Complex closure_delta(const AnyonSpec& spec, Mode i, Mode j, Mode k, Mode l) {
  const int a = i.label, b = j.label, c = k.label, d = l.label;
  const double phi = spec.phi();
  const Complex first = std::polar(1.0, -phi * sign_eps(b, c));
  const Complex second = std::polar(
      1.0, -phi * (sign_eps(d, a) - sign_eps(c, a) - sign_eps(d, b)));
  return spec.is_fermionic() ? second - first : first - second;
}

OperatorMatrix closure_defect(const AnyonSpec& spec, const SectorHandle& sector,
                              Mode i, Mode j, Mode k, Mode l) {
  const Matrix a = quadratic_matrix(spec, sector, i, j).mat();
  const Matrix b = quadratic_matrix(spec, sector, k, l).mat();
  Matrix defect = commutator(a, b);
  if (j == k) defect -= quadratic_matrix(spec, sector, i, l).mat();
  if (i == l) defect += quadratic_matrix(spec, sector, k, j).mat();
  return {sector, std::move(defect)};
}

OperatorMatrix closure_quartic(const AnyonSpec& spec, const SectorHandle& sector,
                               Mode i, Mode j, Mode k, Mode l) {
  return quartic_matrix(spec, sector, i, k, j, l);
}

OperatorMatrix jw_image(const AnyonSpec& spec, const SectorHandle& sector,
                        Mode mode, bool dagger) {
  check_mode(*sector, mode);
  auto target = neighbour_sector(spec, *sector, dagger ? +1 : -1);
  const int idx = mode.idx();
  const Matrix standard = kernels::assemble(
      *sector, *target, [&](const Occupation& occ, std::vector<BasisTerm>& out) {
        if (auto t = standard_ladder(spec, occ, idx, dagger)) out.push_back(*t);
      });
  // The string only counts modes before `idx`, which the ladder operator
  // leaves untouched, so it can be evaluated on the codomain side.
  const double sign = dagger ? -1.0 : 1.0;
  Vector string(static_cast<Eigen::Index>(target->dim()));
  for (std::size_t r = 0; r < target->dim(); ++r) {
    string(static_cast<Eigen::Index>(r)) =
        std::polar(1.0, sign * spec.phi() * (*target)[r].count_before(idx));
  }
  return {sector, target, string.asDiagonal() * standard};
}

OperatorMatrix hamiltonian(const AnyonSpec& spec, const SectorHandle& sector,
                           const QuadraticCoeffs& coeffs) {
  if (coeffs.modes() != sector->modes()) {
    throw ValidationError("coefficient mode count does not match the sector");
  }
  const auto dim = static_cast<Eigen::Index>(sector->dim());
  Matrix h = Matrix::Zero(dim, dim);
  for (int a = 0; a < coeffs.modes(); ++a) {
    const Mode ma{a + 1};
    if (coeffs.onsite()[static_cast<std::size_t>(a)] != 0.0) {
      h += coeffs.onsite()[static_cast<std::size_t>(a)] *
           quadratic_matrix(spec, sector, ma, ma).mat();
    }
    for (int b = 0; b < coeffs.modes(); ++b) {
      const Complex bij = coeffs.hopping()(a, b);
      if (a == b || bij == Complex{}) continue;
      h += bij * quadratic_matrix(spec, sector, ma, Mode{b + 1}).mat();
    }
  }
  return {sector, std::move(h)};
}

OperatorMatrix kerr_hamiltonian(const SectorHandle& sector, Mode i, Mode j) {
  check_mode(*sector, i);
  check_mode(*sector, j);
  const auto dim = static_cast<Eigen::Index>(sector->dim());
  Matrix k = Matrix::Zero(dim, dim);
  for (std::size_t r = 0; r < sector->dim(); ++r) {
    const Occupation& occ = (*sector)[r];
    const int n = occ[i.idx()] + (i == j ? 0 : occ[j.idx()]);
    k(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r)) =
        0.5 * n * (n - 1);
  }
  return {sector, std::move(k)};
}

}  // namespace anyonlin
