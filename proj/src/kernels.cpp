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

#include "anyonlin/kernels.hpp"

#include <Eigen/Eigenvalues>

namespace anyonlin::kernels {

namespace {

void fill_column(const FockSector& codomain, const BasisImage& image,
                 const Occupation& occ, std::vector<BasisTerm>& scratch,
                 Matrix& out, Eigen::Index col) {
  scratch.clear();
  image(occ, scratch);
  for (const auto& term : scratch) {
    if (term.occ.total() != codomain.n_total()) continue;
    if (auto row = codomain.find(term.occ)) {
      out(static_cast<Eigen::Index>(*row), col) += term.amp;
    }
  }
}

}  // namespace

Matrix assemble_serial(const FockSector& domain, const FockSector& codomain,
                       const BasisImage& image) {
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(codomain.dim()),
                            static_cast<Eigen::Index>(domain.dim()));
  std::vector<BasisTerm> scratch;
  for (std::size_t k = 0; k < domain.dim(); ++k) {
    fill_column(codomain, image, domain[k], scratch, out,
                static_cast<Eigen::Index>(k));
  }
  return out;
}

Matrix assemble_parallel(const FockSector& domain, const FockSector& codomain,
                         const BasisImage& image) {
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(codomain.dim()),
                            static_cast<Eigen::Index>(domain.dim()));
  const auto n = static_cast<long>(domain.dim());
  // Each iteration owns one output column.
#pragma omp parallel
  {
    std::vector<BasisTerm> scratch;
#pragma omp for schedule(static)
    for (long k = 0; k < n; ++k) {
      fill_column(codomain, image, domain[static_cast<std::size_t>(k)], scratch,
                  out, static_cast<Eigen::Index>(k));
    }
  }
  return out;
}

Matrix assemble(const FockSector& domain, const FockSector& codomain,
                const BasisImage& image) {
  if (domain.dim() >= kParallelThreshold) {
    return assemble_parallel(domain, codomain, image);
  }
  return assemble_serial(domain, codomain, image);
}

namespace {

// Transposed eigenvectors so the k-sum below runs over contiguous memory.
Matrix transposed(const Matrix& evecs) { return evecs.transpose(); }

Vector phase_factors(const Eigen::VectorXd& evals, double scale) {
  Vector phases(evals.size());
  for (Eigen::Index k = 0; k < evals.size(); ++k) {
    phases(k) = std::polar(1.0, scale * evals(k));
  }
  return phases;
}

// out(r, c) = sum_k V(r, k) p_k conj(V(c, k)), k ascending.
inline Complex spectral_entry(const Matrix& vt, const Vector& phases,
                              Eigen::Index r, Eigen::Index c) {
  const Complex* a = vt.col(r).data();
  const Complex* b = vt.col(c).data();
  Complex acc{};
  for (Eigen::Index k = 0; k < vt.rows(); ++k) {
    acc += a[k] * phases(k) * std::conj(b[k]);
  }
  return acc;
}

}  // namespace

Matrix spectral_exp_serial(const Eigen::VectorXd& evals, const Matrix& evecs,
                           double scale) {
  const Eigen::Index n = evecs.rows();
  const Matrix vt = transposed(evecs);
  const Vector phases = phase_factors(evals, scale);
  Matrix out(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) out(r, c) = spectral_entry(vt, phases, r, c);
  }
  return out;
}

Matrix spectral_exp_parallel(const Eigen::VectorXd& evals, const Matrix& evecs,
                             double scale) {
  const Eigen::Index n = evecs.rows();
  const Matrix vt = transposed(evecs);
  const Vector phases = phase_factors(evals, scale);
  Matrix out(n, n);
#pragma omp parallel for schedule(static)
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) out(r, c) = spectral_entry(vt, phases, r, c);
  }
  return out;
}

Matrix hermitian_exp(const Matrix& hermitian, double scale) {
  if (hermitian.rows() == 0) return hermitian;
  const Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian);
  if (es.info() != Eigen::Success) {
    throw AnyonError("Hermitian eigendecomposition did not converge");
  }
  if (static_cast<std::size_t>(hermitian.rows()) >= kParallelThreshold) {
    return spectral_exp_parallel(es.eigenvalues(), es.eigenvectors(), scale);
  }
  return spectral_exp_serial(es.eigenvalues(), es.eigenvectors(), scale);
}

}  // namespace anyonlin::kernels
