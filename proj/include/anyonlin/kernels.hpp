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

// Data-parallel inner loops. Every kernel has a serial reference with the
// same signature; the dispatching entry point picks the OpenMP version once
// the work is large enough. Results are identical up to floating-point
// summation order, which the kernels keep fixed per output element, so the
// two paths agree bit-for-bit.

#pragma once

#include <functional>
#include <vector>

#include "anyonlin/common.hpp"
#include "anyonlin/fock.hpp"

namespace anyonlin::kernels {

/// Image of one basis state under an operator, as a short list of terms.
/// Must be safe to call concurrently.
using BasisImage =
    std::function<void(const Occupation&, std::vector<BasisTerm>&)>;

/// Column k of the result is the image of domain[k], expanded in the
/// codomain basis. Terms landing outside the codomain are dropped.
[[nodiscard]] Matrix assemble_serial(const FockSector& domain,
                                     const FockSector& codomain,
                                     const BasisImage& image);
[[nodiscard]] Matrix assemble_parallel(const FockSector& domain,
                                       const FockSector& codomain,
                                       const BasisImage& image);
[[nodiscard]] Matrix assemble(const FockSector& domain,
                              const FockSector& codomain,
                              const BasisImage& image);

/// V diag(exp(i scale lambda)) V^dag from an eigendecomposition.
[[nodiscard]] Matrix spectral_exp_serial(const Eigen::VectorXd& evals,
                                         const Matrix& evecs, double scale);
[[nodiscard]] Matrix spectral_exp_parallel(const Eigen::VectorXd& evals,
                                           const Matrix& evecs, double scale);

/// exp(i scale H) for Hermitian H via its eigendecomposition.
[[nodiscard]] Matrix hermitian_exp(const Matrix& hermitian, double scale);

/// Work size (matrix dimension) above which the dispatchers go parallel.
inline constexpr std::size_t kParallelThreshold = 64;

}  // namespace anyonlin::kernels
