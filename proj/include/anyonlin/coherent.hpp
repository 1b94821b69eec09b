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

// Coherent states of bosonic anyons on a truncated Fock space.
//
// Single-mode operators live on span{|0>, ..., |n_max>}. Two-mode families
// keep every |l, k> with l, k <= n_max and are renormalized after the cut.
// Keep |amplitude|^2 well below n_max (the suites use |g| <= 1 with
// n_max = 40) and the truncation tail is far below test tolerances.
//
// Conventions worth knowing:
//  * With q = (b^dag + b)/2 and p = (b - b^dag)/(2i) the commutator is
//    [q, p] = i/2, <q> + i <p> = g on |g>, and coherent states saturate
//    dq * dp = 1/4.
//  * The truncated matrices obey D(g) D(h) = exp((g h* - h g*)/2) D(g + h);
//    displacement_product_factor() measures the scalar rather than assuming
//    it.

#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "anyonlin/fock.hpp"
#include "anyonlin/network.hpp"

namespace anyonlin {

struct Truncation {
  int n_max = 40;

  explicit Truncation(int n = 40) : n_max(n) {
    if (n_max < 1) throw ValidationError("truncation needs n_max >= 1");
  }
  [[nodiscard]] Eigen::Index dim() const { return n_max + 1; }
};

/// Single-mode ladder operator b on the truncated space.
[[nodiscard]] Matrix annihilation_matrix(Truncation trunc);
[[nodiscard]] Matrix quadrature_q(Truncation trunc);
[[nodiscard]] Matrix quadrature_p(Truncation trunc);

/// True when |g|^2 exceeds n_max / 4 and cutoff effects become visible.
[[nodiscard]] bool truncation_risk(Complex g, Truncation trunc);

/// exp(g b^dag - g* b) on the truncated single-mode space.
[[nodiscard]] Matrix displacement(Complex g, Truncation trunc);

/// Scalar lambda with D(g) D(h) = lambda D(g + h), fitted on the low block
/// of the truncated matrices.
[[nodiscard]] Complex displacement_product_factor(Complex g, Complex h,
                                                  Truncation trunc);

/// Normalized truncated coherent state of amplitude g on one mode.
[[nodiscard]] StateVector coherent_state(Complex g, Mode mode, int modes,
                                         Truncation trunc);

/// Single-mode state sum_n e^{i rho(n)} g^n / sqrt(n!) |n>, normalized.
[[nodiscard]] StateVector generalized_coherent_state(
    Complex g, const std::function<double(int)>& rho, Truncation trunc);

/// <(b^dag)^n b^n> / <n>^n on the chosen mode.
[[nodiscard]] double coherence_function(const AnyonSpec& spec,
                                        const StateVector& state, Mode mode,
                                        int order);

namespace family {
/// D_1(u) D_2(v) |0>.
struct ExactLess {
  Complex u, v;
};
/// D_2(v) D_1(u) |0>.
struct ExactGreater {
  Complex u, v;
};
struct Type1 {
  Complex u, v;
};
struct Type2 {
  Complex u, v;
};
struct SingleMode {
  Complex g;
  Mode mode;
};
}  // namespace family

using CoherentFamily =
    std::variant<family::ExactLess, family::ExactGreater, family::Type1,
                 family::Type2, family::SingleMode>;

/// Two-mode state of the family, from its double-sum expansion.
[[nodiscard]] StateVector two_mode_family_state(const CoherentFamily& fam,
                                                const AnyonSpec& spec,
                                                Truncation trunc);

/// Same family with its amplitude pair rotated by the network's
/// single-particle matrix. Exact families are not closed under linear
/// optics and throw.
[[nodiscard]] CoherentFamily evolve_family(const CoherentFamily& fam,
                                           const Network& network,
                                           const AnyonSpec& spec);

/// Applies exp(i phi K_12) with K_12 = n(n-1)/2, n = n_1 + n_2.
[[nodiscard]] StateVector kerr_interconvert(const StateVector& state,
                                            const AnyonSpec& spec,
                                            Truncation trunc);

/// PS_1(pi/2) BS_12(pi/2) PS_2(pi/2) as an operator product, i.e. PS_2 acts
/// first.
[[nodiscard]] Network mirror_network();

/// Amplitude a single particle entering `input` acquires on the other mode.
[[nodiscard]] Complex mirror_reflection(const AnyonSpec& spec, Mode input);

/// Coherent state u on `input` pushed through the mirror network by exact
/// evolution.
[[nodiscard]] StateVector mirror_cat(Complex u, const AnyonSpec& spec,
                                     Truncation trunc, Mode input = Mode{1});

/// Normalized e^{i pi/4} |-i w> - e^{3 i pi/4} |i w> on `mode` of two modes.
[[nodiscard]] StateVector cat_closed_form(Complex w, Mode mode,
                                          Truncation trunc);

/// C(n, l) e^{i phi l(l-1)/2} for l = 0..n: the normal-ordered expansion of
/// prod_{k=0}^{n-1} (e^{i k phi} a chi^dag_i + b chi^dag_j), i < j.
[[nodiscard]] std::vector<Complex> deformed_binomial_coeffs(int n, double phi);

/// e^{-i phi n(n-1)/2}, relating prod (a chi^dag_i + e^{-i k phi} b chi^dag_j)
/// to the product above.
[[nodiscard]] Complex deformed_binomial_prefactor(int n, double phi);

}  // namespace anyonlin
