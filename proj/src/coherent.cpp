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

#include "anyonlin/coherent.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "anyonlin/kernels.hpp"
#include "anyonlin/operators.hpp"

namespace anyonlin {

Matrix annihilation_matrix(Truncation trunc) {
  Matrix b = Matrix::Zero(trunc.dim(), trunc.dim());
  for (Eigen::Index n = 1; n < trunc.dim(); ++n) {
    b(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return b;
}

Matrix quadrature_q(Truncation trunc) {
  const Matrix b = annihilation_matrix(trunc);
  return 0.5 * (b.adjoint() + b);
}

Matrix quadrature_p(Truncation trunc) {
  const Matrix b = annihilation_matrix(trunc);
  return (b - b.adjoint()) / Complex{0.0, 2.0};
}

bool truncation_risk(Complex g, Truncation trunc) {
  return std::norm(g) > trunc.n_max / 4.0;
}

Matrix displacement(Complex g, Truncation trunc) {
  const Matrix b = annihilation_matrix(trunc);
  // D = exp(i H) with H = -i (g b^dag - g* b) Hermitian.
  const Matrix h = -kI * (g * b.adjoint() - std::conj(g) * b);
  Matrix d = kernels::hermitian_exp(0.5 * (h + h.adjoint()), 1.0);
  const Matrix id = Matrix::Identity(d.rows(), d.cols());
  if (max_abs(d.adjoint() * d - id) > 1e-10) {
    const Eigen::JacobiSVD<Matrix> svd(d, Eigen::ComputeFullU | Eigen::ComputeFullV);
    d = svd.matrixU() * svd.matrixV().adjoint();
  }
  return d;
}

Complex displacement_product_factor(Complex g, Complex h, Truncation trunc) {
  const Matrix prod = displacement(g, trunc) * displacement(h, trunc);
  const Matrix sum = displacement(g + h, trunc);
  // Rows and columns near the cutoff are distorted; fit on the low block.
  const Eigen::Index block = std::max<Eigen::Index>(1, trunc.dim() / 2);
  Complex num{};
  double den = 0.0;
  for (Eigen::Index c = 0; c < block; ++c) {
    for (Eigen::Index r = 0; r < block; ++r) {
      num += std::conj(sum(r, c)) * prod(r, c);
      den += std::norm(sum(r, c));
    }
  }
  return num / den;
}

namespace {

// g^n / sqrt(n!) for n = 0..n_max, built incrementally.
std::vector<Complex> coherent_weights(Complex g, int n_max) {
  std::vector<Complex> w(static_cast<std::size_t>(n_max) + 1);
  w[0] = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    w[static_cast<std::size_t>(n)] =
        w[static_cast<std::size_t>(n - 1)] * g / std::sqrt(static_cast<double>(n));
  }
  return w;
}

void check_two_mode(Mode mode) {
  if (mode.label != 1 && mode.label != 2) {
    throw ValidationError("two-mode families live on modes 1 and 2");
  }
}

}  // namespace

StateVector coherent_state(Complex g, Mode mode, int modes, Truncation trunc) {
  if (mode.label < 1 || mode.label > modes) {
    throw ValidationError("mode out of range for coherent state");
  }
  const auto w = coherent_weights(g, trunc.n_max);
  StateVector out(modes);
  for (int n = 0; n <= trunc.n_max; ++n) {
    out.add(Occupation::vacuum(modes).shifted(mode.idx(), n),
            w[static_cast<std::size_t>(n)]);
  }
  return out.pruned(0.0).normalized();
}

StateVector generalized_coherent_state(Complex g,
                                       const std::function<double(int)>& rho,
                                       Truncation trunc) {
  const auto w = coherent_weights(g, trunc.n_max);
  StateVector out(1);
  for (int n = 0; n <= trunc.n_max; ++n) {
    out.add(Occupation{n}, std::polar(1.0, rho(n)) * w[static_cast<std::size_t>(n)]);
  }
  return out.pruned(0.0).normalized();
}

double coherence_function(const AnyonSpec& spec, const StateVector& state,
                          Mode mode, int order) {
  if (order < 1) throw ValidationError("coherence order must be >= 1");
  const double norm2 = std::norm(state.norm());
  const double mean = number_expectation(state, mode) / norm2;
  if (!(mean > 1e-300)) {
    throw DegenerateStateError("coherence function undefined for <n> = 0");
  }
  StateVector lowered = state;
  for (int k = 0; k < order; ++k) lowered = apply_annihilate(spec, lowered, mode);
  const double moment = std::norm(lowered.norm()) / norm2;
  return moment / std::pow(mean, order);
}

StateVector two_mode_family_state(const CoherentFamily& fam,
                                  const AnyonSpec& spec, Truncation trunc) {
  if (spec.is_fermionic()) {
    throw ValidationError("coherent families are defined for bosonic anyons");
  }
  const double phi = spec.phi();
  if (const auto* s = std::get_if<family::SingleMode>(&fam)) {
    check_two_mode(s->mode);
    return coherent_state(s->g, s->mode, 2, trunc);
  }

  Complex u, v;
  std::function<double(int, int)> phase;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (!std::is_same_v<T, family::SingleMode>) {
          u = f.u;
          v = f.v;
        }
        if constexpr (std::is_same_v<T, family::ExactLess>) {
          phase = [](int, int) { return 0.0; };
        } else if constexpr (std::is_same_v<T, family::ExactGreater>) {
          phase = [phi](int l, int k) { return -phi * l * k; };
        } else if constexpr (std::is_same_v<T, family::Type1>) {
          phase = [phi](int l, int k) {
            return -phi * (l * k + 0.5 * k * (k - 1));
          };
        } else if constexpr (std::is_same_v<T, family::Type2>) {
          phase = [phi](int l, int) { return phi * 0.5 * l * (l - 1); };
        }
      },
      fam);

  // (chi^dag_1)^l (chi^dag_2)^k |0> = sqrt(l! k!) |l, k> without extra phase,
  // so each double-sum term contributes c_{l,k} u^l v^k / sqrt(l! k!).
  const auto wu = coherent_weights(u, trunc.n_max);
  const auto wv = coherent_weights(v, trunc.n_max);
  StateVector out(2);
  for (int l = 0; l <= trunc.n_max; ++l) {
    for (int k = 0; k <= trunc.n_max; ++k) {
      const Complex a = std::polar(1.0, phase(l, k)) *
                        wu[static_cast<std::size_t>(l)] *
                        wv[static_cast<std::size_t>(k)];
      if (std::abs(a) > kPruneThreshold) out.add(Occupation{l, k}, a);
    }
  }
  return out.normalized();
}

CoherentFamily evolve_family(const CoherentFamily& fam, const Network& network,
                             const AnyonSpec& spec) {
  if (network.modes() != 2) {
    throw ValidationError("family evolution needs a two-mode network");
  }
  if (std::holds_alternative<family::ExactLess>(fam) ||
      std::holds_alternative<family::ExactGreater>(fam)) {
    throw NotClosedUnderLinearOpticsError(
        "exact two-mode coherent states leave their family under linear optics");
  }
  const Matrix a = single_particle_matrix(spec, network);
  auto rotate = [&](Complex u, Complex v) {
    return std::pair{a(0, 0) * u + a(0, 1) * v, a(1, 0) * u + a(1, 1) * v};
  };
  if (const auto* s = std::get_if<family::SingleMode>(&fam)) {
    check_two_mode(s->mode);
    if (s->mode.label == 1) {
      auto [u, v] = rotate(s->g, 0.0);
      return family::Type1{u, v};
    }
    auto [u, v] = rotate(0.0, s->g);
    return family::Type2{u, v};
  }
  if (const auto* t = std::get_if<family::Type1>(&fam)) {
    auto [u, v] = rotate(t->u, t->v);
    return family::Type1{u, v};
  }
  const auto& t = std::get<family::Type2>(fam);
  auto [u, v] = rotate(t.u, t.v);
  return family::Type2{u, v};
}

StateVector kerr_interconvert(const StateVector& state, const AnyonSpec& spec,
                              Truncation trunc) {
  if (state.modes() < 2) throw ValidationError("Kerr phase needs two modes");
  StateVector out(state.modes());
  for (const auto& [occ, amp] : state.amplitudes()) {
    if (occ.max_count() > trunc.n_max) continue;
    const int n = occ[0] + occ[1];
    out.add(occ, amp * std::polar(1.0, spec.phi() * 0.5 * n * (n - 1)));
  }
  return out;
}

Network mirror_network() {
  const Angle half_pi = Angle::pi_fraction(1, 2);
  Network net(2);
  net.ps(Mode{2}, half_pi).bs(Mode{1}, Mode{2}, half_pi).ps(Mode{1}, half_pi);
  return net;
}

Complex mirror_reflection(const AnyonSpec& spec, Mode input) {
  check_two_mode(input);
  const Matrix a = single_particle_matrix(spec, mirror_network());
  const Eigen::Index in = input.idx();
  return a(1 - in, in);
}

StateVector mirror_cat(Complex u, const AnyonSpec& spec, Truncation trunc,
                       Mode input) {
  check_two_mode(input);
  return evolve(spec, mirror_network(), coherent_state(u, input, 2, trunc));
}

StateVector cat_closed_form(Complex w, Mode mode, Truncation trunc) {
  check_two_mode(mode);
  const StateVector minus = coherent_state(-kI * w, mode, 2, trunc);
  const StateVector plus = coherent_state(kI * w, mode, 2, trunc);
  return minus.scaled(std::polar(1.0, kPi / 4))
      .plus(plus.scaled(-std::polar(1.0, 3 * kPi / 4)))
      .normalized();
}

std::vector<Complex> deformed_binomial_coeffs(int n, double phi) {
  if (n < 0) throw ValidationError("binomial order must be non-negative");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  double binom = 1.0;
  for (int l = 0; l <= n; ++l) {
    out.push_back(binom * std::polar(1.0, phi * 0.5 * l * (l - 1)));
    binom = binom * (n - l) / (l + 1);
  }
  return out;
}

Complex deformed_binomial_prefactor(int n, double phi) {
  return std::polar(1.0, -phi * 0.5 * n * (n - 1));
}

}  // namespace anyonlin
