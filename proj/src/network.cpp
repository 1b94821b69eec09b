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

#include "anyonlin/network.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "anyonlin/kernels.hpp"

namespace anyonlin {

namespace {

void check_label(int modes, Mode mode) {
  if (mode.label < 1 || mode.label > modes) {
    throw ValidationError("mode " + std::to_string(mode.label) +
                          " out of range 1.." + std::to_string(modes));
  }
}

}  // namespace

Network::Network(int modes) : modes_(modes) {
  if (modes < 1) throw ValidationError("network needs at least one mode");
}

Network& Network::ps(Mode mode, Angle tau) {
  return add(PhaseShift{mode, tau});
}

Network& Network::bs(Mode i, Mode j, Angle theta) {
  return add(BeamSplit{i, j, theta});
}

Network& Network::add(const Element& element) {
  std::visit(
      [&](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, PhaseShift>) {
          check_label(modes_, e.mode);
        } else {
          check_label(modes_, e.i);
          check_label(modes_, e.j);
          if (e.i == e.j) {
            throw ValidationError("beam splitter needs two distinct modes");
          }
        }
      },
      element);
  elements_.push_back(element);
  return *this;
}

Network& Network::append(const Network& other) {
  if (other.modes_ != modes_) {
    throw ValidationError("cannot append networks over different mode counts");
  }
  for (const auto& e : other.elements_) add(e);
  return *this;
}

Network& Network::append_shifted(const Network& other, int offset) {
  for (const auto& e : other.elements_) {
    if (const auto* ps = std::get_if<PhaseShift>(&e)) {
      add(PhaseShift{Mode{ps->mode.label + offset}, ps->tau});
    } else {
      const auto& bs = std::get<BeamSplit>(e);
      add(BeamSplit{Mode{bs.i.label + offset}, Mode{bs.j.label + offset},
                    bs.theta});
    }
  }
  return *this;
}

OperatorMatrix element_generator(const AnyonSpec& spec,
                                 const SectorHandle& sector,
                                 const Element& element) {
  if (const auto* ps = std::get_if<PhaseShift>(&element)) {
    Matrix gen = ps->tau.radians() *
                 quadratic_matrix(spec, sector, ps->mode, ps->mode).mat();
    return {sector, std::move(gen)};
  }
  const auto& bs = std::get<BeamSplit>(element);
  Matrix gen = quadratic_matrix(spec, sector, bs.i, bs.j).mat();
  gen += quadratic_matrix(spec, sector, bs.j, bs.i).mat();
  return {sector, bs.theta.radians() * gen};
}

OperatorMatrix element_unitary(const AnyonSpec& spec,
                               const SectorHandle& sector,
                               const Element& element) {
  const Matrix gen = element_generator(spec, sector, element).mat();
  const auto dim = static_cast<Eigen::Index>(sector->dim());
  Matrix u = Matrix::Zero(dim, dim);
  if (std::holds_alternative<PhaseShift>(element)) {
    for (Eigen::Index k = 0; k < dim; ++k) u(k, k) = std::exp(kI * gen(k, k).real());
    return {sector, std::move(u)};
  }
  // a splitter only moves particles between its two modes, so the generator
  // is block diagonal over the occupations of everything else
  const auto& bs = std::get<BeamSplit>(element);
  std::map<std::vector<int>, std::vector<Eigen::Index>> blocks;
  for (Eigen::Index k = 0; k < dim; ++k) {
    std::vector<int> key = (*sector)[static_cast<std::size_t>(k)].counts();
    key[static_cast<std::size_t>(bs.i.idx())] = 0;
    key[static_cast<std::size_t>(bs.j.idx())] = 0;
    blocks[std::move(key)].push_back(k);
  }
  for (const auto& [key, idx] : blocks) {
    const auto b = static_cast<Eigen::Index>(idx.size());
    Matrix sub(b, b);
    for (Eigen::Index r = 0; r < b; ++r)
      for (Eigen::Index c = 0; c < b; ++c) sub(r, c) = gen(idx[r], idx[c]);
    const Matrix e = kernels::hermitian_exp(sub, 1.0);
    for (Eigen::Index r = 0; r < b; ++r)
      for (Eigen::Index c = 0; c < b; ++c) u(idx[r], idx[c]) = e(r, c);
  }
  return {sector, std::move(u)};
}

OperatorMatrix network_unitary(const AnyonSpec& spec,
                               const SectorHandle& sector,
                               const Network& network) {
  if (network.modes() != sector->modes()) {
    throw ValidationError("network and sector mode counts differ");
  }
  const auto dim = static_cast<Eigen::Index>(sector->dim());
  Matrix u = Matrix::Identity(dim, dim);
  for (const auto& e : network.elements()) {
    u = element_unitary(spec, sector, e).mat() * u;
  }
  return {sector, std::move(u)};
}

OperatorMatrix g_operator_matrix(const AnyonSpec& spec,
                                 const SectorHandle& sector,
                                 const GOperator& g) {
  const Su2Generators su2 = su2_generators(spec, sector, g.i, g.j);
  const double w = g.winding * spec.phi();
  const Matrix bs =
      element_unitary(spec, sector,
                      BeamSplit{g.i, g.j, Angle::from_radians(g.theta)})
          .mat();
  const Matrix left = kernels::hermitian_exp(su2.j3.mat(), w);
  const Matrix right = kernels::hermitian_exp(su2.j3.mat(), -w);
  return {sector, left * bs * right};
}

StateVector evolve(const AnyonSpec& spec, const Network& network,
                   const StateVector& state) {
  if (state.modes() != network.modes()) {
    throw ValidationError("state has " + std::to_string(state.modes()) +
                          " modes but the network has " +
                          std::to_string(network.modes()));
  }
  validate_state(spec, state);
  StateVector out(state.modes());
  for (int n : state.particle_numbers()) {
    const SectorHandle sector = enumerate_sector(state.modes(), n, spec);
    Vector v = state.to_dense(*sector);
    for (const auto& e : network.elements()) {
      v = element_unitary(spec, sector, e).mat() * v;
    }
    out = out.plus(StateVector::from_dense(*sector, v));
  }
  return out.pruned();
}

Matrix single_particle_matrix(const AnyonSpec& spec, const Network& network) {
  const SectorHandle sector = enumerate_sector(network.modes(), 1, spec);
  const Matrix u = network_unitary(spec, sector, network).mat();
  const auto m = network.modes();
  Matrix out(m, m);
  for (int col = 0; col < m; ++col) {
    const auto c = sector->index_of(Occupation::vacuum(m).shifted(col, 1));
    for (int row = 0; row < m; ++row) {
      const auto r = sector->index_of(Occupation::vacuum(m).shifted(row, 1));
      out(row, col) = u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

StateVector propagate_algebraic(const AnyonSpec& spec, int modes,
                                const BeamSplit& splitter,
                                std::span<const Mode> monomial) {
  check_label(modes, splitter.i);
  check_label(modes, splitter.j);
  if (splitter.i == splitter.j) {
    throw ValidationError("beam splitter needs two distinct modes");
  }
  // BS_ij = BS_ji, so the identities are applied with i < j.
  const Mode lo = std::min(splitter.i, splitter.j);
  const Mode hi = std::max(splitter.i, splitter.j);
  for (Mode k : monomial) {
    check_label(modes, k);
    if (k < lo || k > hi) {
      throw UnsupportedPropagationError(
          "mode " + std::to_string(k.label) + " lies outside the span of BS_" +
          std::to_string(lo.label) + std::to_string(hi.label));
    }
  }

  struct Branch {
    Complex coeff;
    std::vector<Mode> emitted;
    int winding;
  };
  const double theta = splitter.theta.radians();
  const double phi = spec.phi();
  const Complex c{std::cos(theta), 0.0};
  const Complex is = kI * std::sin(theta);

  std::vector<Branch> branches{{Complex{1.0, 0.0}, {}, 0}};
  for (Mode k : monomial) {
    std::vector<Branch> next;
    next.reserve(branches.size() * 2);
    for (auto& b : branches) {
      if (k == lo || k == hi) {
        // G^{n phi} chi^dag_lo = (cos chi^dag_lo + i e^{-i n phi} sin chi^dag_hi) G^{(n+1) phi}
        // G^{n phi} chi^dag_hi = (cos chi^dag_hi + i e^{+i n phi} sin chi^dag_lo) G^{(n+1) phi}
        const Mode other = (k == lo) ? hi : lo;
        const double sign = (k == lo) ? -1.0 : 1.0;
        Branch stay{b.coeff * c, b.emitted, b.winding + 1};
        stay.emitted.push_back(k);
        Branch cross{b.coeff * is * std::polar(1.0, sign * b.winding * phi),
                     b.emitted, b.winding + 1};
        cross.emitted.push_back(other);
        next.push_back(std::move(stay));
        next.push_back(std::move(cross));
      } else {
        // Strictly intermediate mode: commutes through, winding advances by 2.
        b.emitted.push_back(k);
        b.winding += 2;
        next.push_back(std::move(b));
      }
    }
    branches = std::move(next);
  }

  // The trailing G acts trivially on the vacuum.
  StateVector out(modes);
  for (const auto& b : branches) {
    if (std::abs(b.coeff) <= kPruneThreshold) continue;
    out = out.plus(create_monomial(spec, modes, b.emitted).scaled(b.coeff));
  }
  return out.pruned();
}

Network build_braiding_network() {
  const Angle half_pi = Angle::pi_fraction(1, 2);
  Network net(3);
  net.bs(Mode{2}, Mode{3}, half_pi)
      .bs(Mode{1}, Mode{2}, half_pi)
      .bs(Mode{1}, Mode{3}, half_pi)
      .bs(Mode{1}, Mode{2}, half_pi)
      .ps(Mode{1}, Angle::pi_fraction(1))
      .ps(Mode{2}, half_pi)
      .ps(Mode{3}, half_pi);
  return net;
}

}  // namespace anyonlin
