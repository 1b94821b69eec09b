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

#include "anyonlin/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace anyonlin {

AnyonSpec::AnyonSpec(ParticleClass cls, double phi) : cls_(cls) {
  if (!std::isfinite(phi)) throw ValidationError("exchange phase must be finite");
  phi_ = std::fmod(phi, kTwoPi);
  if (phi_ < 0.0) phi_ += kTwoPi;
  // fmod can land exactly on 2pi after the shift for tiny negative inputs.
  if (phi_ >= kTwoPi) phi_ = 0.0;
}

Occupation::Occupation(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) throw ValidationError("occupation numbers must be non-negative");
  }
}

Occupation::Occupation(std::initializer_list<int> counts)
    : Occupation(std::vector<int>(counts)) {}

int Occupation::at(Mode mode) const {
  if (mode.label < 1 || mode.label > modes()) {
    throw ValidationError("mode " + std::to_string(mode.label) +
                          " out of range 1.." + std::to_string(modes()));
  }
  return counts_[static_cast<std::size_t>(mode.idx())];
}

int Occupation::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

int Occupation::count_before(int idx) const {
  return std::accumulate(counts_.begin(), counts_.begin() + idx, 0);
}

int Occupation::max_count() const {
  return counts_.empty() ? 0 : *std::max_element(counts_.begin(), counts_.end());
}

Occupation Occupation::shifted(int idx, int delta) const {
  Occupation out = *this;
  out.counts_[static_cast<std::size_t>(idx)] += delta;
  return out;
}

std::size_t OccupationHash::operator()(const Occupation& occ) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int c : occ.counts()) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void enumerate_rec(int modes, int remaining, int cap, std::vector<int>& prefix,
                   std::vector<Occupation>& out) {
  const int k = static_cast<int>(prefix.size());
  if (k == modes - 1) {
    if (remaining <= cap) {
      prefix.push_back(remaining);
      out.emplace_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (int x = std::min(remaining, cap); x >= 0; --x) {
    prefix.push_back(x);
    enumerate_rec(modes, remaining - x, cap, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

FockSector::FockSector(int modes, int n_total, int cap)
    : modes_(modes), n_total_(n_total), cap_(cap) {
  if (modes < 1) throw ValidationError("sector needs at least one mode");
  if (n_total < 0) throw ValidationError("particle number must be non-negative");
  if (cap < 0) throw ValidationError("occupation cap must be non-negative");
  if (static_cast<long>(cap) * modes < n_total) {
    throw EmptySectorError("no basis states: " + std::to_string(n_total) +
                           " particles do not fit " + std::to_string(modes) +
                           " modes with cap " + std::to_string(cap));
  }
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(modes));
  enumerate_rec(modes, n_total, cap, prefix, basis_);
  index_.reserve(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
}

std::optional<std::size_t> FockSector::find(const Occupation& occ) const {
  auto it = index_.find(occ);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FockSector::index_of(const Occupation& occ) const {
  auto k = find(occ);
  if (!k) throw ValidationError("basis label not in sector");
  return *k;
}

SectorHandle enumerate_sector(int modes, int n_total, const AnyonSpec& spec) {
  const int cap = spec.is_fermionic() ? 1 : n_total;
  if (spec.is_fermionic() && n_total > modes) {
    throw EmptySectorError(std::to_string(n_total) +
                           " fermions cannot occupy " + std::to_string(modes) +
                           " modes");
  }
  return std::make_shared<const FockSector>(modes, n_total, cap);
}

std::size_t sector_dimension(int modes, int n_total, const AnyonSpec& spec) {
  auto binom = [](long n, long k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (long t = 1; t <= k; ++t) r = r * static_cast<double>(n - k + t) / t;
    return std::round(r);
  };
  if (spec.is_fermionic()) return static_cast<std::size_t>(binom(modes, n_total));
  return static_cast<std::size_t>(binom(modes + n_total - 1, n_total));
}

// The anyonic string phase is exp(-i phi s) for creation and its conjugate
// for annihilation, with s the number of particles on earlier modes. The
// fermionic class additionally carries the Jordan-Wigner sign (-1)^s of
// standard fermions.
std::optional<BasisTerm> create_on_basis(const AnyonSpec& spec,
                                         const Occupation& occ, int idx) {
  const int s = occ.count_before(idx);
  const int n = occ[idx];
  Complex factor = std::polar(1.0, -spec.phi() * s);
  if (spec.is_fermionic()) {
    if (n != 0) return std::nullopt;
    if (s % 2 != 0) factor = -factor;
  } else {
    factor *= std::sqrt(static_cast<double>(n + 1));
  }
  return BasisTerm{occ.shifted(idx, +1), factor};
}

std::optional<BasisTerm> annihilate_on_basis(const AnyonSpec& spec,
                                             const Occupation& occ, int idx) {
  const int n = occ[idx];
  if (n == 0) return std::nullopt;
  const int s = occ.count_before(idx);
  Complex factor = std::polar(1.0, spec.phi() * s);
  if (spec.is_fermionic()) {
    if (s % 2 != 0) factor = -factor;
  } else {
    factor *= std::sqrt(static_cast<double>(n));
  }
  return BasisTerm{occ.shifted(idx, -1), factor};
}

StateVector::StateVector(int modes, AmplitudeMap amps)
    : modes_(modes), amps_(std::move(amps)) {
  for (const auto& [occ, amp] : amps_) {
    if (occ.modes() != modes_) throw ValidationError("mode count mismatch in state");
  }
}

StateVector StateVector::basis(const Occupation& occ) {
  StateVector s(occ.modes());
  s.amps_.emplace(occ, Complex{1.0, 0.0});
  return s;
}

StateVector StateVector::from_dense(const FockSector& sector,
                                    const Vector& amps) {
  StateVector s(sector.modes());
  for (std::size_t k = 0; k < sector.dim(); ++k) {
    const Complex a = amps(static_cast<Eigen::Index>(k));
    if (std::abs(a) > kPruneThreshold) s.amps_.emplace(sector[k], a);
  }
  return s;
}

Complex StateVector::amplitude(const Occupation& occ) const {
  auto it = amps_.find(occ);
  return it == amps_.end() ? Complex{} : it->second;
}

void StateVector::add(const Occupation& occ, Complex amp) {
  if (occ.modes() != modes_) throw ValidationError("mode count mismatch in state");
  amps_[occ] += amp;
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const auto& [occ, amp] : amps_) acc += std::norm(amp);
  return std::sqrt(acc);
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw DegenerateStateError("cannot normalize the zero vector");
  return scaled(1.0 / n);
}

StateVector StateVector::pruned(double threshold) const {
  StateVector out(modes_);
  for (const auto& [occ, amp] : amps_) {
    if (std::abs(amp) > threshold) out.amps_.emplace(occ, amp);
  }
  return out;
}

StateVector StateVector::scaled(Complex factor) const {
  StateVector out(modes_);
  for (const auto& [occ, amp] : amps_) out.amps_.emplace(occ, amp * factor);
  return out;
}

StateVector StateVector::plus(const StateVector& other) const {
  if (other.modes_ != modes_) throw ValidationError("mode count mismatch in state");
  StateVector out = *this;
  for (const auto& [occ, amp] : other.amps_) out.amps_[occ] += amp;
  return out;
}

std::vector<int> StateVector::particle_numbers() const {
  std::set<int> totals;
  for (const auto& [occ, amp] : amps_) totals.insert(occ.total());
  return {totals.begin(), totals.end()};
}

Vector StateVector::to_dense(const FockSector& sector) const {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(sector.dim()));
  for (const auto& [occ, amp] : amps_) {
    if (occ.total() != sector.n_total()) continue;
    if (auto k = sector.find(occ)) v(static_cast<Eigen::Index>(*k)) = amp;
  }
  return v;
}

int StateVector::max_occupation() const {
  int best = 0;
  for (const auto& [occ, amp] : amps_) best = std::max(best, occ.max_count());
  return best;
}

Complex inner(const StateVector& bra, const StateVector& ket) {
  Complex acc{};
  for (const auto& [occ, amp] : bra.amplitudes()) {
    acc += std::conj(amp) * ket.amplitude(occ);
  }
  return acc;
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner(a, b)) / (std::norm(a.norm()) * std::norm(b.norm()));
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  double worst = 0.0;
  for (const auto& [occ, amp] : a.amplitudes()) {
    worst = std::max(worst, std::abs(amp - b.amplitude(occ)));
  }
  for (const auto& [occ, amp] : b.amplitudes()) {
    if (a.amplitudes().count(occ) == 0) worst = std::max(worst, std::abs(amp));
  }
  return worst;
}

void validate_state(const AnyonSpec& spec, const StateVector& state) {
  if (spec.is_fermionic() && state.max_occupation() > 1) {
    throw ValidationError("fermionic state with more than one particle on a mode");
  }
}

namespace {

void check_mode(int modes, Mode mode) {
  if (mode.label < 1 || mode.label > modes) {
    throw ValidationError("mode " + std::to_string(mode.label) +
                          " out of range 1.." + std::to_string(modes));
  }
}

template <typename Rule>
StateVector apply_ladder(const StateVector& state, Mode mode, Rule rule) {
  check_mode(state.modes(), mode);
  StateVector::AmplitudeMap out;
  for (const auto& [occ, amp] : state.amplitudes()) {
    if (auto term = rule(occ, mode.idx())) out[term->occ] += amp * term->amp;
  }
  return StateVector(state.modes(), std::move(out)).pruned();
}

}  // namespace

StateVector apply_create(const AnyonSpec& spec, const StateVector& state,
                         Mode mode) {
  return apply_ladder(state, mode, [&](const Occupation& occ, int idx) {
    return create_on_basis(spec, occ, idx);
  });
}

StateVector apply_annihilate(const AnyonSpec& spec, const StateVector& state,
                             Mode mode) {
  return apply_ladder(state, mode, [&](const Occupation& occ, int idx) {
    return annihilate_on_basis(spec, occ, idx);
  });
}

StateVector create_monomial(const AnyonSpec& spec, int modes,
                            std::span<const Mode> monomial) {
  StateVector state = StateVector::vacuum(modes);
  for (auto it = monomial.rbegin(); it != monomial.rend(); ++it) {
    state = apply_create(spec, state, *it);
  }
  return state;
}

double number_expectation(const StateVector& state, Mode mode) {
  check_mode(state.modes(), mode);
  double acc = 0.0;
  for (const auto& [occ, amp] : state.amplitudes()) {
    acc += std::norm(amp) * occ[mode.idx()];
  }
  return acc;
}

}  // namespace anyonlin
