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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "anyonlin/fock.hpp"
#include "anyonlin/operators.hpp"
#include "oracles.hpp"

using namespace anyonlin;

namespace {

const double kPhiGrid[] = {0.0, kPi / 5, kPi / 2, kPi, 7 * kPi / 4};

std::vector<int> counts(const Occupation& o) { return o.counts(); }

}  // namespace

TEST_CASE("anyon spec reduces the exchange phase") {
  CHECK(AnyonSpec::bosonic(kTwoPi + 0.5).phi() == doctest::Approx(0.5));
  CHECK(AnyonSpec::bosonic(-kPi / 2).phi() == doctest::Approx(3 * kPi / 2));
  CHECK(AnyonSpec::fermionic(0.0).is_fermionic());
  CHECK_THROWS_AS(AnyonSpec::bosonic(std::nan("")), ValidationError);
  CHECK(AnyonSpec::fermionic(1.0).standard().phi() == 0.0);
}

TEST_CASE("sign_eps") {
  CHECK(sign_eps(1, 3) == 1);
  CHECK(sign_eps(3, 1) == -1);
  CHECK(sign_eps(2, 2) == 0);
}

TEST_CASE("sector enumeration: documented examples") {
  const auto b = enumerate_sector(2, 2, AnyonSpec::bosonic(0.3));
  REQUIRE(b->dim() == 3);
  CHECK(counts((*b)[0]) == std::vector<int>{2, 0});
  CHECK(counts((*b)[1]) == std::vector<int>{1, 1});
  CHECK(counts((*b)[2]) == std::vector<int>{0, 2});

  const auto f = enumerate_sector(3, 2, AnyonSpec::fermionic(0.3));
  REQUIRE(f->dim() == 3);
  CHECK(counts((*f)[0]) == std::vector<int>{1, 1, 0});
  CHECK(counts((*f)[1]) == std::vector<int>{1, 0, 1});
  CHECK(counts((*f)[2]) == std::vector<int>{0, 1, 1});

  CHECK(enumerate_sector(4, 2, AnyonSpec::bosonic(0.0))->dim() == 10);
}

TEST_CASE("sector enumeration matches brute force and closed forms") {
  for (int m = 1; m <= 5; ++m) {
    for (int n = 0; n <= 4; ++n) {
      const auto bos = oracle::basis(m, n, std::max(n, 1));
      const auto sec = enumerate_sector(m, n, AnyonSpec::bosonic(0.0));
      REQUIRE(sec->dim() == bos.size());
      CHECK(sec->dim() == static_cast<std::size_t>(oracle::binomial(m + n - 1, n)));
      CHECK(sector_dimension(m, n, AnyonSpec::bosonic(1.0)) == bos.size());
      for (std::size_t k = 0; k < bos.size(); ++k) {
        CHECK(counts((*sec)[k]) == bos[k]);
        CHECK(sec->index_of((*sec)[k]) == k);
      }
      if (n <= m) {
        const auto fer = oracle::basis(m, n, 1);
        const auto fs = enumerate_sector(m, n, AnyonSpec::fermionic(0.0));
        REQUIRE(fs->dim() == fer.size());
        CHECK(fs->dim() == static_cast<std::size_t>(oracle::binomial(m, n)));
        for (std::size_t k = 0; k < fer.size(); ++k) CHECK(counts((*fs)[k]) == fer[k]);
      }
    }
  }
}

TEST_CASE("fermionic sector beyond the mode count is empty") {
  CHECK_THROWS_AS((void)enumerate_sector(2, 3, AnyonSpec::fermionic(0.0)),
                  EmptySectorError);
  CHECK_THROWS_AS(FockSector(2, 1, -1), ValidationError);
  CHECK_THROWS_AS(FockSector(0, 1, 1), ValidationError);
  const auto s = enumerate_sector(2, 1, AnyonSpec::bosonic(0.0));
  CHECK_FALSE(s->contains(Occupation{2, 0}));
  CHECK_THROWS_AS((void)s->index_of(Occupation{2, 0}), ValidationError);
}

TEST_CASE("occupation validation") {
  CHECK_THROWS_AS(Occupation({1, -1}), ValidationError);
  const Occupation o{2, 0, 1};
  CHECK(o.total() == 3);
  CHECK(o.count_before(2) == 2);
  CHECK(o.at(Mode{3}) == 1);
  CHECK_THROWS_AS((void)o.at(Mode{4}), ValidationError);
}

TEST_CASE("creation: documented examples") {
  const auto b0 = AnyonSpec::bosonic(1.234);
  auto s = apply_create(b0, StateVector::vacuum(3), Mode{1});
  CHECK(s.amplitude(Occupation{1, 0, 0}) == Complex{1.0, 0.0});

  const auto bpi = AnyonSpec::bosonic(kPi);
  s = apply_create(bpi, StateVector::basis(Occupation{1, 0}), Mode{2});
  CHECK(std::abs(s.amplitude(Occupation{1, 1}) - Complex{-1.0, 0.0}) < 1e-15);

  // xi^dag_1 xi^dag_2 |0> = -e^{i phi} xi^dag_2 xi^dag_1 |0>
  for (double phi : kPhiGrid) {
    const auto f = AnyonSpec::fermionic(phi);
    const Mode m12[] = {Mode{1}, Mode{2}};
    const Mode m21[] = {Mode{2}, Mode{1}};
    const Complex a = create_monomial(f, 2, m12).amplitude(Occupation{1, 1});
    const Complex b = create_monomial(f, 2, m21).amplitude(Occupation{1, 1});
    CHECK(std::abs(a - (-std::polar(1.0, phi)) * b) < 1e-14);
  }
}

TEST_CASE("annihilation: documented examples") {
  const double phi = 0.77;
  const auto b = AnyonSpec::bosonic(phi);
  CHECK(apply_annihilate(b, StateVector::vacuum(2), Mode{1}).empty());
  const auto s11 = StateVector::basis(Occupation{1, 1});
  CHECK(apply_annihilate(b, s11, Mode{1}).amplitude(Occupation{0, 1}) == Complex{1.0, 0.0});
  CHECK(std::abs(apply_annihilate(b, s11, Mode{2}).amplitude(Occupation{1, 0}) -
                 std::polar(1.0, phi)) < 1e-15);
}

TEST_CASE("ladder matrices match the direct Fock-action oracle") {
  for (int cls = 0; cls < 2; ++cls) {
    for (double phi : kPhiGrid) {
      const AnyonSpec spec(cls ? ParticleClass::Fermionic : ParticleClass::Bosonic, phi);
      for (int m = 1; m <= 4; ++m) {
        for (int n = 0; n <= std::min(3, cls ? m - 1 : 3); ++n) {
          const auto sec = enumerate_sector(m, n, spec);
          for (int i = 1; i <= m; ++i) {
            const Matrix want = oracle::ladder_matrix(phi, cls == 1, m, n, i - 1, true);
            CHECK(max_abs(ladder_matrix(spec, sec, Mode{i}, true).mat() - want) < 1e-14);
          }
        }
      }
    }
  }
}

TEST_CASE("annihilation is the adjoint of creation") {
  for (int cls = 0; cls < 2; ++cls) {
    for (double phi : kPhiGrid) {
      const AnyonSpec spec(cls ? ParticleClass::Fermionic : ParticleClass::Bosonic, phi);
      for (int n = 0; n < 3; ++n) {
        const auto lo = enumerate_sector(4, n, spec);
        const auto hi = enumerate_sector(4, n + 1, spec);
        for (int i = 1; i <= 4; ++i) {
          const auto up = ladder_matrix(spec, lo, Mode{i}, true);
          const auto down = ladder_matrix(spec, hi, Mode{i}, false);
          REQUIRE(up.codomain().n_total() == n + 1);
          CHECK(max_abs(down.mat() - up.mat().adjoint()) < 1e-14);
        }
      }
    }
  }
}

TEST_CASE("single-mode relation: chi_i chi^dag_i = n_i + 1 on every basis state") {
  for (double phi : kPhiGrid) {
    const auto spec = AnyonSpec::bosonic(phi);
    const auto sec = enumerate_sector(4, 3, spec);
    for (const auto& occ : sec->basis()) {
      for (int i = 1; i <= 4; ++i) {
        const auto s = apply_annihilate(
            spec, apply_create(spec, StateVector::basis(occ), Mode{i}), Mode{i});
        CHECK(std::abs(s.amplitude(occ) - Complex(occ.at(Mode{i}) + 1.0)) < 1e-13);
        CHECK(s.size() == 1);
      }
    }
  }
}

TEST_CASE("deformed exchange relations hold as sector matrices") {
  // i < j:  chi_i chi^dag_j = s e^{-i phi} chi^dag_j chi_i,
  //         chi^dag_i chi^dag_j = s e^{+i phi} chi^dag_j chi^dag_i,
  // with s = +1 for bosons and -1 for fermions.
  for (int cls = 0; cls < 2; ++cls) {
    const double sgn = cls ? -1.0 : 1.0;
    for (double phi : kPhiGrid) {
      const AnyonSpec spec(cls ? ParticleClass::Fermionic : ParticleClass::Bosonic, phi);
      for (int n = 0; n <= 3; ++n) {
        if (cls && n + 2 > 4) continue;
        const auto s0 = enumerate_sector(4, n, spec);
        const auto s1 = enumerate_sector(4, n + 1, spec);
        for (int i = 1; i <= 4; ++i) {
          for (int j = i + 1; j <= 4; ++j) {
            if (n >= 1) {
              const auto sm = enumerate_sector(4, n - 1, spec);
              const Matrix lhs = ladder_matrix(spec, s1, Mode{i}, false).mat() *
                                 ladder_matrix(spec, s0, Mode{j}, true).mat();
              const Matrix rhs = ladder_matrix(spec, sm, Mode{j}, true).mat() *
                                 ladder_matrix(spec, s0, Mode{i}, false).mat();
              CHECK(max_abs(lhs - sgn * std::polar(1.0, -phi) * rhs) < 1e-13);
            }
            const Matrix ij = ladder_matrix(spec, s1, Mode{i}, true).mat() *
                              ladder_matrix(spec, s0, Mode{j}, true).mat();
            const Matrix ji = ladder_matrix(spec, s1, Mode{j}, true).mat() *
                              ladder_matrix(spec, s0, Mode{i}, true).mat();
            CHECK(max_abs(ij - sgn * std::polar(1.0, phi) * ji) < 1e-13);
          }
        }
      }
    }
  }
}

TEST_CASE("fermionic double creation is the zero map") {
  const auto f = AnyonSpec::fermionic(0.4);
  for (int n = 0; n + 2 <= 3; ++n) {
    const auto s0 = enumerate_sector(3, n, f);
    const auto s1 = enumerate_sector(3, n + 1, f);
    for (int i = 1; i <= 3; ++i) {
      const Matrix sq = ladder_matrix(f, s1, Mode{i}, true).mat() *
                        ladder_matrix(f, s0, Mode{i}, true).mat();
      CHECK(max_abs(sq) == 0.0);
    }
  }
  CHECK_FALSE(create_on_basis(f, Occupation{1, 0}, 0).has_value());
}

TEST_CASE("state vector basics") {
  StateVector s(2);
  s.add(Occupation{0, 2}, {0.0, 3.0});
  s.add(Occupation{2, 0}, {4.0, 0.0});
  s.add(Occupation{1, 0}, {1e-16, 0.0});
  CHECK(s.norm() == doctest::Approx(5.0));
  CHECK(s.pruned().size() == 2);
  const auto n = s.pruned().normalized();
  CHECK(n.norm() == doctest::Approx(1.0));
  // canonical order: fewer particles first, then lexicographically decreasing
  auto it = s.amplitudes().begin();
  CHECK(counts(it->first) == std::vector<int>{1, 0});
  ++it;
  CHECK(counts(it->first) == std::vector<int>{2, 0});
  CHECK(s.particle_numbers() == std::vector<int>{1, 2});
  CHECK(s.max_occupation() == 2);
  CHECK_THROWS_AS(s.add(Occupation{1, 0, 0}, 1.0), ValidationError);
  CHECK_THROWS_AS((void)StateVector(2).normalized(), DegenerateStateError);

  const auto sec = enumerate_sector(2, 2, AnyonSpec::bosonic(0.0));
  const Vector dense = s.to_dense(*sec);
  CHECK(dense(0) == Complex{4.0, 0.0});
  CHECK(dense(2) == Complex{0.0, 3.0});
  CHECK(max_abs_diff(StateVector::from_dense(*sec, dense), s.pruned().scaled(1.0)) < 1e-15);
}

TEST_CASE("inner product and fidelity") {
  StateVector a(2), b(2);
  a.add(Occupation{1, 0}, 1.0);
  b.add(Occupation{1, 0}, Complex{0.0, 1.0});
  b.add(Occupation{0, 1}, 1.0);
  CHECK(std::abs(inner(a, b) - Complex{0.0, 1.0}) < 1e-15);
  CHECK(fidelity(a, b) == doctest::Approx(0.5));
}

TEST_CASE("validate_state enforces Pauli exclusion") {
  StateVector s(2);
  s.add(Occupation{2, 0}, 1.0);
  CHECK_NOTHROW(validate_state(AnyonSpec::bosonic(0.2), s));
  CHECK_THROWS_AS(validate_state(AnyonSpec::fermionic(0.2), s), ValidationError);
  CHECK_THROWS_AS((void)apply_create(AnyonSpec::bosonic(0), s, Mode{3}), ValidationError);
}

TEST_CASE("number expectation") {
  CHECK(number_expectation(StateVector::basis(Occupation{1, 0}), Mode{1}) == 1.0);
  StateVector s(2);
  s.add(Occupation{2, 0}, 1.0 / std::sqrt(2.0));
  s.add(Occupation{0, 2}, 1.0 / std::sqrt(2.0));
  CHECK(number_expectation(s, Mode{1}) == doctest::Approx(1.0));
}

TEST_CASE("create_monomial applies the rightmost operator first") {
  const auto spec = AnyonSpec::bosonic(0.9);
  const Mode m[] = {Mode{2}, Mode{1}};
  // chi^dag_2 chi^dag_1 |0>: mode 1 first (phase 1), then mode 2 sees one
  // particle before it.
  const auto s = create_monomial(spec, 2, m);
  CHECK(std::abs(s.amplitude(Occupation{1, 1}) - std::polar(1.0, -0.9)) < 1e-15);
}
