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

// Serial reference kernels against their OpenMP counterparts.
//   ./bench_kernels --benchmark_filter=Assemble

#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "anyonlin/kernels.hpp"
#include "anyonlin/operators.hpp"

using namespace anyonlin;

namespace {

// Every hop chi^dag_i chi_j on the sector: the dense part of any quadratic
// Hamiltonian.
kernels::BasisImage hops(const AnyonSpec& spec, int m) {
  return [spec, m](const Occupation& occ, std::vector<BasisTerm>& out) {
    for (int j = 0; j < m; ++j) {
      const auto down = annihilate_on_basis(spec, occ, j);
      if (!down) continue;
      for (int i = 0; i < m; ++i) {
        if (const auto up = create_on_basis(spec, down->occ, i)) {
          out.push_back({up->occ, down->amp * up->amp});
        }
      }
    }
  };
}

template <bool Parallel>
void BM_Assemble(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const auto spec = AnyonSpec::bosonic(0.7);
  const auto s = enumerate_sector(m, n, spec);
  const auto image = hops(spec, m);
  for (auto _ : state) {
    Matrix a = Parallel ? kernels::assemble_parallel(*s, *s, image)
                        : kernels::assemble_serial(*s, *s, image);
    benchmark::DoNotOptimize(a.data());
  }
  state.counters["dim"] = static_cast<double>(s->dim());
}

struct Spectrum {
  Eigen::VectorXd evals;
  Matrix evecs;
};

const Spectrum& spectrum(Eigen::Index dim) {
  static std::map<Eigen::Index, Spectrum> cache;
  auto it = cache.find(dim);
  if (it == cache.end()) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    Matrix h(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r)
      for (Eigen::Index c = 0; c < dim; ++c) h(r, c) = Complex{g(rng), g(rng)};
    h = (h + h.adjoint()).eval();
    const Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
    it = cache.emplace(dim, Spectrum{eig.eigenvalues(), eig.eigenvectors()}).first;
  }
  return it->second;
}

template <bool Parallel>
void BM_SpectralExp(benchmark::State& state) {
  const Spectrum& sp = spectrum(state.range(0));
  for (auto _ : state) {
    Matrix u = Parallel ? kernels::spectral_exp_parallel(sp.evals, sp.evecs, 0.3)
                        : kernels::spectral_exp_serial(sp.evals, sp.evecs, 0.3);
    benchmark::DoNotOptimize(u.data());
  }
}

}  // namespace

// (modes, particles): dimensions 792, 1716, 3003
BENCHMARK(BM_Assemble<false>)->Name("Assemble/serial")->Args({8, 5})->Args({8, 6})->Args({9, 6})
    ->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Assemble<true>)->Name("Assemble/parallel")->Args({8, 5})->Args({8, 6})->Args({9, 6})
    ->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK(BM_SpectralExp<false>)->Name("SpectralExp/serial")->Arg(256)->Arg(512)->Arg(792)
    ->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SpectralExp<true>)->Name("SpectralExp/parallel")->Arg(256)->Arg(512)->Arg(792)
    ->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
