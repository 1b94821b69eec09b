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

// Reference implementations for the test suites. Nothing here calls into
// the library's sector, operator or evolution code: bases come from a plain
// odometer, ladder matrices straight from the Fock-action formula, and
// exponentials from a Taylor series with scaling and squaring.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Occ = std::vector<int>;

inline constexpr double kPi = 3.14159265358979323846;

/// All tuples in [0, cap]^m summing to n, lexicographically decreasing.
inline std::vector<Occ> basis(int m, int n, int cap) {
  std::vector<Occ> out;
  Occ t(static_cast<std::size_t>(m), 0);
  while (true) {
    if (std::accumulate(t.begin(), t.end(), 0) == n) out.push_back(t);
    int k = 0;
    while (k < m && t[static_cast<std::size_t>(k)] == cap) {
      t[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == m) break;
    ++t[static_cast<std::size_t>(k)];
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline int cap_for(bool fermionic, int n) { return fermionic ? 1 : std::max(n, 1); }

inline std::size_t index_of(const std::vector<Occ>& b, const Occ& o) {
  return static_cast<std::size_t>(std::find(b.begin(), b.end(), o) - b.begin());
}

/// Fock action of one ladder operator on a basis label (0-based mode).
/// Returns false when the term vanishes.
inline bool ladder(double phi, bool fermionic, const Occ& in, int mode,
                   bool dagger, Occ& out, Complex& amp) {
  int s = 0;
  for (int k = 0; k < mode; ++k) s += in[static_cast<std::size_t>(k)];
  const int n = in[static_cast<std::size_t>(mode)];
  out = in;
  if (dagger) {
    if (fermionic && n == 1) return false;
    out[static_cast<std::size_t>(mode)] = n + 1;
    amp = std::polar(fermionic ? 1.0 : std::sqrt(n + 1.0), -phi * s);
  } else {
    if (n == 0) return false;
    out[static_cast<std::size_t>(mode)] = n - 1;
    amp = std::polar(fermionic ? 1.0 : std::sqrt(static_cast<double>(n)), phi * s);
  }
  if (fermionic && s % 2) amp = -amp;
  return true;
}

/// Dense ladder matrix from the (m, n) sector to (m, n +- 1).
inline Matrix ladder_matrix(double phi, bool fermionic, int m, int n, int mode,
                            bool dagger) {
  const int n_out = dagger ? n + 1 : n - 1;
  const auto dom = basis(m, n, cap_for(fermionic, n));
  const auto cod = n_out < 0 ? std::vector<Occ>{} : basis(m, n_out, cap_for(fermionic, n_out));
  Matrix a = Matrix::Zero(static_cast<Eigen::Index>(cod.size()),
                          static_cast<Eigen::Index>(dom.size()));
  for (std::size_t c = 0; c < dom.size(); ++c) {
    Occ o;
    Complex amp;
    if (!ladder(phi, fermionic, dom[c], mode, dagger, o, amp)) continue;
    a(static_cast<Eigen::Index>(index_of(cod, o)), static_cast<Eigen::Index>(c)) = amp;
  }
  return a;
}

/// chi^dag_i chi_j on the (m, n) sector, by multiplying ladder matrices.
inline Matrix hop(double phi, bool fermionic, int m, int n, int i, int j) {
  if (n == 0) return Matrix::Zero(1, 1);
  return ladder_matrix(phi, fermionic, m, n - 1, i, true) *
         ladder_matrix(phi, fermionic, m, n, j, false);
}

/// exp(A) by scaling and squaring a 20-term Taylor series.
inline Matrix expm(const Matrix& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Matrix x = a / std::pow(2.0, squarings);
  Matrix term = Matrix::Identity(a.rows(), a.cols());
  Matrix sum = term;
  for (int k = 1; k <= 20; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

/// exp(i theta (chi^dag_i chi_j + h.c.)) on the sector, 0-based modes.
inline Matrix beam_splitter(double phi, bool fermionic, int m, int n, int i,
                            int j, double theta) {
  const Matrix h = hop(phi, fermionic, m, n, i, j) + hop(phi, fermionic, m, n, j, i);
  return expm(Complex{0.0, theta} * h);
}

inline Matrix phase_shifter(double /*phi*/, bool fermionic, int m, int n, int i,
                            double tau) {
  const auto b = basis(m, n, cap_for(fermionic, n));
  Matrix d = Matrix::Zero(static_cast<Eigen::Index>(b.size()),
                          static_cast<Eigen::Index>(b.size()));
  for (std::size_t k = 0; k < b.size(); ++k) {
    d(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) =
        std::polar(1.0, tau * b[k][static_cast<std::size_t>(i)]);
  }
  return d;
}

/// Permanent by Ryser's formula.
inline Complex permanent(const Matrix& a) {
  const auto n = static_cast<int>(a.rows());
  if (n == 0) return 1.0;
  Complex total = 0.0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Complex prod = 1.0;
    for (int r = 0; r < n; ++r) {
      Complex row = 0.0;
      for (int c = 0; c < n; ++c) {
        if (mask & (1u << c)) row += a(r, c);
      }
      prod *= row;
    }
    total += (__builtin_popcount(mask) % 2 == n % 2 ? 1.0 : -1.0) * prod;
  }
  return total;
}

/// Mode list with multiplicity: {2,0,1} -> {0,0,2}.
inline std::vector<int> expand(const Occ& o) {
  std::vector<int> out;
  for (std::size_t k = 0; k < o.size(); ++k) {
    for (int c = 0; c < o[k]; ++c) out.push_back(static_cast<int>(k));
  }
  return out;
}

inline double factorials(const Occ& o) {
  double f = 1.0;
  for (int n : o) {
    for (int k = 2; k <= n; ++k) f *= k;
  }
  return f;
}

/// <out| U |in> for standard bosons with single-particle matrix u.
inline Complex boson_amplitude(const Matrix& u, const Occ& in, const Occ& out) {
  const auto r = expand(out), c = expand(in);
  Matrix sub(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(c.size()));
  for (std::size_t a = 0; a < r.size(); ++a) {
    for (std::size_t b = 0; b < c.size(); ++b) {
      sub(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = u(r[a], c[b]);
    }
  }
  return permanent(sub) / std::sqrt(factorials(in) * factorials(out));
}

/// <out| U |in> for standard fermions (single occupancy).
inline Complex fermion_amplitude(const Matrix& u, const Occ& in, const Occ& out) {
  const auto r = expand(out), c = expand(in);
  Matrix sub(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(c.size()));
  for (std::size_t a = 0; a < r.size(); ++a) {
    for (std::size_t b = 0; b < c.size(); ++b) {
      sub(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = u(r[a], c[b]);
    }
  }
  return sub.size() == 0 ? Complex{1.0} : sub.determinant();
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

inline Matrix rz(double beta) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = std::polar(1.0, -beta / 2);
  m(1, 1) = std::polar(1.0, beta / 2);
  return m;
}

inline Matrix rx(double gamma) {
  Matrix m(2, 2);
  m << std::cos(gamma / 2), Complex{0, -std::sin(gamma / 2)},
      Complex{0, -std::sin(gamma / 2)}, std::cos(gamma / 2);
  return m;
}

/// max |a - e^{it} b| minimized over t by least squares on the overlap.
inline double phase_free_distance(const Matrix& a, const Matrix& b) {
  const Complex ov = (b.adjoint() * a).trace();
  const Complex ph = std::abs(ov) > 0 ? ov / std::abs(ov) : Complex{1.0};
  return (a - ph * b).cwiseAbs().maxCoeff();
}

/// e^{-|g|^2/2} g^n / sqrt(n!).
inline Complex coherent_amp(Complex g, int n) {
  Complex a = std::exp(-0.5 * std::norm(g));
  for (int k = 1; k <= n; ++k) a *= g / std::sqrt(static_cast<double>(k));
  return a;
}

inline double binomial(int n, int k) {
  double b = 1.0;
  for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
  return b;
}

}  // namespace oracle
