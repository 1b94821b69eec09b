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

#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace anyonlin {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

// Tolerances shared by the library self-checks and the test suites.
inline constexpr double kAtolAlgebra = 1e-12;
inline constexpr double kAtolPhysics = 1e-10;
// Amplitudes below this are dropped from sparse states after each operator.
inline constexpr double kPruneThreshold = 1e-14;

/// A lattice mode, addressed by its 1-based label as in all user-facing
/// interfaces. Storage and indexing inside the library are 0-based.
struct Mode {
  int label = 1;

  [[nodiscard]] constexpr int idx() const { return label - 1; }
  friend constexpr bool operator==(Mode, Mode) = default;
  friend constexpr auto operator<=>(Mode, Mode) = default;
};

class AnyonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for user-supplied values that violate a precondition (bad mode
/// label, Pauli violation, malformed input). The CLI maps these to exit 2.
class ValidationError : public AnyonError {
 public:
  using AnyonError::AnyonError;
};

class EmptySectorError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnsupportedPropagationError : public AnyonError {
 public:
  using AnyonError::AnyonError;
};

class CompileError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotClosedUnderLinearOpticsError : public AnyonError {
 public:
  using AnyonError::AnyonError;
};

class DegenerateStateError : public AnyonError {
 public:
  using AnyonError::AnyonError;
};

class ParseError : public ValidationError {
 public:
  ParseError(int line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

}  // namespace anyonlin
