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

#include <cstdint>
#include <optional>
#include <string>

#include "anyonlin/common.hpp"

namespace anyonlin {

/// An angle in radians that remembers when it is an exact rational multiple
/// of pi. Conversion to floating point happens only in radians().
class Angle {
 public:
  constexpr Angle() = default;

  static Angle from_radians(double value);
  /// num * pi / den, reduced to lowest terms with den > 0.
  static Angle pi_fraction(std::int64_t num, std::int64_t den = 1);

  [[nodiscard]] double radians() const;
  [[nodiscard]] bool is_pi_fraction() const { return exact_.has_value(); }
  [[nodiscard]] std::int64_t pi_numerator() const { return exact_->num; }
  [[nodiscard]] std::int64_t pi_denominator() const { return exact_->den; }

  /// DSL spelling: "pi/2", "-3*pi/4", "0", or a decimal with 17 digits.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Angle& a, const Angle& b);

 private:
  struct Fraction {
    std::int64_t num;
    std::int64_t den;
  };
  double value_ = 0.0;
  std::optional<Fraction> exact_ = Fraction{0, 1};
};

/// Parses decimal radians or a pi expression: pi, -pi, pi/2, 3*pi/4, 2*pi.
/// Returns nullopt on malformed text.
[[nodiscard]] std::optional<Angle> parse_angle(const std::string& text);

/// "%.17g" formatting, the fixed float format for all serialized output.
[[nodiscard]] std::string format_double(double value);

}  // namespace anyonlin
