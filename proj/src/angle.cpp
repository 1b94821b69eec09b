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

#include "anyonlin/angle.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace anyonlin {

Angle Angle::from_radians(double value) {
  if (!std::isfinite(value)) throw ValidationError("angle must be finite");
  Angle a;
  a.value_ = value;
  a.exact_.reset();
  if (value == 0.0) a.exact_ = Fraction{0, 1};
  return a;
}

Angle Angle::pi_fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ValidationError("zero denominator in pi fraction");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  Angle a;
  a.exact_ = Fraction{num / g, den / g};
  a.value_ = kPi * static_cast<double>(num / g) / static_cast<double>(den / g);
  return a;
}

double Angle::radians() const { return value_; }

std::string Angle::to_string() const {
  if (!exact_) return format_double(value_);
  const auto [num, den] = *exact_;
  if (num == 0) return "0";
  std::string out;
  if (num == -1) {
    out = "-pi";
  } else if (num == 1) {
    out = "pi";
  } else {
    out = std::to_string(num) + "*pi";
  }
  if (den != 1) out += "/" + std::to_string(den);
  return out;
}

bool operator==(const Angle& a, const Angle& b) {
  if (a.exact_ && b.exact_) {
    return a.exact_->num == b.exact_->num && a.exact_->den == b.exact_->den;
  }
  return a.value_ == b.value_;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

template <typename T>
std::optional<T> parse_number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  T value{};
  const char* first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

std::optional<Angle> parse_angle(const std::string& raw) {
  const std::string text = trim(raw);
  const auto pos = text.find("pi");
  if (pos == std::string::npos) {
    auto v = parse_number<double>(text);
    if (!v || !std::isfinite(*v)) return std::nullopt;
    return Angle::from_radians(*v);
  }
  // [sign][k*]pi[/n]
  std::string head = text.substr(0, pos);
  std::string tail = text.substr(pos + 2);
  std::int64_t num = 1;
  if (head == "-") {
    num = -1;
  } else if (!head.empty() && head != "+") {
    if (head.back() != '*') return std::nullopt;
    auto k = parse_number<std::int64_t>(head.substr(0, head.size() - 1));
    if (!k) return std::nullopt;
    num = *k;
  }
  std::int64_t den = 1;
  if (!tail.empty()) {
    if (tail.front() != '/') return std::nullopt;
    auto n = parse_number<std::int64_t>(tail.substr(1));
    if (!n || *n == 0) return std::nullopt;
    den = *n;
  }
  return Angle::pi_fraction(num, den);
}

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // folds -0 into 0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace anyonlin
