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

// Text formats.
//
// Network DSL, one statement per line, applied top to bottom:
//
//   modes 3
//   bs 1 3 pi/2      # beam splitter between modes 1 and 3
//   ps 2 -pi/4       # phase shifter on mode 2
//
// Blank lines and '#' comments are ignored. Angles are decimal radians or
// pi expressions (pi, -pi/2, 3*pi/4).
//
// Kets: |1,0,1> for a basis state, and linear combinations such as
// 0.7071*|2,0> + (0.5-0.5i)*|0,2> - 0.1i*|1,1>.

#pragma once

#include <string>

#include <json.hpp>

#include "anyonlin/fock.hpp"
#include "anyonlin/network.hpp"

namespace anyonlin {

[[nodiscard]] Network parse_network(const std::string& text);
[[nodiscard]] std::string serialize_network(const Network& network);

/// {"m":3,"elements":[{"type":"bs","i":1,"j":2,"theta":...}, ...]}
[[nodiscard]] nlohmann::json network_to_json(const Network& network);
[[nodiscard]] Network network_from_json(const nlohmann::json& doc);

/// Complex literal: 0.5, -2i, i, 0.5+0.25i, (1-1e-3i).
[[nodiscard]] Complex parse_complex(const std::string& text);

struct KetOptions {
  bool normalize = true;
  /// Expected mode count; 0 accepts whatever the first ket declares.
  int modes = 0;
};

[[nodiscard]] StateVector parse_state(const std::string& text,
                                      const AnyonSpec& spec,
                                      KetOptions options = {});

/// |n1,...,nm>
[[nodiscard]] std::string format_ket(const Occupation& occ);

}  // namespace anyonlin
