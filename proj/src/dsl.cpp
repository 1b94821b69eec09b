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

#include "anyonlin/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

namespace anyonlin {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::optional<int> parse_int(const std::string& s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<double> parse_real(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const char* first = s.data();
  if (*first == '+') ++first;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

Mode parse_mode(const std::string& tok, int modes, int line) {
  auto v = parse_int(tok);
  if (!v) throw ParseError(line, "malformed mode index '" + tok + "'");
  if (*v < 1 || *v > modes) {
    throw ParseError(line, "mode " + tok + " out of range 1.." +
                               std::to_string(modes));
  }
  return Mode{*v};
}

Angle parse_angle_or_throw(const std::string& tok, int line) {
  auto a = parse_angle(tok);
  if (!a) throw ParseError(line, "malformed angle '" + tok + "'");
  return *a;
}

}  // namespace

Network parse_network(const std::string& text) {
  std::istringstream in(text);
  std::optional<Network> net;
  int line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const auto toks = split_ws(raw);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "modes") {
      if (net) throw ParseError(line_no, "duplicate 'modes' statement");
      if (toks.size() != 2) throw ParseError(line_no, "expected 'modes <m>'");
      auto m = parse_int(toks[1]);
      if (!m || *m < 1) throw ParseError(line_no, "malformed mode count");
      net.emplace(*m);
      continue;
    }
    if (kw != "ps" && kw != "bs") {
      throw ParseError(line_no, "unknown keyword '" + kw + "'");
    }
    if (!net) throw ParseError(line_no, "'modes <m>' must come first");
    if (kw == "ps") {
      if (toks.size() != 3) throw ParseError(line_no, "expected 'ps <i> <angle>'");
      const Mode i = parse_mode(toks[1], net->modes(), line_no);
      net->ps(i, parse_angle_or_throw(toks[2], line_no));
    } else {
      if (toks.size() != 4) {
        throw ParseError(line_no, "expected 'bs <i> <j> <angle>'");
      }
      const Mode i = parse_mode(toks[1], net->modes(), line_no);
      const Mode j = parse_mode(toks[2], net->modes(), line_no);
      if (i == j) throw ParseError(line_no, "beam splitter needs distinct modes");
      net->bs(i, j, parse_angle_or_throw(toks[3], line_no));
    }
  }
  if (!net) throw ParseError(std::max(line_no, 1), "missing 'modes <m>' statement");
  return *net;
}

std::string serialize_network(const Network& network) {
  std::string out = "modes " + std::to_string(network.modes()) + "\n";
  for (const auto& e : network.elements()) {
    if (const auto* ps = std::get_if<PhaseShift>(&e)) {
      out += "ps " + std::to_string(ps->mode.label) + " " + ps->tau.to_string();
    } else {
      const auto& bs = std::get<BeamSplit>(e);
      out += "bs " + std::to_string(bs.i.label) + " " +
             std::to_string(bs.j.label) + " " + bs.theta.to_string();
    }
    out += "\n";
  }
  return out;
}

nlohmann::json network_to_json(const Network& network) {
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& e : network.elements()) {
    if (const auto* ps = std::get_if<PhaseShift>(&e)) {
      elements.push_back(
          {{"type", "ps"}, {"i", ps->mode.label}, {"tau", ps->tau.radians()}});
    } else {
      const auto& bs = std::get<BeamSplit>(e);
      elements.push_back({{"type", "bs"},
                          {"i", bs.i.label},
                          {"j", bs.j.label},
                          {"theta", bs.theta.radians()}});
    }
  }
  return {{"m", network.modes()}, {"elements", elements}};
}

Network network_from_json(const nlohmann::json& doc) {
  try {
    Network net(doc.at("m").get<int>());
    for (const auto& e : doc.at("elements")) {
      const auto type = e.at("type").get<std::string>();
      if (type == "ps") {
        net.ps(Mode{e.at("i").get<int>()},
               Angle::from_radians(e.at("tau").get<double>()));
      } else if (type == "bs") {
        net.bs(Mode{e.at("i").get<int>()}, Mode{e.at("j").get<int>()},
               Angle::from_radians(e.at("theta").get<double>()));
      } else {
        throw ValidationError("unknown element type '" + type + "'");
      }
    }
    return net;
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("malformed network JSON: ") + ex.what());
  }
}

Complex parse_complex(const std::string& raw) {
  std::string text = trim(raw);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = trim(text.substr(1, text.size() - 2));
  }
  auto fail = [&]() -> ValidationError {
    return ValidationError("malformed complex literal '" + raw + "'");
  };
  if (text.empty()) throw fail();
  auto imag_part = [&](std::string s) {
    s.pop_back();  // trailing 'i'
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    auto v = parse_real(s);
    if (!v) throw fail();
    return *v;
  };
  // A sign that is neither leading nor part of an exponent separates the
  // real and imaginary parts.
  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k < text.size(); ++k) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' &&
        text[k - 1] != 'E') {
      split = k;
    }
  }
  if (split != std::string::npos) {
    const std::string re = text.substr(0, split);
    const std::string im = text.substr(split);
    if (im.back() != 'i') throw fail();
    auto r = parse_real(re);
    if (!r) throw fail();
    return {*r, imag_part(im)};
  }
  if (text.back() == 'i') return {0.0, imag_part(text)};
  auto r = parse_real(text);
  if (!r) throw fail();
  return {*r, 0.0};
}

namespace {

class KetCursor {
 public:
  explicit KetCursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  [[nodiscard]] bool done() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return done() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }

  [[nodiscard]] ValidationError error(const std::string& what) const {
    return ValidationError("ket syntax at column " + std::to_string(pos_ + 1) +
                           ": " + what);
  }

  // Text up to (not including) the '*' that ends a coefficient.
  std::string coefficient() {
    if (peek() == '(') {
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string::npos) throw error("unbalanced '('");
      std::string c = text_.substr(pos_, close - pos_ + 1);
      pos_ = close + 1;
      skip_ws();
      if (peek() != '*') throw error("expected '*' after coefficient");
      ++pos_;
      return c;
    }
    const std::size_t star = text_.find('*', pos_);
    const std::size_t bar = text_.find('|', pos_);
    if (star == std::string::npos || (bar != std::string::npos && bar < star)) {
      throw error("expected '<coefficient>*|...>'");
    }
    std::string c = text_.substr(pos_, star - pos_);
    pos_ = star + 1;
    return c;
  }

  Occupation ket() {
    skip_ws();
    if (peek() != '|') throw error("expected '|'");
    ++pos_;
    const std::size_t close = text_.find('>', pos_);
    if (close == std::string::npos) throw error("ket is missing '>'");
    const std::string body = text_.substr(pos_, close - pos_);
    pos_ = close + 1;
    std::vector<int> counts;
    std::istringstream in(body);
    for (std::string tok; std::getline(in, tok, ',');) {
      auto v = parse_int(trim(tok));
      if (!v) throw error("malformed occupation '" + trim(tok) + "'");
      if (*v < 0) throw error("negative occupation");
      counts.push_back(*v);
    }
    if (counts.empty()) throw error("empty ket");
    return Occupation(std::move(counts));
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

StateVector parse_state(const std::string& raw, const AnyonSpec& spec,
                        KetOptions options) {
  // Accept the typeset closing bracket U+27E9 as well as '>'.
  std::string text = raw;
  for (std::size_t at; (at = text.find("\u27e9")) != std::string::npos;) {
    text.replace(at, 3, ">");
  }
  KetCursor cur(text);
  std::optional<StateVector> state;
  bool first = true;
  cur.skip_ws();
  while (!cur.done()) {
    double sign = 1.0;
    if (!first) {
      const char op = cur.peek();
      if (op != '+' && op != '-') throw cur.error("expected '+' or '-'");
      cur.take();
      sign = op == '-' ? -1.0 : 1.0;
      cur.skip_ws();
    } else if (cur.peek() == '-' || cur.peek() == '+') {
      // A leading sign belongs to the coefficient unless a bare ket follows.
      KetCursor probe = cur;
      probe.take();
      probe.skip_ws();
      if (probe.peek() == '|') {
        sign = cur.take() == '-' ? -1.0 : 1.0;
        cur.skip_ws();
      }
    }
    Complex coeff{1.0, 0.0};
    if (cur.peek() != '|') coeff = parse_complex(cur.coefficient());
    const Occupation occ = cur.ket();
    if (!state) {
      if (options.modes != 0 && occ.modes() != options.modes) {
        throw ValidationError("ket has " + std::to_string(occ.modes()) +
                              " modes, expected " + std::to_string(options.modes));
      }
      state.emplace(occ.modes());
    } else if (occ.modes() != state->modes()) {
      throw ValidationError("kets in a superposition must have equal length");
    }
    state->add(occ, sign * coeff);
    first = false;
    cur.skip_ws();
  }
  if (!state) throw ValidationError("empty state expression");
  validate_state(spec, *state);
  StateVector out = state->pruned(0.0);
  if (out.empty()) throw ValidationError("state expression sums to zero");
  return options.normalize ? out.normalized() : out;
}

std::string format_ket(const Occupation& occ) {
  std::string out = "|";
  for (int k = 0; k < occ.modes(); ++k) {
    if (k) out += ",";
    out += std::to_string(occ[k]);
  }
  return out + ">";
}

}  // namespace anyonlin
