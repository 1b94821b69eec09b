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

#include "anyonlin/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "anyonlin/angle.hpp"
#include "anyonlin/coherent.hpp"
#include "anyonlin/dsl.hpp"
#include "anyonlin/dualrail.hpp"
#include "anyonlin/network.hpp"

namespace anyonlin::cli {

// Components smaller than this print as 0 so rounding noise in exact zeros
// does not leak into golden files.
constexpr double kPrintFloor = 1e-15;

std::string json_number(double value) {
  if (!std::isfinite(value)) return "null";
  if (std::abs(value) < kPrintFloor) value = 0.0;
  return format_double(value);
}

std::string json_string(const std::string& text) {
  std::string out = "\"";
  for (char ch : text) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

namespace {

std::string occ_json(const Occupation& occ) {
  std::string out = "[";
  for (int k = 0; k < occ.modes(); ++k) {
    if (k) out += ",";
    out += std::to_string(occ[k]);
  }
  return out + "]";
}

std::string complex_json(Complex z) {
  return "{\"re\": " + json_number(z.real()) + ", \"im\": " +
         json_number(z.imag()) + "}";
}

std::string complex_text(Complex z) {
  return json_number(z.real()) + " " + json_number(z.imag());
}

// One output document: scalar fields in insertion order, then the state.
class Report {
 public:
  explicit Report(const RunConfig& cfg) : cfg_(cfg) {}

  void field(const std::string& key, const std::string& json,
             const std::string& text) {
    fields_.push_back({key, json, text});
  }
  void string_field(const std::string& key, const std::string& value) {
    field(key, json_string(value), value);
  }
  void number_field(const std::string& key, double value) {
    field(key, json_number(value), json_number(value));
  }
  void state(StateVector s) { state_.emplace(std::move(s)); }

  [[nodiscard]] std::string render() const {
    return cfg_.format == OutputFormat::Json ? render_json() : render_table();
  }

 private:
  struct Field {
    std::string key, json, text;
  };

  std::string render_json() const {
    std::string out = "{\n";
    bool first = true;
    for (const auto& f : fields_) {
      if (!first) out += ",\n";
      out += "  " + json_string(f.key) + ": " + f.json;
      first = false;
    }
    if (state_) {
      if (!first) out += ",\n";
      out += "  \"amplitudes\": " + amplitudes_json(*state_, "  ");
    }
    return out + "\n}\n";
  }

  std::string render_table() const {
    std::string out;
    char buf[256];
    for (const auto& f : fields_) {
      std::snprintf(buf, sizeof buf, "%-22s %s\n", f.key.c_str(), f.text.c_str());
      out += buf;
    }
    if (state_) {
      std::snprintf(buf, sizeof buf, "%-22s %25s %25s %25s\n", "occ", "re", "im",
                    "prob");
      out += buf;
      const StateVector shown = state_->pruned();
      for (const auto& [occ, amp] : shown.amplitudes()) {
        std::snprintf(buf, sizeof buf, "%-22s %25s %25s %25s\n",
                      format_ket(occ).c_str(), json_number(amp.real()).c_str(),
                      json_number(amp.imag()).c_str(),
                      json_number(std::norm(amp)).c_str());
        out += buf;
      }
    }
    return out;
  }

  const RunConfig& cfg_;
  std::vector<Field> fields_;
  std::optional<StateVector> state_;
};

Report base_report(const RunConfig& cfg, const std::string& input) {
  Report r(cfg);
  r.string_field("input", input);
  r.number_field("phi", cfg.phi);
  r.string_field("class", cfg.spec.is_fermionic() ? "fermionic" : "bosonic");
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string matrix_json(const Matrix& m, bool imag) {
  std::string out = "[";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out += r ? ", [" : "[";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += json_number(imag ? m(r, c).imag() : m(r, c).real());
    }
    out += "]";
  }
  return out + "]";
}

double angle_value(const nlohmann::json& v, const char* key) {
  if (!v.contains(key)) return 0.0;
  const auto& x = v.at(key);
  if (x.is_number()) return x.get<double>();
  if (x.is_string()) {
    if (auto a = parse_angle(x.get<std::string>())) return a->radians();
  }
  throw ValidationError(std::string("malformed angle for '") + key + "'");
}

// First key present among the spellings; "q" and "qubit" are synonyms.
int int_field(const nlohmann::json& g, std::initializer_list<const char*> keys) {
  for (const char* k : keys) {
    if (g.contains(k)) return g.at(k).get<int>();
  }
  throw ValidationError(std::string("gate is missing '") + *keys.begin() + "'");
}

std::vector<LogicalGate> parse_gates(const nlohmann::json& doc) {
  std::vector<LogicalGate> gates;
  for (const auto& g : doc.at("gates")) {
    const auto type = g.at("type").get<std::string>();
    if (type == "u1") {
      gates.push_back(U1Gate{int_field(g, {"q", "qubit"}), angle_value(g, "alpha"),
                             angle_value(g, "beta"), angle_value(g, "gamma"),
                             angle_value(g, "delta")});
    } else if (type == "rz") {
      gates.push_back(RzGate{int_field(g, {"q", "qubit"}), angle_value(g, "beta")});
    } else if (type == "rx") {
      gates.push_back(RxGate{int_field(g, {"q", "qubit"}), angle_value(g, "gamma")});
    } else if (type == "cp") {
      gates.push_back(CpGate{int_field(g, {"a", "control"}),
                             int_field(g, {"b", "target"})});
    } else {
      throw ValidationError("unknown gate type '" + type + "'");
    }
  }
  return gates;
}

Complex complex_from_json(const nlohmann::json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  return {v.value("re", 0.0), v.value("im", 0.0)};
}

CoherentFamily family_from_json(const nlohmann::json& doc) {
  const auto name = doc.at("family").get<std::string>();
  if (name == "single" || name == "single_mode") {
    return family::SingleMode{complex_from_json(doc.at("g")),
                              Mode{doc.value("mode", 1)}};
  }
  const Complex u = complex_from_json(doc.value("u", nlohmann::json(0.0)));
  const Complex v = complex_from_json(doc.value("v", nlohmann::json(0.0)));
  if (name == "exact_less") return family::ExactLess{u, v};
  if (name == "exact_greater") return family::ExactGreater{u, v};
  if (name == "type1") return family::Type1{u, v};
  if (name == "type2") return family::Type2{u, v};
  throw ValidationError("unknown coherent family '" + name + "'");
}

void describe_family(Report& r, const CoherentFamily& fam) {
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::SingleMode>) {
          r.string_field("family", "single_mode");
          r.field("g", complex_json(f.g), complex_text(f.g));
          r.field("mode", std::to_string(f.mode.label), std::to_string(f.mode.label));
        } else {
          const char* name = std::is_same_v<T, family::ExactLess>      ? "exact_less"
                             : std::is_same_v<T, family::ExactGreater> ? "exact_greater"
                             : std::is_same_v<T, family::Type1>        ? "type1"
                                                                       : "type2";
          r.string_field("family", name);
          r.field("u", complex_json(f.u), complex_text(f.u));
          r.field("v", complex_json(f.v), complex_text(f.v));
        }
      },
      fam);
}

}  // namespace

std::string amplitudes_json(const StateVector& state, const std::string& indent) {
  const StateVector s = state.pruned();
  if (s.empty()) return "[]";
  std::string out = "[\n";
  bool first = true;
  for (const auto& [occ, amp] : s.amplitudes()) {
    if (!first) out += ",\n";
    out += indent + "  {\"occ\": " + occ_json(occ) + ", \"re\": " +
           json_number(amp.real()) + ", \"im\": " + json_number(amp.imag()) + "}";
    first = false;
  }
  return out + "\n" + indent + "]";
}

RunConfig make_config(const std::string& phi, const std::string& cls, bool table) {
  const auto angle = parse_angle(phi);
  if (!angle || !std::isfinite(angle->radians())) {
    throw ValidationError("malformed --phi '" + phi + "'");
  }
  ParticleClass pc;
  if (cls == "bosonic") {
    pc = ParticleClass::Bosonic;
  } else if (cls == "fermionic") {
    pc = ParticleClass::Fermionic;
  } else {
    throw ValidationError("--class must be bosonic or fermionic, got '" + cls + "'");
  }
  RunConfig cfg;
  cfg.spec = AnyonSpec(pc, angle->radians());
  cfg.phi = angle->radians();
  cfg.format = table ? OutputFormat::Table : OutputFormat::Json;
  return cfg;
}

CommandResult cmd_hom(const RunConfig& cfg) {
  Network net(2);
  net.bs(Mode{1}, Mode{2}, Angle::pi_fraction(1, 4));
  const StateVector in = StateVector::basis(Occupation{1, 1});
  Report r = base_report(cfg, format_ket(in.amplitudes().begin()->first));
  r.state(evolve(cfg.spec, net, in));
  return {kExitOk, r.render(), {}};
}

CommandResult cmd_braid(const RunConfig& cfg, const std::string& input,
                        bool normalize) {
  const StateVector in = parse_state(input, cfg.spec, {normalize, 3});
  Report r = base_report(cfg, input);
  r.state(evolve(cfg.spec, build_braiding_network(), in));
  return {kExitOk, r.render(), {}};
}

CommandResult cmd_run(const RunConfig& cfg, const std::string& network_text,
                      const std::string& input, bool export_matrix,
                      bool normalize) {
  const Network net = parse_network(network_text);
  const StateVector in = parse_state(input, cfg.spec, {normalize, net.modes()});
  Report r = base_report(cfg, input);
  if (export_matrix) {
    std::string json = "[";
    std::string text;
    bool first = true;
    for (int n : in.particle_numbers()) {
      const SectorHandle sector = enumerate_sector(net.modes(), n, cfg.spec);
      const Matrix u = network_unitary(cfg.spec, sector, net).mat();
      std::string basis = "[";
      for (std::size_t k = 0; k < sector->dim(); ++k) {
        if (k) basis += ", ";
        basis += occ_json((*sector)[k]);
      }
      basis += "]";
      json += std::string(first ? "" : ", ") + "{\"n\": " + std::to_string(n) +
              ", \"basis\": " + basis + ", \"re\": " + matrix_json(u, false) +
              ", \"im\": " + matrix_json(u, true) + "}";
      text += (first ? "n=" : " n=") + std::to_string(n) + " dim=" +
              std::to_string(sector->dim());
      first = false;
    }
    r.field("matrices", json + "]", text);
  }
  r.state(evolve(cfg.spec, net, in));
  return {kExitOk, r.render(), {}};
}

CommandResult cmd_compile(const RunConfig& flags, const std::string& circuit_json,
                          const std::string& input_bits, bool emit_network) {
  nlohmann::json doc;
  std::vector<LogicalGate> gates;
  int qubits = 0;
  RunConfig cfg = flags;
  try {
    doc = nlohmann::json::parse(circuit_json);
    qubits = doc.at("qubits").get<int>();
    gates = parse_gates(doc);
    std::string phi_text = format_double(flags.phi);
    std::string cls = flags.spec.is_fermionic() ? "fermionic" : "bosonic";
    if (!flags.phi_given) {
      if (!doc.contains("phi")) {
        throw ValidationError("compile needs the exchange phase: pass --phi or set \"phi\"");
      }
      const auto& p = doc.at("phi");
      phi_text = p.is_string() ? p.get<std::string>() : format_double(p.get<double>());
    }
    if (!flags.class_given && doc.contains("class")) cls = doc.at("class").get<std::string>();
    cfg = make_config(phi_text, cls, flags.format == OutputFormat::Table);
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("malformed circuit JSON: ") + ex.what());
  }
  const LogicalLayout layout(qubits);
  const Network net = compile_circuit(layout, gates);
  if (emit_network) return {kExitOk, serialize_network(net), {}};

  const std::string bits =
      input_bits.empty() ? std::string(static_cast<std::size_t>(qubits), '0')
                         : input_bits;
  const StateVector out = evolve(cfg.spec, net, encode(layout, bits));
  const DecodedState decoded = decode(layout, out);

  // Self-check: every logical column against the gate-level product, and no
  // amplitude may leave the code space.
  const Matrix got = logical_matrix(cfg.spec, layout, net);
  const Matrix want = reference_logical_matrix(layout, gates, cfg.phi);
  const double deviation = phase_aligned_distance(want, got);
  double worst_leak = 0.0;
  for (Eigen::Index c = 0; c < got.cols(); ++c) {
    worst_leak = std::max(worst_leak, std::abs(1.0 - got.col(c).squaredNorm()));
  }
  const bool ok = deviation <= 1e-9 && worst_leak <= kAtolPhysics;

  Report r = base_report(cfg, bits);
  std::string logical = "[";
  std::string logical_text;
  for (Eigen::Index s = 0; s < decoded.amplitudes.size(); ++s) {
    std::string label;
    for (int q = 0; q < qubits; ++q) {
      label += ((s >> (qubits - 1 - q)) & 1) ? '1' : '0';
    }
    const Complex a = decoded.amplitudes(s);
    logical += std::string(s ? ", " : "") + "{\"bits\": " + json_string(label) +
               ", \"re\": " + json_number(a.real()) + ", \"im\": " +
               json_number(a.imag()) + "}";
    logical_text += (s ? "  " : "") + label + ": " + complex_text(a);
  }
  r.field("logical", logical + "]", logical_text);
  r.number_field("leakage", decoded.leakage);
  r.number_field("self_check_deviation", deviation);
  r.string_field("self_check", ok ? "pass" : "fail");
  r.state(out);
  CommandResult res{ok ? kExitOk : kExitSelfCheck, r.render(), {}};
  if (!ok) res.err = "compile self-check failed: deviation " + json_number(deviation) + "\n";
  return res;
}

CommandResult cmd_cat(const RunConfig& cfg, const std::string& u_text, int nmax) {
  if (cfg.spec.is_fermionic()) {
    throw ValidationError("cat needs the bosonic class");
  }
  const Complex u = parse_complex(u_text);
  const Truncation trunc(nmax);
  if (truncation_risk(u, trunc)) {
    throw ValidationError("|u|^2 too large for --nmax " + std::to_string(nmax));
  }
  const StateVector cat = mirror_cat(u, cfg.spec, trunc);
  const Complex w = mirror_reflection(cfg.spec, Mode{1}) * u;

  Report r = base_report(cfg, "coherent(" + json_number(u.real()) + "," +
                                  json_number(u.imag()) + ") on mode 1");
  r.field("u", complex_json(u), complex_text(u));
  r.field("nmax", std::to_string(nmax), std::to_string(nmax));
  r.field("w", complex_json(w), complex_text(w));
  // The two-branch closed form describes the output only at phi = pi.
  int code = kExitOk;
  std::string err;
  if (std::abs(std::remainder(cfg.phi - kPi, kTwoPi)) < 1e-12) {
    const double f = fidelity(cat, cat_closed_form(w, Mode{2}, trunc));
    r.number_field("closed_form_fidelity", f);
    if (f < 1.0 - 1e-8) {
      code = kExitSelfCheck;
      err = "cat self-check failed: fidelity " + json_number(f) + "\n";
    }
  } else {
    r.field("closed_form_fidelity", "null", "n/a");
  }
  r.state(cat);
  return {code, r.render(), err};
}

CommandResult cmd_family(const RunConfig& cfg, const std::string& spec_json,
                         const std::string& network_text) {
  CoherentFamily fam;
  int nmax = 40;
  try {
    const auto doc = nlohmann::json::parse(spec_json);
    fam = family_from_json(doc);
    nmax = doc.value("nmax", 40);
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("malformed family JSON: ") + ex.what());
  }
  const Truncation trunc(nmax);
  StateVector state = two_mode_family_state(fam, cfg.spec, trunc);
  Report r = base_report(cfg, spec_json.substr(0, spec_json.find_last_not_of(" \n\r\t") + 1));
  int code = kExitOk;
  std::string err;
  if (!network_text.empty()) {
    const Network net = parse_network(network_text);
    const CoherentFamily evolved = evolve_family(fam, net, cfg.spec);
    const StateVector closed = two_mode_family_state(evolved, cfg.spec, trunc);
    const double f = fidelity(evolve(cfg.spec, net, state), closed);
    describe_family(r, evolved);
    r.number_field("exact_fidelity", f);
    if (f < 1.0 - 1e-8) {
      code = kExitSelfCheck;
      err = "family self-check failed: fidelity " + json_number(f) + "\n";
    }
    state = closed;
  } else {
    describe_family(r, fam);
  }
  r.state(state);
  return {code, r.render(), err};
}

CommandResult cmd_check_su2(const RunConfig& cfg, int count, std::uint64_t seed) {
  if (count < 1) throw ValidationError("--count must be positive");
  std::mt19937_64 rng(seed);
  const LogicalLayout layout(1);
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const Eigen::Matrix2cd target = random_su2(rng);
    const Network net = compile_single_qubit(layout, 1, target);
    worst = std::max(worst, phase_aligned_distance(
                                Matrix(target), logical_matrix(cfg.spec, layout, net)));
  }
  const bool ok = worst <= 1e-9;
  Report r = base_report(cfg, "haar-su2");
  r.field("count", std::to_string(count), std::to_string(count));
  r.field("seed", std::to_string(seed), std::to_string(seed));
  r.number_field("max_deviation", worst);
  r.string_field("self_check", ok ? "pass" : "fail");
  return {ok ? kExitOk : kExitSelfCheck, r.render(),
          ok ? "" : "su2 self-check failed\n"};
}

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"anyonlin: linear optics with one-dimensional anyons"};
  app.name(args.empty() ? "anyonlin" : args.front());
  app.require_subcommand(1);

  struct Common {
    std::string phi = "0";
    std::string cls = "bosonic";
    bool table = false;
    bool json = false;
  };
  auto add_common = [](CLI::App* sub, Common& c) {
    sub->add_option("--phi", c.phi, "exchange phase: radians or pi expression")
        ->capture_default_str();
    sub->add_option("--class", c.cls, "bosonic | fermionic")->capture_default_str();
    auto* table = sub->add_flag("--table", c.table, "plain-text table output");
    auto* json = sub->add_flag("--json", c.json, "JSON output (default)");
    table->excludes(json);
  };

  Common hom_c, braid_c, run_c, compile_c, cat_c, family_c, su2_c;
  cat_c.phi = "pi";
  std::string input, network_file, circuit_file, u = "1", spec_file;
  int nmax = 40, count = 100;
  std::uint64_t seed = 1;
  bool no_normalize = false, export_matrix = false, emit_network = false;

  auto* hom = app.add_subcommand("hom", "BS_12(pi/4) on |1,1>");
  add_common(hom, hom_c);

  auto* braid = app.add_subcommand("braid", "braiding network on a three-mode ket");
  add_common(braid, braid_c);
  braid->add_option("--input", input, "ket expression")->required();
  braid->add_flag("--no-normalize", no_normalize);

  auto* runc = app.add_subcommand("run", "apply a network file to a ket");
  add_common(runc, run_c);
  runc->add_option("--network", network_file, "network DSL file")->required();
  runc->add_option("--input", input, "ket expression")->required();
  runc->add_flag("--no-normalize", no_normalize);
  runc->add_flag("--matrix", export_matrix, "export sector unitaries");

  auto* compile = app.add_subcommand("compile", "dual-rail circuit compilation");
  add_common(compile, compile_c);
  compile->add_option("--circuit", circuit_file, "circuit JSON file")->required();
  compile->add_option("--input", input, "logical bitstring, default all zeros");
  compile->add_flag("--emit-network", emit_network, "print the network DSL only");

  auto* cat = app.add_subcommand("cat", "mirror-network cat state");
  add_common(cat, cat_c);
  cat->add_option("--u", u, "coherent amplitude")->capture_default_str();
  cat->add_option("--nmax", nmax, "Fock truncation")->capture_default_str();

  auto* fam = app.add_subcommand("family", "two-mode coherent family");
  add_common(fam, family_c);
  fam->add_option("--spec", spec_file, "family JSON file")->required();
  fam->add_option("--network", network_file, "network DSL file");

  auto* su2 = app.add_subcommand("check-su2", "random single-qubit compilation");
  add_common(su2, su2_c);
  su2->add_option("--count", count)->capture_default_str();
  su2->add_option("--seed", seed)->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    return {code == 0 ? kExitOk : kExitValidation, out.str(), err.str()};
  }

  try {
    if (hom->parsed()) return cmd_hom(make_config(hom_c.phi, hom_c.cls, hom_c.table));
    if (braid->parsed()) {
      return cmd_braid(make_config(braid_c.phi, braid_c.cls, braid_c.table), input,
                       !no_normalize);
    }
    if (runc->parsed()) {
      return cmd_run(make_config(run_c.phi, run_c.cls, run_c.table),
                     read_file(network_file), input, export_matrix, !no_normalize);
    }
    if (compile->parsed()) {
      RunConfig cfg = make_config(compile_c.phi, compile_c.cls, compile_c.table);
      cfg.phi_given = compile->count("--phi") > 0;
      cfg.class_given = compile->count("--class") > 0;
      return cmd_compile(cfg, read_file(circuit_file), input, emit_network);
    }
    if (cat->parsed()) {
      return cmd_cat(make_config(cat_c.phi, cat_c.cls, cat_c.table), u, nmax);
    }
    if (fam->parsed()) {
      return cmd_family(make_config(family_c.phi, family_c.cls, family_c.table),
                        read_file(spec_file),
                        network_file.empty() ? "" : read_file(network_file));
    }
    return cmd_check_su2(make_config(su2_c.phi, su2_c.cls, su2_c.table), count, seed);
  } catch (const AnyonError& e) {
    return {kExitValidation, {}, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace anyonlin::cli
