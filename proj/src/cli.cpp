// Copyright 2026 The warpc Authors
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

#include "warpc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <Eigen/SVD>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "warpc/format.hpp"
#include "warpc/grover.hpp"
#include "warpc/hardsim.hpp"
#include "warpc/kak.hpp"
#include "warpc/pulse.hpp"
#include "warpc/warpdrive.hpp"

namespace warpc::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  double j_hz = 215.5;
  double tolerance = kEquivalenceTolerance;
  std::string catalog = "six";
  std::string tie_break = "lowest-index";
  std::string output = "table";

  CatalogScope scope() const {
    return catalog == "all24" ? CatalogScope::kAll24 : CatalogScope::kSix;
  }
  bool structured() const { return output == "structured"; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool parse_real(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size() && std::isfinite(out);
}

Complex parse_complex(const std::string& tok) {
  auto fail = [&]() -> Complex {
    throw Error(ErrorCode::kParse, "bad complex entry '" + tok + "'");
  };
  if (tok.empty()) return fail();
  if (tok.back() != 'i' && tok.back() != 'j') {
    double re = 0.0;
    if (!parse_real(tok, re)) return fail();
    return {re, 0.0};
  }
  const std::string body = tok.substr(0, tok.size() - 1);
  size_t split = std::string::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_part = split == std::string::npos ? body : body.substr(split);
  if (im_part.empty() || im_part == "+") im_part += "1";
  if (im_part == "-") im_part = "-1";
  double re = 0.0;
  double im = 0.0;
  if (!re_part.empty() && !parse_real(re_part, re)) return fail();
  if (!parse_real(im_part, im)) return fail();
  return {re, im};
}

Unitary4 builtin_factor(const std::string& tok) {
  if (tok == "identity") return Unitary4::identity();
  if (tok.rfind("grover:", 0) == 0) {
    const std::string bits = tok.substr(7);
    const BasisLabel label = BasisLabel::parse(bits);
    return grover_gate(TargetFile::of(label.index() / 2, label.index() % 2));
  }
  if (tok.rfind("warp:", 0) == 0) {
    const auto gate = find_warp_gate(tok.substr(5), CatalogScope::kAll24);
    if (!gate) throw Error(ErrorCode::kParse, "unknown warp gate '" + tok.substr(5) + "'");
    return gate->matrix;
  }
  throw Error(ErrorCode::kParse, "unknown matrix source '" + tok + "'");
}

std::string format_complex(Complex z) {
  const double re = std::abs(z.real()) < 5e-13 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f%+.6fi", re + 0.0, im + 0.0);
  return buf;
}

template <int N>
std::string format_matrix(const Unitary<N>& u, const std::string& indent) {
  std::string out;
  for (int r = 0; r < N; ++r) {
    out += indent;
    for (int c = 0; c < N; ++c) out += (c ? "  " : "") + format_complex(u(r, c));
    out += "\n";
  }
  return out;
}

std::string format_coords(const CartanCoordinates& c) {
  return "(" + format_angle(c.x) + ", " + format_angle(c.y) + ", " + format_angle(c.z) + ")";
}

std::string format_seconds(const Duration& d) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f ms", d.seconds * 1e3);
  return buf;
}

std::string format_decode_map(const WarpGate& w) {
  std::string out;
  for (int k = 0; k < 4; ++k) {
    const BasisLabel observed = BasisLabel::from_index(k);
    out += (k ? " " : "") + observed.str() + "->" + decode_output(w, observed).str();
  }
  return out;
}

Json coords_json(const CartanCoordinates& c) { return Json::array({c.x, c.y, c.z}); }

Json matrix_json(const Matrix2& m) {
  Json rows = Json::array();
  for (int r = 0; r < 2; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 2; ++c) row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(row);
  }
  return rows;
}

WarpGate warp_by_name(const std::string& name) {
  const auto gate = find_warp_gate(name, CatalogScope::kAll24);
  if (!gate) throw Error(ErrorCode::kParse, "unknown warp gate '" + name + "'");
  return *gate;
}

struct Target {
  Unitary4 matrix;
  std::string description;
  std::optional<WarpGate> warp;
};

Target apply_warp(const Unitary4& u, const std::string& source, const std::string& warp,
                  const RunConfig& cfg, std::ostream& out) {
  if (warp.empty() || warp == "none") return {u, source, std::nullopt};
  WarpGate gate;
  if (warp == "auto") {
    const WarpSearchResult res = warp_search(u, cfg.j_hz, cfg.scope());
    gate = warp_catalog(cfg.scope()).at(static_cast<size_t>(res.selected));
    if (cfg.tie_break == "report-all" && !cfg.structured()) {
      out << "# warp minimizers:";
      for (int idx : res.minimizers) out << " " << res.records[static_cast<size_t>(idx)].name;
      out << "\n";
    }
  } else {
    gate = warp_by_name(warp);
  }
  return {gate.matrix * u, gate.name + "*" + source, gate};
}

int cmd_decompose(const RunConfig& cfg, const std::string& source, const std::string& warp,
                  std::ostream& out) {
  const Unitary4 u = load_matrix_source(source, cfg.tolerance);
  const Target t = apply_warp(u, source, warp, cfg, out);
  const KakDecomposition d = cartan_decompose(t.matrix);
  const Duration time = coupling_time(d.coords, cfg.j_hz);
  const double residual = phase_distance(d.reassemble(), t.matrix);

  if (cfg.structured()) {
    Json j;
    j["source"] = t.description;
    j["coords"] = coords_json(d.coords);
    j["k1"] = {{"qubit1", matrix_json(d.k1.a.matrix())}, {"qubit2", matrix_json(d.k1.b.matrix())}};
    j["k2"] = {{"qubit1", matrix_json(d.k2.a.matrix())}, {"qubit2", matrix_json(d.k2.b.matrix())}};
    j["global_phase"] = d.global_phase;
    j["coupling_time"] = {{"seconds", time.seconds}, {"j_units", time.j_units}};
    j["reconstruction_distance"] = residual;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "target: " << t.description << "\n";
  out << "canonical coordinates: " << format_coords(d.coords) << "\n";
  out << "  alpha = (" << format_exact(d.coords.x) << ", " << format_exact(d.coords.y) << ", "
      << format_exact(d.coords.z) << ")\n";
  out << "k1 qubit 1:\n" << format_matrix(d.k1.a, "  ");
  out << "k1 qubit 2:\n" << format_matrix(d.k1.b, "  ");
  out << "k2 qubit 1:\n" << format_matrix(d.k2.a, "  ");
  out << "k2 qubit 2:\n" << format_matrix(d.k2.b, "  ");
  out << "global phase: " << format_angle(d.global_phase) << "\n";
  out << "coupling time: " << format_j_units(time.j_units) << " (" << format_seconds(time)
      << " at J = " << format_exact(cfg.j_hz) << " Hz)\n";
  out << "reconstruction distance: " << residual << "\n";
  return kOk;
}

int cmd_warp(const RunConfig& cfg, const std::string& source, std::ostream& out) {
  const Unitary4 u = load_matrix_source(source, cfg.tolerance);
  const WarpSearchResult res = warp_search(u, cfg.j_hz, cfg.scope());
  const auto catalog = warp_catalog(cfg.scope());
  auto is_min = [&](int idx) {
    return std::find(res.minimizers.begin(), res.minimizers.end(), idx) != res.minimizers.end();
  };

  if (cfg.structured()) {
    Json j;
    j["source"] = source;
    j["j_hz"] = cfg.j_hz;
    Json rows = Json::array();
    for (const auto& r : res.records) {
      const WarpGate& w = catalog[static_cast<size_t>(r.index)];
      Json decode = Json::object();
      for (int k = 0; k < 4; ++k) {
        const BasisLabel obs = BasisLabel::from_index(k);
        decode[obs.str()] = decode_output(w, obs).str();
      }
      rows.push_back({{"gate", r.name},
                      {"coords", coords_json(r.coords)},
                      {"j_units", r.duration.j_units},
                      {"seconds", r.duration.seconds},
                      {"minimizer", is_min(r.index)},
                      {"decode", decode}});
    }
    j["records"] = rows;
    Json mins = Json::array();
    for (int idx : res.minimizers) mins.push_back(res.records[static_cast<size_t>(idx)].name);
    j["minimizers"] = mins;
    if (cfg.tie_break == "report-all") {
      j["selected"] = nullptr;
    } else {
      j["selected"] = res.selected_record().name;
    }
    out << j.dump(2) << "\n";
    return kOk;
  }

  out << "source: " << source << "\n";
  char buf[160];
  std::snprintf(buf, sizeof buf, "  %-6s %-18s %-8s %-14s %s\n", "gate", "coords", "time",
                "seconds", "decode");
  out << buf;
  for (const auto& r : res.records) {
    const WarpGate& w = catalog[static_cast<size_t>(r.index)];
    const bool pick = r.index == res.selected && cfg.tie_break != "report-all";
    const char* mark = pick ? ">" : (is_min(r.index) ? "*" : " ");
    const std::string coords = format_coords(r.coords);
    // pad by code points so the π glyphs do not skew columns
    size_t width = 0;
    for (char c : coords) width += (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    const std::string padded = coords + std::string(width < 18 ? 18 - width : 0, ' ');
    std::snprintf(buf, sizeof buf, "%s %-6s %s %-8s %-14s %s\n", mark, r.name.c_str(),
                  padded.c_str(), format_j_units(r.duration.j_units).c_str(),
                  format_seconds(r.duration).c_str(), format_decode_map(w).c_str());
    out << buf;
  }
  out << "minimizers:";
  for (int idx : res.minimizers) out << " " << res.records[static_cast<size_t>(idx)].name;
  out << "\n";
  if (cfg.tie_break != "report-all") out << "selected: " << res.selected_record().name << "\n";
  return kOk;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  f << text;
}

int cmd_compile(const RunConfig& cfg, const std::string& source, const std::string& warp,
                bool verify, const std::string& program_path, const std::string& table_path,
                std::ostream& out) {
  const Unitary4 u = load_matrix_source(source, cfg.tolerance);
  const Target t = apply_warp(u, source, warp, cfg, out);
  const KakDecomposition d = cartan_decompose(t.matrix);
  const HamiltonianParams params = HamiltonianParams::with_j(cfg.j_hz);
  const PulseSequence seq = compile(d, params, t.description);
  const std::string program = serialize_program(seq);
  const std::string table = emit_table(seq);

  if (!program_path.empty()) write_text(program_path, program);
  if (!table_path.empty()) write_text(table_path, table);

  std::string verdict;
  bool failed = false;
  if (verify) {
    const double dist = phase_distance(simulate_sequence(seq, params), t.matrix);
    failed = !(dist <= cfg.tolerance);
    char buf[128];
    std::snprintf(buf, sizeof buf, "verify: phase_distance %.3e (tolerance %.1e) %s\n", dist,
                  cfg.tolerance, failed ? "FAILED" : "ok");
    verdict = buf;
  }
  if (cfg.structured()) {
    if (!verdict.empty()) out << "# " << verdict;
    out << program;
  } else {
    out << table;
    out << verdict;
  }
  return failed ? kVerificationFailure : kOk;
}

int cmd_simulate(const RunConfig& cfg, const std::string& program_path,
                 const std::string& initial, bool spectrum, const std::string& decode,
                 std::ostream& out) {
  const PulseSequence seq = parse_program(read_file(program_path));
  const HamiltonianParams params = HamiltonianParams::with_j(seq.j_hz);
  const Unitary4 u = simulate_sequence(seq, params);
  std::optional<WarpGate> warp;
  if (!decode.empty()) warp = warp_by_name(decode);

  Json j;
  if (initial.empty()) {
    const CartanCoordinates c = canonical_coordinates(u);
    if (cfg.structured()) {
      Json rows = Json::array();
      for (int r = 0; r < 4; ++r) {
        Json row = Json::array();
        for (int col = 0; col < 4; ++col) row.push_back(Json::array({u(r, col).real(), u(r, col).imag()}));
        rows.push_back(row);
      }
      j["unitary"] = rows;
      j["coords"] = coords_json(c);
    } else {
      out << "unitary:\n" << format_matrix(u, "  ");
      out << "canonical coordinates: " << format_coords(c) << "\n";
    }
  } else {
    const StateVector4 psi = apply(u, StateVector4::basis(BasisLabel::parse(initial)));
    const BasisLabel top = psi.dominant();
    if (cfg.structured()) {
      Json amps = Json::object();
      for (int k = 0; k < 4; ++k) {
        amps[BasisLabel::from_index(k).str()] = Json::array({psi[k].real(), psi[k].imag()});
      }
      j["initial"] = initial;
      j["state"] = amps;
      j["dominant"] = top.str();
    } else {
      out << "initial: " << initial << "\nstate:\n";
      for (int k = 0; k < 4; ++k) {
        out << "  |" << BasisLabel::from_index(k).str() << ">  " << format_complex(psi[k]) << "\n";
      }
      out << "dominant: " << top.str() << "\n";
    }
    if (warp) {
      const std::string decoded = decode_output(*warp, top).str();
      if (cfg.structured()) {
        j["decoded"] = decoded;
      } else {
        out << "decoded via " << warp->name << ": " << decoded << "\n";
      }
    }
    if (spectrum) {
      const StickSpectrum s = predict_spectrum(psi);
      if (cfg.structured()) {
        Json lines = Json::array();
        for (const auto& l : s.lines) lines.push_back({{"ppm", l.ppm}, {"amplitude", l.amplitude}});
        j["spectrum"] = lines;
      } else {
        out << "spectrum (observed qubit 2):\n";
        for (const auto& l : s.lines) {
          char buf[64];
          std::snprintf(buf, sizeof buf, "  %.2f ppm  %+.6f\n", l.ppm, l.amplitude + 0.0);
          out << buf;
        }
      }
    }
  }
  if (cfg.structured()) out << j.dump(2) << "\n";
  return kOk;
}

}  // namespace

Matrix4 parse_matrix_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Matrix4 m;
  int row = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string tok; ls >> tok;) toks.push_back(tok);
    if (toks.empty()) continue;
    if (row == 4) throw Error(ErrorCode::kParse, "matrix has more than 4 rows (line " + std::to_string(lineno) + ")");
    if (toks.size() != 4) {
      throw Error(ErrorCode::kParse, "matrix line " + std::to_string(lineno) + " needs 4 entries");
    }
    for (int c = 0; c < 4; ++c) m(row, c) = parse_complex(toks[static_cast<size_t>(c)]);
    ++row;
  }
  if (row != 4) throw Error(ErrorCode::kParse, "matrix needs 4 rows");
  return m;
}

Unitary4 load_matrix_source(const std::string& source, double tol) {
  if (source.empty()) throw Error(ErrorCode::kParse, "empty matrix source");
  Matrix4 product = Matrix4::Identity();
  std::stringstream ss(source);
  for (std::string tok; std::getline(ss, tok, '*');) {
    if (tok.empty()) throw Error(ErrorCode::kParse, "empty factor in '" + source + "'");
    Matrix4 factor;
    if (std::ifstream probe(tok); probe.good()) {
      factor = parse_matrix_text(read_file(tok));
    } else {
      factor = builtin_factor(tok).matrix();
    }
    product = product * factor;
  }
  // reject, then snap to the polar factor
  const Unitary4 checked = Unitary4::checked(product, tol);
  Eigen::JacobiSVD<Matrix4> svd(checked.matrix(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  return Unitary4::trusted(svd.matrixU() * svd.matrixV().adjoint());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"warpc: time-optimal two-qubit gate compiler for NMR"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--j-hz", cfg.j_hz, "J coupling in Hz");
  app.add_option("--tolerance", cfg.tolerance, "equivalence tolerance");
  app.add_option("--catalog", cfg.catalog, "warp catalog")->check(CLI::IsMember({"six", "all24"}));
  app.add_option("--tie-break", cfg.tie_break, "minimizer reporting")
      ->check(CLI::IsMember({"lowest-index", "report-all"}));
  app.add_option("--output", cfg.output, "report format")->check(CLI::IsMember({"table", "structured"}));

  std::string source;
  std::string warp;
  bool verify = false;
  std::string program_path;
  std::string table_path;
  std::string initial;
  bool spectrum = false;
  std::string decode;

  auto* decompose = app.add_subcommand("decompose", "Cartan decomposition and coupling time");
  decompose->add_option("source", source, "matrix source")->required();
  decompose->add_option("--warp", warp, "prepend a warp gate (W0..W5|none)");

  auto* warp_cmd = app.add_subcommand("warp", "search the warp-gate catalog");
  warp_cmd->add_option("source", source, "matrix source")->required();

  auto* compile_cmd = app.add_subcommand("compile", "compile to a pulse program");
  compile_cmd->add_option("source", source, "matrix source")->required();
  compile_cmd->add_option("--warp", warp, "W0..W5|auto|none");
  compile_cmd->add_flag("--verify", verify, "certify the program with the simulator");
  compile_cmd->add_option("--write-program", program_path, "write the structured program");
  compile_cmd->add_option("--write-table", table_path, "write the pulse table");

  auto* simulate = app.add_subcommand("simulate", "run a pulse program");
  simulate->add_option("program", source, "program file")->required();
  simulate->add_option("--initial", initial, "initial basis ket (00|01|10|11)");
  simulate->add_flag("--spectrum", spectrum, "predict the qubit-2 stick spectrum");
  simulate->add_option("--decode", decode, "decode the dominant ket through a warp gate");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseFailure;
  }

  try {
    if (!(cfg.j_hz > 0.0) || !std::isfinite(cfg.j_hz)) {
      throw Error(ErrorCode::kInvalidArgument, "--j-hz must be positive");
    }
    if (!(cfg.tolerance > 0.0) || !std::isfinite(cfg.tolerance)) {
      throw Error(ErrorCode::kInvalidArgument, "--tolerance must be positive");
    }
    if (decompose->parsed()) return cmd_decompose(cfg, source, warp, out);
    if (warp_cmd->parsed()) return cmd_warp(cfg, source, out);
    if (compile_cmd->parsed()) {
      return cmd_compile(cfg, source, warp, verify, program_path, table_path, out);
    }
    if (simulate->parsed()) {
      // a spectrum needs a state; default to the pseudopure |00>
      if (initial.empty() && (spectrum || !decode.empty())) initial = "00";
      return cmd_simulate(cfg, source, initial, spectrum, decode, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kParse ? kParseFailure : kInvalidInput;
  }
  return kParseFailure;
}

}  // namespace warpc::cli
