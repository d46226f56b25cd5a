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

#include "warpc/pulse.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "warpc/format.hpp"

namespace warpc {

namespace {

constexpr double kDropAngle = 1e-12;
constexpr double kSynthesisTolerance = 1e-11;

Rotation normalized(Rotation r) {
  double theta = std::remainder(r.flip_angle, 2.0 * kPi);
  double phi = r.phase_angle;
  if (theta < 0.0) {
    theta = -theta;
    phi += kPi;
  }
  phi = std::fmod(phi, 2.0 * kPi);
  if (phi < 0.0) phi += 2.0 * kPi;
  if (2.0 * kPi - phi <= kDropAngle) phi = 0.0;
  return Rotation{r.qubit, phi, theta};
}

bool is_identity(const Rotation& r) {
  return std::abs(std::remainder(r.flip_angle, 2.0 * kPi)) <= kDropAngle;
}

Unitary2 product(const std::vector<Rotation>& rs) {
  Unitary2 u;
  for (const auto& r : rs) u = r.matrix() * u;
  return u;
}

// Combines neighbours that share a rotation axis.
std::vector<Rotation> merge_adjacent(const std::vector<Rotation>& rs) {
  std::vector<Rotation> out;
  for (const auto& raw : rs) {
    if (is_identity(raw)) continue;
    Rotation r = normalized(raw);
    if (!out.empty()) {
      const double d = std::remainder(r.phase_angle - out.back().phase_angle, 2.0 * kPi);
      if (std::abs(d) <= kDropAngle || std::abs(std::abs(d) - kPi) <= kDropAngle) {
        const double sign = std::abs(d) <= kDropAngle ? 1.0 : -1.0;
        Rotation merged = out.back();
        merged.flip_angle += sign * r.flip_angle;
        out.pop_back();
        if (!is_identity(merged)) out.push_back(normalized(merged));
        continue;
      }
    }
    out.push_back(r);
  }
  return out;
}

void append(std::vector<Pulse>& out, const PulseSequence& s) {
  for (const auto& p : s.pulses()) out.push_back(p);
}

Matrix2 hadamard() {
  Matrix2 h;
  h << 1.0, 1.0, 1.0, -1.0;
  return h / std::sqrt(2.0);
}

[[noreturn]] void parse_error(int line, const std::string& msg) {
  throw Error(ErrorCode::kParse, "program line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& tok, int line) {
  double v = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || !std::isfinite(v)) {
    parse_error(line, "bad number '" + tok + "'");
  }
  return v;
}

}  // namespace

HamiltonianParams HamiltonianParams::with_j(double j_hz) {
  if (!(j_hz > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "J coupling must be positive");
  }
  HamiltonianParams p;
  p.j_coupling = j_hz;
  return p;
}

Unitary4 Rotation::embedded() const {
  return qubit == 1 ? kron(matrix(), Unitary2::identity())
                    : kron(Unitary2::identity(), matrix());
}

SequenceTotals PulseSequence::totals() const {
  double units = 0.0;
  int count = 0;
  for (const auto& step : steps) {
    if (const auto* idle = std::get_if<Idle>(&step)) {
      units += idle->j_units;
    } else {
      const auto& col = std::get<RotationColumn>(step);
      count += static_cast<int>(col.q1.has_value()) + static_cast<int>(col.q2.has_value());
    }
  }
  return SequenceTotals{Duration::from_j_units(units, j_hz), count};
}

std::vector<Pulse> PulseSequence::pulses() const {
  std::vector<Pulse> out;
  for (const auto& step : steps) {
    if (const auto* idle = std::get_if<Idle>(&step)) {
      out.emplace_back(*idle);
    } else {
      const auto& col = std::get<RotationColumn>(step);
      if (col.q1) out.emplace_back(*col.q1);
      if (col.q2) out.emplace_back(*col.q2);
    }
  }
  return out;
}

int PulseSequence::idle_count() const {
  return static_cast<int>(std::count_if(steps.begin(), steps.end(), [](const Step& s) {
    return std::holds_alternative<Idle>(s);
  }));
}

PulseSequence PulseSequence::from_pulses(const std::vector<Pulse>& pulses, double j_hz,
                                         std::string description) {
  PulseSequence s;
  s.j_hz = j_hz;
  s.target_description = std::move(description);
  std::vector<Rotation> first;
  std::vector<Rotation> second;
  auto flush = [&] {
    const size_t n = std::max(first.size(), second.size());
    for (size_t k = 0; k < n; ++k) {
      RotationColumn col;
      if (k < first.size()) col.q1 = first[k];
      if (k < second.size()) col.q2 = second[k];
      s.steps.emplace_back(col);
    }
    first.clear();
    second.clear();
  };
  for (const auto& p : pulses) {
    if (const auto* idle = std::get_if<Idle>(&p)) {
      if (!(idle->j_units > 0.0)) {
        throw Error(ErrorCode::kInvalidArgument, "idle periods must be positive");
      }
      flush();
      s.steps.emplace_back(*idle);
    } else {
      const auto& r = std::get<Rotation>(p);
      (r.qubit == 1 ? first : second).push_back(r);
    }
  }
  flush();
  return s;
}

std::vector<Rotation> euler_xyx(const Unitary2& u, int qubit) {
  const Matrix2 h = hadamard();
  Matrix2 w = h * u.matrix() * h;
  w /= std::sqrt(w.determinant());

  // w ~ Rz(a) Ry(b) Rz(c), hence u ~ Rx(a) Ry(-b) Rx(c)
  const double c0 = std::abs(w(0, 0));
  const double s0 = std::abs(w(1, 0));
  const double b = 2.0 * std::atan2(s0, c0);
  double a = 0.0;
  double c = 0.0;
  if (s0 < 1e-14) {
    a = 2.0 * std::arg(w(1, 1));
  } else if (c0 < 1e-14) {
    a = 2.0 * std::arg(w(1, 0));
  } else {
    const double sum = 2.0 * std::arg(w(1, 1));
    const double diff = 2.0 * std::arg(w(1, 0));
    a = (sum + diff) / 2.0;
    c = (sum - diff) / 2.0;
  }

  std::vector<Rotation> out;
  for (const Rotation& r : {Rotation{qubit, 0.0, c}, Rotation{qubit, kPi / 2.0, -b},
                            Rotation{qubit, 0.0, a}}) {
    if (!is_identity(r)) out.push_back(normalized(r));
  }
  return out;
}

std::vector<Rotation> synthesize_local(const Unitary2& u, int qubit) {
  if (phase_distance(u, Unitary2::identity()) <= kSynthesisTolerance) return {};

  Matrix2 w = u.matrix() / std::sqrt(u.determinant());
  // In-plane rotations have a real diagonal once det = 1.
  if (std::abs(w(0, 0).imag()) <= kSynthesisTolerance) {
    const double cos_half = std::clamp(w(0, 0).real(), -1.0, 1.0);
    const Rotation r = normalized(
        Rotation{qubit, std::arg(kI * w(1, 0)), 2.0 * std::acos(cos_half)});
    if (phase_distance(r.matrix(), u) <= kSynthesisTolerance) return {r};
  }
  return euler_xyx(u, qubit);
}

PulseSequence conjugate_coupling(CouplingAxis axis, double alpha, double j_hz) {
  if (!(std::abs(alpha) > 0.0) || std::abs(alpha) > kPi + kEquivalenceTolerance) {
    throw Error(ErrorCode::kOutOfRangeAlpha, "coupling angle must satisfy 0 < |alpha| <= pi");
  }
  // Free evolution gives exp(-i |alpha|/4 ZZ); a pi pulse on qubit 1 on
  // either side flips the sign of the exponent.
  std::vector<Pulse> zz;
  const Idle idle{coupling_units(alpha)};
  if (alpha > 0.0) {
    zz = {Rotation{1, 0.0, kPi}, idle, Rotation{1, kPi, kPi}};
  } else {
    zz = {idle};
  }

  std::vector<Pulse> out;
  auto both = [&](double phase, double flip) {
    out.emplace_back(Rotation{1, phase, flip});
    out.emplace_back(Rotation{2, phase, flip});
  };
  switch (axis) {
    case CouplingAxis::kZ:
      out = zz;
      break;
    case CouplingAxis::kX:
      // Ry(pi/2) carries sigma_z to sigma_x on each qubit
      both(kPi / 2.0, -kPi / 2.0);
      out.insert(out.end(), zz.begin(), zz.end());
      both(kPi / 2.0, kPi / 2.0);
      break;
    case CouplingAxis::kY:
      // Rx(-pi/2) carries sigma_z to sigma_y
      both(0.0, kPi / 2.0);
      out.insert(out.end(), zz.begin(), zz.end());
      both(0.0, -kPi / 2.0);
      break;
  }
  for (auto& p : out) {
    if (auto* r = std::get_if<Rotation>(&p)) *r = normalized(*r);
  }
  return PulseSequence::from_pulses(out, j_hz);
}

PulseSequence peephole(const PulseSequence& s) {
  std::vector<Pulse> out;
  std::vector<Rotation> first;
  std::vector<Rotation> second;
  auto flush = [&] {
    for (auto* run : {&first, &second}) {
      if (run->empty()) continue;
      const int qubit = run->front().qubit;
      auto merged = merge_adjacent(*run);
      auto synth = synthesize_local(product(*run), qubit);
      const auto& best = synth.size() < merged.size() ? synth : merged;
      for (const auto& r : best) out.emplace_back(r);
      run->clear();
    }
  };
  for (const auto& p : s.pulses()) {
    if (const auto* idle = std::get_if<Idle>(&p)) {
      flush();
      if (!out.empty()) {
        if (auto* last = std::get_if<Idle>(&out.back())) {
          last->j_units += idle->j_units;
          continue;
        }
      }
      out.emplace_back(*idle);
    } else {
      const auto& r = std::get<Rotation>(p);
      (r.qubit == 1 ? first : second).push_back(r);
    }
  }
  flush();
  return PulseSequence::from_pulses(out, s.j_hz, s.target_description);
}

PulseSequence compile(const KakDecomposition& d, const HamiltonianParams& p,
                      std::string description) {
  const double j = p.j_coupling;
  std::vector<Pulse> pulses;
  auto local = [&](const LocalGatePair& k) {
    for (const auto& r : synthesize_local(k.a, 1)) pulses.emplace_back(r);
    for (const auto& r : synthesize_local(k.b, 2)) pulses.emplace_back(r);
  };

  local(d.k1);
  const std::array<std::pair<CouplingAxis, double>, 3> terms{
      {{CouplingAxis::kX, d.coords.x}, {CouplingAxis::kY, d.coords.y},
       {CouplingAxis::kZ, d.coords.z}}};
  for (const auto& [axis, alpha] : terms) {
    if (coupling_units(alpha) == 0.0) continue;
    append(pulses, conjugate_coupling(axis, alpha, j));
  }
  local(d.k2);
  return peephole(PulseSequence::from_pulses(pulses, j, std::move(description)));
}

namespace {

size_t display_width(const std::string& s) {
  // count UTF-8 code points
  return static_cast<size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string rotation_name(const Rotation& raw) {
  const Rotation r = normalized(raw);
  constexpr double tol = 1e-9;
  auto near = [&](double v, double target) {
    return std::abs(std::remainder(v - target, 2.0 * kPi)) <= tol;
  };
  if (std::abs(r.flip_angle - kPi / 2.0) <= tol) {
    if (near(r.phase_angle, 0.0)) return "X";
    if (near(r.phase_angle, kPi / 2.0)) return "Y";
    if (near(r.phase_angle, kPi)) return "Xm";
    if (near(r.phase_angle, 3.0 * kPi / 2.0)) return "Ym";
  }
  // phase shown in (-pi, pi]
  double phi = std::remainder(r.phase_angle, 2.0 * kPi);
  if (phi <= -kPi + tol) phi = kPi;
  if (std::abs(r.flip_angle - kPi) <= tol) return "Pi(" + format_angle(phi) + ")";
  return "R(" + format_angle(phi) + "," + format_angle(r.flip_angle) + ")";
}

}  // namespace

std::string emit_table(const PulseSequence& s) {
  std::vector<std::string> row1;
  std::vector<std::string> row2;
  for (const auto& step : s.steps) {
    if (const auto* idle = std::get_if<Idle>(&step)) {
      const std::string cell = "(" + format_j_units(idle->j_units) + ")";
      row1.push_back(cell);
      row2.push_back(cell);
    } else {
      const auto& col = std::get<RotationColumn>(step);
      row1.push_back(col.q1 ? rotation_name(*col.q1) : "");
      row2.push_back(col.q2 ? rotation_name(*col.q2) : "");
    }
  }
  auto render = [&](const std::string& label, const std::vector<std::string>& cells) {
    std::string line = label;
    for (size_t k = 0; k < cells.size(); ++k) {
      const size_t width = std::max(display_width(row1[k]), display_width(row2[k]));
      line += "  " + cells[k] + std::string(width - display_width(cells[k]), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line + "\n";
  };
  const SequenceTotals t = s.totals();
  std::string out = "Gate: " + (s.target_description.empty() ? "-" : s.target_description) + "\n";
  out += render("1:", row1);
  out += render("2:", row2);
  out += "Execution time: " + format_j_units(t.coupling_time.j_units) + "\n";
  out += "Pulses: " + std::to_string(t.pulse_count) + "\n";
  return out;
}

std::string serialize_program(const PulseSequence& s) {
  std::string out = "warpc-pulse-program " + std::to_string(kProgramFormatVersion) + "\n";
  out += "j_hz " + format_exact(s.j_hz) + "\n";
  out += "target " + s.target_description + "\n";
  out += "steps " + std::to_string(s.steps.size()) + "\n";
  for (size_t k = 0; k < s.steps.size(); ++k) {
    const std::string head = "step " + std::to_string(k) + " ";
    if (const auto* idle = std::get_if<Idle>(&s.steps[k])) {
      out += head + "idle " + format_exact(idle->seconds(s.j_hz)) + " " +
             format_exact(idle->j_units) + "\n";
      continue;
    }
    const auto& col = std::get<RotationColumn>(s.steps[k]);
    for (const auto& r : {col.q1, col.q2}) {
      if (!r) continue;
      out += head + "rot " + std::to_string(r->qubit) + " " + format_exact(r->phase_angle) +
             " " + format_exact(r->flip_angle) + "\n";
    }
  }
  out += "end\n";
  return out;
}

PulseSequence parse_program(std::string_view text) {
  PulseSequence s;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_header = false;
  bool have_end = false;
  long declared_steps = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    if (have_end) parse_error(lineno, "content after 'end'");

    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (!have_header) {
      int version = 0;
      if (key != "warpc-pulse-program" || !(ls >> version)) {
        parse_error(lineno, "missing 'warpc-pulse-program' header");
      }
      if (version != kProgramFormatVersion) {
        parse_error(lineno, "unsupported format version " + std::to_string(version));
      }
      have_header = true;
    } else if (key == "j_hz") {
      std::string tok;
      ls >> tok;
      s.j_hz = parse_double(tok, lineno);
      if (!(s.j_hz > 0.0)) parse_error(lineno, "j_hz must be positive");
    } else if (key == "target") {
      const auto pos = line.find("target") + 6;
      s.target_description = pos < line.size() ? line.substr(pos + 1) : "";
    } else if (key == "steps") {
      if (!(ls >> declared_steps) || declared_steps < 0) parse_error(lineno, "bad step count");
    } else if (key == "step") {
      long index = -1;
      std::string kind;
      if (!(ls >> index >> kind)) parse_error(lineno, "malformed step record");
      const long current = static_cast<long>(s.steps.size()) - 1;
      const bool new_step = index == current + 1;
      if (!new_step && index != current) parse_error(lineno, "step indices must be consecutive");
      if (kind == "idle") {
        std::string sec_tok;
        std::string units_tok;
        if (!new_step) parse_error(lineno, "an idle must occupy its own step");
        if (!(ls >> sec_tok >> units_tok)) parse_error(lineno, "idle needs seconds and j_units");
        const double seconds = parse_double(sec_tok, lineno);
        const double units = parse_double(units_tok, lineno);
        if (!(units > 0.0) || !(seconds > 0.0)) parse_error(lineno, "idle duration must be positive");
        if (std::abs(seconds * s.j_hz - units) > 1e-9 * std::max(1.0, units)) {
          parse_error(lineno, "idle seconds disagree with j_units at the declared J");
        }
        s.steps.emplace_back(Idle{units});
      } else if (kind == "rot") {
        int qubit = 0;
        std::string phase_tok;
        std::string flip_tok;
        if (!(ls >> qubit >> phase_tok >> flip_tok)) parse_error(lineno, "malformed rotation");
        if (qubit != 1 && qubit != 2) parse_error(lineno, "qubit must be 1 or 2");
        const Rotation r{qubit, parse_double(phase_tok, lineno), parse_double(flip_tok, lineno)};
        if (!(std::abs(r.flip_angle) < 2.0 * kPi)) parse_error(lineno, "flip angle out of range");
        if (new_step) s.steps.emplace_back(RotationColumn{});
        auto* col = std::get_if<RotationColumn>(&s.steps.back());
        if (col == nullptr) parse_error(lineno, "rotation shares a step with an idle");
        auto& slot = qubit == 1 ? col->q1 : col->q2;
        if (slot) parse_error(lineno, "two rotations on one qubit in the same step");
        slot = r;
      } else {
        parse_error(lineno, "unknown step kind '" + kind + "'");
      }
    } else if (key == "end") {
      have_end = true;
    } else {
      parse_error(lineno, "unknown record '" + key + "'");
    }
  }
  if (!have_header) parse_error(lineno, "empty program");
  if (!have_end) parse_error(lineno, "missing 'end'");
  if (declared_steps >= 0 && declared_steps != static_cast<long>(s.steps.size())) {
    parse_error(lineno, "step count does not match 'steps' record");
  }
  return s;
}

}  // namespace warpc
