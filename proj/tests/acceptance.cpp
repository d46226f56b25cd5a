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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "random_gates.hpp"
#include "warpc/grover.hpp"
#include "warpc/hardsim.hpp"

using namespace warpc;

namespace {

constexpr double kJ = 215.5;
const HamiltonianParams kParams = HamiltonianParams::with_j(kJ);

struct Verdict {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "failed: ";
      else detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

Unitary4 u10() { return grover_gate(TargetFile::of(1, 0)); }
Unitary4 w4() { return warp_catalog()[4].matrix; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

void criterion1(Verdict& v) {
  const CartanCoordinates c = canonical_coordinates(u10());
  v.require(c.max_abs_diff({kPi, kPi, 0.0}) <= 1e-9, "U10 coords " + fmt(c.x) + "," + fmt(c.y) + "," + fmt(c.z));
  const CartanCoordinates printed = weyl_canonicalize({kPi, -kPi, 0.0}).coords;
  v.require(printed.max_abs_diff(c) <= 1e-9, "(pi,-pi,0) not Weyl-equivalent");
  v.require(coupling_time(c, kJ).j_units == 1.0, "U10 time not 1/J");
  v.detail << "coords (pi, pi, 0), time 1/J";
}

void criterion2(Verdict& v) {
  const CartanCoordinates c = canonical_coordinates(w4() * u10());
  v.require(c.max_abs_diff({kPi, 0.0, 0.0}) <= 1e-9, "W4U10 coords");
  v.require(coupling_time(c, kJ).j_units == 0.5, "W4U10 time not 1/2J");
  v.detail << "coords (pi, 0, 0), time 1/2J";
}

void criterion3(Verdict& v) {
  const std::array<double, 6> expected{1.0, 1.0, 1.0, 0.5, 0.5, 0.5};
  for (int k = 0; k < 4; ++k) {
    const TargetFile t = TargetFile::of(k / 2, k % 2);
    const WarpSearchResult r = warp_search(grover_gate(t), kJ);
    for (size_t g = 0; g < 6; ++g) {
      v.require(r.records[g].duration.j_units == expected[g],
                "U" + t.label() + " " + r.records[g].name);
    }
  }
  v.detail << "all four targets: W0-W2 1/J, W3-W5 1/2J";
}

void criterion4(Verdict& v) {
  std::mt19937_64 rng(20260101);
  double worst = 0.0;
  double worst_coords = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Unitary4 u = testing::random_unitary4(rng);
    const KakDecomposition d = cartan_decompose(u);
    worst = std::max(worst, phase_distance(d.reassemble(), u));
    const Unitary4 dressed = testing::random_local(rng) * u * testing::random_local(rng);
    worst_coords = std::max(worst_coords, d.coords.max_abs_diff(canonical_coordinates(dressed)));
  }
  v.require(worst <= 1e-9, "reconstruction " + fmt(worst));
  v.require(worst_coords <= 1e-9, "local invariance " + fmt(worst_coords));
  v.detail << "max distance " << fmt(worst) << ", max coord drift " << fmt(worst_coords);
}

void criterion5(Verdict& v) {
  const PulseSequence s10 = compile(cartan_decompose(u10()), kParams, "U10");
  const PulseSequence sw = compile(cartan_decompose(w4() * u10()), kParams, "W4U10");
  v.require(phase_distance(simulate_sequence(s10, kParams), u10()) <= 1e-9, "U10 program");
  v.require(phase_distance(simulate_sequence(sw, kParams), w4() * u10()) <= 1e-9, "W4U10 program");

  auto idles = [](const PulseSequence& s) {
    std::vector<double> out;
    for (const Pulse& p : s.pulses()) {
      if (const auto* i = std::get_if<Idle>(&p)) out.push_back(i->j_units);
    }
    return out;
  };
  v.require(idles(sw) == std::vector<double>{0.5}, "W4U10 idles");
  v.require(idles(s10) == std::vector<double>{0.5, 0.5}, "U10 idles");
  v.require(sw.totals().pulse_count < s10.totals().pulse_count, "pulse count not reduced");

  std::mt19937_64 rng(20260102);
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    const Unitary4 u = testing::random_unitary4(rng);
    worst = std::max(worst, phase_distance(simulate_sequence(compile(cartan_decompose(u), kParams), kParams), u));
  }
  v.require(worst <= 1e-9, "random programs " + fmt(worst));
  v.detail << "pulses " << s10.totals().pulse_count << " -> " << sw.totals().pulse_count
           << ", random max distance " << fmt(worst);
}

// Hand-written sequences: each column is one idle or a pair of optional
// rotations (qubit 1, qubit 2), listed left to right.
struct Column {
  bool idle = false;
  std::optional<Rotation> q1;
  std::optional<Rotation> q2;
};

Rotation rot(int q, double phase, double flip) { return Rotation{q, phase, flip}; }

std::vector<Column> table_u10() {
  auto x = [](int q) { return rot(q, 0.0, kPi / 2.0); };
  auto xm = [](int q) { return rot(q, kPi, kPi / 2.0); };
  auto y = [](int q) { return rot(q, kPi / 2.0, kPi / 2.0); };
  auto ym = [](int q) { return rot(q, 3.0 * kPi / 2.0, kPi / 2.0); };
  return {{false, x(1), x(2)},  {true, {}, {}},      {false, xm(1), xm(2)},
          {false, y(1), ym(2)}, {true, {}, {}},      {false, x(1), y(2)},
          {false, ym(1), rot(2, kPi / 4.0, kPi)}};
}

std::vector<Column> table_w4u10() {
  return {{false, rot(1, kPi, kPi / 2.0), {}},
          {false, rot(1, -kPi / 4.0, kPi), {}},
          {true, {}, {}},
          {false, rot(1, 0.0, kPi / 2.0), rot(2, kPi, kPi)}};
}

PulseSequence as_program(const std::vector<Column>& cols) {
  std::vector<Pulse> pulses;
  for (const Column& c : cols) {
    if (c.idle) {
      pulses.push_back(Idle{0.5});
      continue;
    }
    if (c.q1) pulses.push_back(*c.q1);
    if (c.q2) pulses.push_back(*c.q2);
  }
  return PulseSequence::from_pulses(pulses, kJ);
}

// Alternative readings: rotation sense, column order, sign of the coupling.
Unitary4 variant(const std::vector<Column>& cols, int sense, bool reversed, int coupling) {
  Unitary4 total = Unitary4::identity();
  std::vector<Column> order = cols;
  if (reversed) std::reverse(order.begin(), order.end());
  for (const Column& c : order) {
    Unitary4 step = Unitary4::identity();
    if (c.idle) {
      const Matrix4 zz = kron(pauli::z(), pauli::z());
      step = Unitary4::trusted(std::cos(kPi / 4.0) * Matrix4::Identity() -
                               kI * (coupling * std::sin(kPi / 4.0)) * zz);
    } else {
      auto one = [&](const std::optional<Rotation>& r) {
        return r ? pauli_rotation(r->phase_angle, sense * r->flip_angle) : Unitary2::identity();
      };
      step = kron(one(c.q1), one(c.q2));
    }
    total = step * total;
  }
  return total;
}

void criterion6(Verdict& v) {
  const Unitary4 a = simulate_sequence(as_program(table_u10()), kParams);
  const Unitary4 b = simulate_sequence(as_program(table_w4u10()), kParams);
  const EquivalenceReport ra = equivalence_report(a, u10());
  const EquivalenceReport rb = equivalence_report(b, w4() * u10());
  v.require(ra.same_local_class && ra.coord_delta <= 1e-8, "U10 row class, delta " + fmt(ra.coord_delta));
  v.require(rb.same_local_class && rb.coord_delta <= 1e-8, "W4U10 row class, delta " + fmt(rb.coord_delta));

  v.detail << "same class; phase distances by (sense, order, coupling):";
  for (int sense : {1, -1}) {
    for (bool reversed : {false, true}) {
      for (int coupling : {1, -1}) {
        const double da = phase_distance(variant(table_u10(), sense, reversed, coupling), u10());
        const double db = phase_distance(variant(table_w4u10(), sense, reversed, coupling), w4() * u10());
        v.detail << " (" << (sense > 0 ? '+' : '-') << (reversed ? 'r' : 'f')
                 << (coupling > 0 ? '+' : '-') << " " << fmt(da) << "/" << fmt(db) << ")";
      }
    }
  }
}

void criterion7(Verdict& v) {
  const PulseSequence s = compile(cartan_decompose(w4() * u10()), kParams);
  const StateVector4 out =
      apply(simulate_sequence(s, kParams), StateVector4::basis(BasisLabel::parse("00")));
  v.require(std::abs(out[3]) >= 1.0 - 1e-9, "|11> amplitude " + fmt(std::abs(out[3])));
  const BasisLabel decoded = decode_output(warp_catalog()[4], out.dominant());
  v.require(decoded == BasisLabel::parse("10"), "decoded " + decoded.str());

  struct Row {
    const char* ket;
    double ppm;
    double sign;
  };
  for (const Row& r : {Row{"00", 79.20, 1.0}, Row{"10", 77.49, 1.0}, Row{"11", 77.49, -1.0}}) {
    const StickSpectrum sp = predict_spectrum(StateVector4::basis(BasisLabel::parse(r.ket)));
    v.require(sp.lines.size() == 1 && sp.lines[0].ppm == r.ppm &&
                  sp.lines[0].amplitude * r.sign > 0.0,
              std::string("spectrum of ") + r.ket);
  }
  v.detail << "|00> -> |11>, decoded 10, lines 79.20+ 77.49+ 77.49-";
}

void criterion8(Verdict& v) {
  const Unitary4 cnot = warp_catalog()[1].matrix;
  const Unitary4 swap = warp_catalog()[3].matrix;
  const double tc = coupling_time(canonical_coordinates(cnot), kJ).j_units;
  const double ts = coupling_time(canonical_coordinates(swap), kJ).j_units;
  v.require(tc == 0.5, "CNOT " + fmt(tc));
  v.require(ts == 1.5, "SWAP " + fmt(ts));
  v.require(std::abs(oracle::coupling_j_units(cnot.matrix()) - tc) <= 1e-9, "CNOT oracle");
  v.require(std::abs(oracle::coupling_j_units(swap.matrix()) - ts) <= 1e-9, "SWAP oracle");
  std::mt19937_64 rng(20260103);
  for (int k = 0; k < 20; ++k) {
    const Unitary4 dressed = testing::random_local(rng) * cnot * testing::random_local(rng);
    const double t = coupling_time(canonical_coordinates(dressed), kJ).j_units;
    v.require(t == 0.5, "dressed CNOT " + fmt(t));
    v.require(std::abs(oracle::coupling_j_units(dressed.matrix()) - 0.5) <= 1e-9, "dressed CNOT oracle");
  }
  v.detail << "CNOT 1/2J, SWAP 3/2J, oracle agrees";
}

void criterion9(Verdict& v) {
  const std::array<Matrix2, 3> paulis{pauli::x(), pauli::y(), pauli::z()};
  const Matrix4& q = magic_basis().matrix();
  double worst = 0.0;
  int k_count = 0;
  int p_count = 0;
  for (const auto& p : paulis) {
    for (const Matrix4& gen : {Matrix4(kI * kron(p, pauli::identity()) / 2.0),
                               Matrix4(kI * kron(pauli::identity(), p) / 2.0)}) {
      const Matrix4 m = q.adjoint() * gen * q;
      worst = std::max({worst, m.imag().cwiseAbs().maxCoeff(), (m + m.transpose()).cwiseAbs().maxCoeff()});
      ++k_count;
    }
    for (const auto& r : paulis) {
      const Matrix4 m = q.adjoint() * (kI * kron(p, r) / 4.0) * q;
      worst = std::max({worst, m.real().cwiseAbs().maxCoeff(), (m - m.transpose()).cwiseAbs().maxCoeff()});
      ++p_count;
    }
  }
  v.require(k_count == 6 && p_count == 9, "generator count");
  v.require(worst <= 1e-12, "residual " + fmt(worst));
  v.detail << "6 + 9 generators, max residual " << fmt(worst);
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Verdict&)>>> criteria{
      {"U10 canonical coordinates and time", criterion1},
      {"W4U10 canonical coordinates and time", criterion2},
      {"warp sweep over all Grover targets", criterion3},
      {"reconstruction and local invariance", criterion4},
      {"compiler certification", criterion5},
      {"hand-written pulse tables", criterion6},
      {"end-to-end Grover run", criterion7},
      {"CNOT and SWAP classes", criterion8},
      {"Cartan split witness", criterion9},
  };
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    try {
      criteria[k].second(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    failures += !v.ok;
    std::printf("[%s] %zu %s: %s\n", v.ok ? "PASS" : "FAIL", k + 1, criteria[k].first,
                v.detail.str().c_str());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu criteria, %d failed, %.2f s\n", criteria.size(), failures, secs);
  return failures == 0 ? 0 : 1;
}
