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

#include "warpc/hardsim.hpp"

#include <cmath>
#include <cstdio>

namespace warpc {

StateVector4 StateVector4::basis(BasisLabel label) {
  return StateVector4(Vector::Unit(label.index()));
}

StateVector4 StateVector4::normalized(const Vector& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::kInvalidArgument, "state vector must be nonzero and finite");
  }
  return StateVector4(v / n);
}

BasisLabel StateVector4::dominant() const {
  int best = 0;
  for (int k = 1; k < 4; ++k) {
    if (std::norm(v_(k)) > std::norm(v_(best)) + 1e-12) best = k;
  }
  return BasisLabel::from_index(best);
}

Unitary4 simulate_sequence(const PulseSequence& s, const HamiltonianParams& p) {
  Unitary4 u;
  for (const auto& step : s.steps) {
    if (const auto* idle = std::get_if<Idle>(&step)) {
      u = coupling_evolution(idle->seconds(p.j_coupling), p.j_coupling) * u;
    } else {
      const auto& col = std::get<RotationColumn>(step);
      const Unitary2 a = col.q1 ? col.q1->matrix() : Unitary2::identity();
      const Unitary2 b = col.q2 ? col.q2->matrix() : Unitary2::identity();
      u = kron(a, b) * u;
    }
  }
  return u;
}

StateVector4 apply(const Unitary4& u, const StateVector4& psi) {
  return StateVector4::normalized(u.matrix() * psi.amplitudes());
}

EquivalenceReport equivalence_report(const Unitary4& u, const Unitary4& v) {
  EquivalenceReport r;
  r.phase_distance = phase_distance(u, v);
  r.coord_delta = canonical_coordinates(u).max_abs_diff(canonical_coordinates(v));
  r.same_local_class = r.coord_delta <= kLocalClassTolerance;
  return r;
}

StickSpectrum predict_spectrum(const StateVector4& psi, const ReadoutConfig& c) {
  if (c.observed_qubit != 1 && c.observed_qubit != 2) {
    throw Error(ErrorCode::kInvalidArgument, "observed qubit must be 1 or 2");
  }
  const Unitary2 read = pauli_rotation(kPi / 2.0, kPi / 2.0);
  const Unitary4 pulse = c.observed_qubit == 2 ? kron(Unitary2::identity(), read)
                                               : kron(read, Unitary2::identity());
  const auto after = (pulse.matrix() * psi.amplitudes()).eval();

  StickSpectrum out;
  for (int partner = 0; partner < 2; ++partner) {
    // amplitudes of |partner, 0> and |partner, 1> on the observed qubit
    int i0 = 0;
    int i1 = 0;
    if (c.observed_qubit == 2) {
      i0 = 2 * partner;
      i1 = 2 * partner + 1;
    } else {
      i0 = partner;
      i1 = 2 + partner;
    }
    // <sigma_x> restricted to the partner subspace
    const double mx = 2.0 * (std::conj(after(i0)) * after(i1)).real();
    if (std::abs(mx) > 1e-12) {
      out.lines.push_back({c.line_ppm[static_cast<size_t>(partner)], mx});
    }
  }
  return out;
}

std::string serialize_spectrum(const StickSpectrum& s) {
  std::string out = "# ppm amplitude\n";
  char buf[64];
  for (const auto& line : s.lines) {
    std::snprintf(buf, sizeof buf, "%.2f %+.12f\n", line.ppm, line.amplitude);
    out += buf;
  }
  return out;
}

}  // namespace warpc
