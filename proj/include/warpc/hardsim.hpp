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

#pragma once

// Hard-pulse simulation of pulse programs and ideal readout spectra.

#include <array>
#include <string>
#include <vector>

#include "warpc/pulse.hpp"

namespace warpc {

class StateVector4 {
 public:
  using Vector = Eigen::Vector4cd;

  StateVector4() : v_(Vector::Unit(0)) {}

  static StateVector4 basis(BasisLabel label);
  /// Throws ErrorCode::kInvalidArgument for a zero or non-finite vector.
  static StateVector4 normalized(const Vector& v);

  const Vector& amplitudes() const { return v_; }
  Complex operator[](int k) const { return v_(k); }

  /// Basis ket with the largest probability (lowest index on ties).
  BasisLabel dominant() const;

 private:
  explicit StateVector4(const Vector& v) : v_(v) {}
  Vector v_;
};

struct ReadoutConfig {
  int observed_qubit = 2;
  // line position (ppm) indexed by the partner qubit's state
  std::array<double, 2> line_ppm{79.20, 77.49};
};

struct SpectrumLine {
  double ppm = 0.0;
  double amplitude = 0.0;
};

struct StickSpectrum {
  std::vector<SpectrumLine> lines;
};

/// Ordered product of step propagators; the first step acts first.
Unitary4 simulate_sequence(const PulseSequence& s, const HamiltonianParams& p);

/// Normalized u |psi>.
StateVector4 apply(const Unitary4& u, const StateVector4& psi);

struct EquivalenceReport {
  double phase_distance = 0.0;
  bool same_local_class = false;
  double coord_delta = 0.0;  // max componentwise canonical-coordinate gap
};

inline constexpr double kLocalClassTolerance = 1e-8;

EquivalenceReport equivalence_report(const Unitary4& u, const Unitary4& v);

/// pi/2 read pulse about y on the observed qubit, then the observed qubit's
/// transverse (x) magnetization resolved by the partner qubit's state. Lines
/// with vanishing amplitude are omitted.
StickSpectrum predict_spectrum(const StateVector4& psi, const ReadoutConfig& c = {});

/// "ppm amplitude" per line after a one-line header.
std::string serialize_spectrum(const StickSpectrum& s);

}  // namespace warpc
