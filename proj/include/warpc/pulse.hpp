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

// Compilation of Cartan decompositions into hard-pulse NMR programs.
//
// The control alphabet is in-plane rf rotations on either nucleus (treated
// as instantaneous) and free evolution under the J coupling. Qubit 1 is the
// left tensor factor.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "warpc/kak.hpp"
#include "warpc/warpdrive.hpp"

namespace warpc {

struct HamiltonianParams {
  double j_coupling = 215.5;  // Hz, 13C-labelled chloroform
  // rf amplitudes in rad/s; metadata only in the hard-pulse limit
  double rf_amplitude_1 = 2.0 * kPi * 25e3;
  double rf_amplitude_2 = 2.0 * kPi * 25e3;

  static HamiltonianParams with_j(double j_hz);
};

/// Rotation by `flip_angle` about (cos phase_angle, sin phase_angle, 0).
struct Rotation {
  int qubit = 1;  // 1 or 2
  double phase_angle = 0.0;
  double flip_angle = 0.0;

  Unitary2 matrix() const { return pauli_rotation(phase_angle, flip_angle); }
  Unitary4 embedded() const;
};

/// Free evolution for j_units / J seconds.
struct Idle {
  double j_units = 0.0;

  double seconds(double j_hz) const { return j_units / j_hz; }
};

using Pulse = std::variant<Rotation, Idle>;

/// Simultaneous rotations, at most one per qubit.
struct RotationColumn {
  std::optional<Rotation> q1;
  std::optional<Rotation> q2;
};

using Step = std::variant<Idle, RotationColumn>;

struct SequenceTotals {
  Duration coupling_time;
  int pulse_count = 0;
};

struct PulseSequence {
  double j_hz = 215.5;
  std::vector<Step> steps;
  std::string target_description;

  SequenceTotals totals() const;
  /// Time-ordered pulses; within a column qubit 1 precedes qubit 2.
  std::vector<Pulse> pulses() const;
  int idle_count() const;

  /// Packs time-ordered pulses into steps without reordering same-qubit
  /// rotations. Throws ErrorCode::kInvalidArgument on a non-positive idle.
  static PulseSequence from_pulses(const std::vector<Pulse>& pulses, double j_hz,
                                   std::string description = {});
};

/// x-y-x Euler synthesis, u ~ Rx(a) Ry(b) Rx(c) up to global phase. The
/// result is in application order (first element acts first); angles that
/// vanish mod 2 pi are dropped.
std::vector<Rotation> euler_xyx(const Unitary2& u, int qubit = 1);

/// Shortest of: nothing, one in-plane rotation, or euler_xyx.
std::vector<Rotation> synthesize_local(const Unitary2& u, int qubit);

enum class CouplingAxis { kX, kY, kZ };

/// Fragment realizing exp(i alpha/4 sigma_axis (x) sigma_axis) up to global
/// phase with exactly |alpha|/(2 pi J) of free evolution. Positive exponents
/// are reached by refocusing the idle with pi pulses on qubit 1. Throws
/// ErrorCode::kOutOfRangeAlpha unless 0 < |alpha| <= pi.
PulseSequence conjugate_coupling(CouplingAxis axis, double alpha, double j_hz);

/// Merges and resynthesizes rotations between idles, drops identities and
/// re-packs columns. Never changes the simulated unitary beyond 1e-10.
PulseSequence peephole(const PulseSequence& s);

/// k1 pulses, then the x, y, z coupling fragments, then k2 pulses,
/// followed by peephole().
PulseSequence compile(const KakDecomposition& d, const HamiltonianParams& p,
                      std::string description = {});

/// Two-row table in the style of hand-written NMR pulse listings.
std::string emit_table(const PulseSequence& s);

inline constexpr int kProgramFormatVersion = 1;

/// Versioned line-oriented program document; deterministic and round-trip
/// exact (shortest decimal representation of every double).
std::string serialize_program(const PulseSequence& s);

/// Throws ErrorCode::kParse with a line number on malformed input.
PulseSequence parse_program(std::string_view text);

}  // namespace warpc
