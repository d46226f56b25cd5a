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

// Cartan (KAK) decomposition of two-qubit gates through the magic basis.
//
// Every U in SU(4) factors as U = k2 * h(alpha) * k1 with k1, k2 local
// (SU(2) x SU(2)) and h(alpha) = exp(i sum_j alpha_j/4 sigma_j (x) sigma_j).

#include <array>

#include "warpc/su4.hpp"

namespace warpc {

/// The constant change of basis Q whose columns are the Bell states
/// (|00>+|11>)/sqrt2, i(|01>+|10>)/sqrt2, (|01>-|10>)/sqrt2, i(|00>-|11>)/sqrt2.
const Unitary4& magic_basis();

/// Q^dag u Q
Unitary4 to_magic(const Unitary4& u);
/// Q m Q^dag
Unitary4 from_magic(const Unitary4& m);

struct CartanCoordinates {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  std::array<double, 3> as_array() const { return {x, y, z}; }
  double l1_norm() const;

  /// x, y in [0, pi]; z in (-pi, pi]; x >= y >= |z|; all within `tol`.
  bool is_canonical(double tol = kEquivalenceTolerance) const;

  /// Largest componentwise absolute difference.
  double max_abs_diff(const CartanCoordinates& other) const;
};

/// exp(i sum_j alpha_j/4 sigma_j (x) sigma_j), built in closed form as a
/// diagonal phase matrix in the magic basis.
Unitary4 cartan_element(const CartanCoordinates& c);

/// Magic-basis diagonal of cartan_element(c): the phases theta_k.
std::array<double, 4> cartan_phases(const CartanCoordinates& c);

/// Half-phases of the eigenvalues of U_B^T U_B, sorted descending and
/// branch-corrected to sum to exactly zero.
struct MagicSpectrum {
  std::array<double, 4> theta{};
};

/// A local gate e^{i phase} (a (x) b) with a, b in SU(2).
struct LocalGatePair {
  Unitary2 a;
  Unitary2 b;
  double phase = 0.0;

  Unitary4 matrix() const { return kron(a, b).with_phase(phase); }
};

/// Result of weyl_canonicalize: h(raw) = e^{i phase} * left * h(coords) * right.
struct WeylReduction {
  CartanCoordinates coords;
  LocalGatePair left;
  LocalGatePair right;
  double phase = 0.0;
};

struct KakDecomposition {
  LocalGatePair k1;
  CartanCoordinates coords;
  LocalGatePair k2;
  double global_phase = 0.0;

  /// e^{i global_phase} k2 * h(coords) * k1
  Unitary4 reassemble() const;
};

/// Columns of the returned real orthogonal matrix are common eigenvectors of
/// the commuting real symmetric matrices `a` and `b`.
Eigen::Matrix4d simultaneous_diagonalize(const Eigen::Matrix4d& a,
                                         const Eigen::Matrix4d& b);

MagicSpectrum magic_spectrum(const SpecialUnitary4& u);

/// alpha_x = 2(t0+t1), alpha_y = 2(t1+t3), alpha_z = 2(t0+t3).
CartanCoordinates theta_to_alpha(const MagicSpectrum& s);

/// Reduces raw coordinates to the canonical chamber, minimizing
/// |alpha_x| + |alpha_y| + |alpha_z| over the local-equivalence orbit.
WeylReduction weyl_canonicalize(const CartanCoordinates& raw);

inline constexpr double kLocalTolerance = 1e-8;

/// Splits k = e^{i phase} (a (x) b). Throws ErrorCode::kNotLocal when the
/// best product is farther than `tol` (phase distance) from k.
LocalGatePair kron_factorize(const Unitary4& k, double tol = kLocalTolerance);

/// Throws ErrorCode::kNotSpecialUnitary when |det - 1| exceeds the unit
/// tolerance. The reassembled decomposition reproduces u.original().
KakDecomposition cartan_decompose(const SpecialUnitary4& u);

/// Projects onto SU(4) first; reassembles to `u` itself.
KakDecomposition cartan_decompose(const Unitary4& u);

/// Canonical coordinates only.
CartanCoordinates canonical_coordinates(const Unitary4& u);

}  // namespace warpc
