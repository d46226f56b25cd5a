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

// Random gate generators for property tests.

#include <Eigen/QR>

#include <random>

#include "warpc/kak.hpp"

namespace warpc::testing {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Product of three random in-plane rotations; covers SU(2).
inline Unitary2 random_su2(std::mt19937_64& rng) {
  Unitary2 u;
  for (int k = 0; k < 3; ++k) {
    u = pauli_rotation(uniform(rng, 0.0, 2.0 * kPi), uniform(rng, -kPi, kPi)) * u;
  }
  return u;
}

inline Unitary4 random_local(std::mt19937_64& rng) {
  return kron(random_su2(rng), random_su2(rng));
}

/// Random local gates sandwiching three random coupling evolutions, times a
/// random global phase.
inline Unitary4 random_unitary4(std::mt19937_64& rng) {
  const double j = 215.5;
  Unitary4 u = random_local(rng);
  for (int layer = 0; layer < 3; ++layer) {
    u = random_local(rng) * coupling_evolution(uniform(rng, 0.0, 4.0 / j), j) * u;
  }
  return u.with_phase(uniform(rng, -kPi, kPi));
}

/// Haar-distributed unitary from the QR factorization of a Ginibre matrix.
inline Unitary4 haar_unitary4(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix4 z;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) z(r, c) = Complex(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Matrix4> qr(z);
  Matrix4 q = qr.householderQ();
  const Matrix4 rr = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < 4; ++k) q.col(k) *= rr(k, k) / std::abs(rr(k, k));
  return Unitary4::trusted(q);
}

inline CartanCoordinates random_chamber_point(std::mt19937_64& rng) {
  const double x = uniform(rng, 0.0, kPi);
  const double y = uniform(rng, 0.0, x);
  const double z = uniform(rng, -y, y);
  return {x, y, z};
}

}  // namespace warpc::testing
