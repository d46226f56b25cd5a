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

#include "warpc/su4.hpp"

#include <cmath>

namespace warpc {

namespace pauli {

Matrix2 identity() { return Matrix2::Identity(); }

Matrix2 x() {
  Matrix2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix2 y() {
  Matrix2 m;
  m << 0.0, -kI, kI, 0.0;
  return m;
}

Matrix2 z() {
  Matrix2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace pauli

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

Unitary4 kron(const Unitary2& a, const Unitary2& b) {
  return Unitary4::trusted(kron(a.matrix(), b.matrix()));
}

Unitary2 pauli_rotation(double phase_angle, double flip_angle) {
  const double c = std::cos(flip_angle / 2.0);
  const double s = std::sin(flip_angle / 2.0);
  // -i s (cos phi X + sin phi Y) has off-diagonals -i s e^{-i phi}, -i s e^{i phi}
  Matrix2 m;
  m << c, -kI * s * std::exp(-kI * phase_angle),
      -kI * s * std::exp(kI * phase_angle), c;
  return Unitary2::trusted(m);
}

Unitary4 coupling_evolution(double seconds, double j_hz) {
  if (seconds < 0.0) {
    throw Error(ErrorCode::kNegativeDuration,
                "coupling evolution needs a non-negative duration");
  }
  if (!(j_hz > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "J coupling must be positive");
  }
  const double quarter = 2.0 * kPi * j_hz * seconds / 4.0;
  Matrix4 m = Matrix4::Zero();
  for (int k = 0; k < 4; ++k) {
    const int parity = ((k >> 1) ^ k) & 1;
    const double sign = parity ? -1.0 : 1.0;
    m(k, k) = std::exp(-kI * quarter * sign);
  }
  return Unitary4::trusted(m);
}

SpecialUnitary4 project_su4(const Unitary4& u, double tol) {
  const double residual = u.unitarity_residual();
  if (!(residual <= tol)) {
    throw Error(ErrorCode::kNotUnitary,
                "cannot project a non-unitary matrix (residual " +
                    std::to_string(residual) + ")");
  }
  const double phase = std::arg(u.determinant()) / 4.0;
  return SpecialUnitary4{u.with_phase(-phase), phase};
}

}  // namespace warpc
