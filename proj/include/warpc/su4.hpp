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

// Dense 2x2 / 4x4 unitary algebra for two-qubit gates.
//
// Basis order is |00>, |01>, |10>, |11> with qubit 1 as the left tensor
// factor throughout the library.

#include <Eigen/Dense>

#include <complex>
#include <numbers>
#include <string>

#include "warpc/error.hpp"

namespace warpc {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Structural checks (unitarity, determinants, factorizations).
inline constexpr double kUnitaryTolerance = 1e-10;
/// End-to-end gate equivalence.
inline constexpr double kEquivalenceTolerance = 1e-9;

/// A square complex matrix that is known (or trusted) to be unitary.
template <int N>
class Unitary {
 public:
  using Matrix = Eigen::Matrix<Complex, N, N>;

  Unitary() : m_(Matrix::Identity()) {}

  /// Throws ErrorCode::kNotUnitary when ||U^dag U - I||_F exceeds `tol`.
  static Unitary checked(const Matrix& m, double tol = kUnitaryTolerance) {
    Unitary u(m);
    const double r = u.unitarity_residual();
    if (!(r <= tol)) {
      throw Error(ErrorCode::kNotUnitary,
                  "matrix is not unitary (residual " + std::to_string(r) + ")");
    }
    return u;
  }

  /// Wraps a matrix produced by an operation that preserves unitarity.
  static Unitary trusted(const Matrix& m) { return Unitary(m); }

  static Unitary identity() { return Unitary(); }

  const Matrix& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

  Unitary adjoint() const { return Unitary(m_.adjoint()); }
  Unitary operator*(const Unitary& rhs) const { return Unitary(m_ * rhs.m_); }

  /// e^{i phase} U
  Unitary with_phase(double phase) const {
    return Unitary(std::exp(kI * phase) * m_);
  }

  Complex determinant() const { return m_.determinant(); }

  double unitarity_residual() const {
    return (m_.adjoint() * m_ - Matrix::Identity()).norm();
  }

 private:
  explicit Unitary(const Matrix& m) : m_(m) {}
  Matrix m_;
};

using Unitary2 = Unitary<2>;
using Unitary4 = Unitary<4>;

namespace pauli {
Matrix2 identity();
Matrix2 x();
Matrix2 y();
Matrix2 z();
}  // namespace pauli

Matrix4 kron(const Matrix2& a, const Matrix2& b);
Unitary4 kron(const Unitary2& a, const Unitary2& b);

/// exp(-i (theta/2) (cos(phi) sigma_x + sin(phi) sigma_y)): an in-plane
/// rotation by `flip_angle` about the axis at `phase_angle` from x.
Unitary2 pauli_rotation(double phase_angle, double flip_angle);

/// Free evolution exp(-i 2 pi J tau sigma_z (x) sigma_z / 4) for tau seconds.
Unitary4 coupling_evolution(double seconds, double j_hz);

/// A determinant-one representative together with the phase that was removed.
struct SpecialUnitary4 {
  Unitary4 matrix;
  double extracted_phase = 0.0;

  /// e^{i extracted_phase} * matrix, i.e. the matrix that was projected.
  Unitary4 original() const { return matrix.with_phase(extracted_phase); }
};

/// Divides out the principal fourth root of det(u); the removed phase lies
/// in (-pi/4, pi/4].
SpecialUnitary4 project_su4(const Unitary4& u,
                            double tol = kUnitaryTolerance);

/// min over phi of ||u - e^{i phi} v||_F. For unitaries this equals
/// sqrt(2N - 2|tr(u^dag v)|); it is evaluated at the optimal phase
/// arg tr(v^dag u) instead, which keeps full precision near zero.
template <int N>
double phase_distance(const Unitary<N>& u, const Unitary<N>& v) {
  const Complex overlap = (v.matrix().adjoint() * u.matrix()).trace();
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0};
  return (u.matrix() - phase * v.matrix()).norm();
}

}  // namespace warpc
