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

#include "warpc/kak.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace warpc {

namespace {

// Eigenvalue gap below which two eigenvalues of A + lambda B are treated as
// a possible collision.
constexpr double kCollisionGap = 1e-7;

Matrix4 build_magic_basis() {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix4 q;
  q << 1.0, 0.0, 0.0, kI,
       0.0, kI, 1.0, 0.0,
       0.0, kI, -1.0, 0.0,
       1.0, 0.0, 0.0, -kI;
  return r * q;
}

bool diagonalizes(const Eigen::Matrix4d& v, const Eigen::Matrix4d& a,
                  const Eigen::Matrix4d& b, double tol) {
  Eigen::Matrix4d da = v.transpose() * a * v;
  Eigen::Matrix4d db = v.transpose() * b * v;
  da.diagonal().setZero();
  db.diagonal().setZero();
  return da.cwiseAbs().maxCoeff() <= tol && db.cwiseAbs().maxCoeff() <= tol;
}

bool has_collision(const Eigen::Vector4d& sorted_values) {
  for (int k = 0; k + 1 < 4; ++k) {
    if (sorted_values(k + 1) - sorted_values(k) < kCollisionGap) return true;
  }
  return false;
}

// Diagonalize `a`, then resolve every degenerate cluster of `a` with `b`.
Eigen::Matrix4d two_stage_diagonalize(const Eigen::Matrix4d& a,
                                      const Eigen::Matrix4d& b) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(a);
  Eigen::Matrix4d v = es.eigenvectors();
  const Eigen::Vector4d w = es.eigenvalues();
  int start = 0;
  while (start < 4) {
    int end = start + 1;
    while (end < 4 && w(end) - w(end - 1) < kCollisionGap) ++end;
    const int n = end - start;
    if (n > 1) {
      const Eigen::MatrixXd block = v.middleCols(start, n);
      const Eigen::MatrixXd sub = block.transpose() * b * block;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> inner(sub);
      v.middleCols(start, n) = block * inner.eigenvectors();
    }
    start = end;
  }
  return v;
}

struct MagicFrame {
  Eigen::Matrix4d o1;  // rows are eigenvectors of U_B^T U_B
  std::array<double, 4> theta{};
};

MagicFrame magic_frame(const Matrix4& ub) {
  const Matrix4 m = ub.transpose() * ub;
  Eigen::Matrix4d a = m.real();
  Eigen::Matrix4d b = m.imag();
  a = 0.5 * (a + a.transpose()).eval();
  b = 0.5 * (b + b.transpose()).eval();
  const Eigen::Matrix4d v = simultaneous_diagonalize(a, b);

  std::array<double, 4> half{};
  for (int k = 0; k < 4; ++k) {
    const Eigen::Vector4cd col = v.col(k).cast<Complex>();
    const Complex mu = col.transpose() * m * col;
    half[k] = std::arg(mu) / 2.0;
  }

  std::array<int, 4> order{0, 1, 2, 3};
  auto sort_desc = [&] {
    std::stable_sort(order.begin(), order.end(),
                     [&](int l, int r) { return half[l] > half[r]; });
  };
  sort_desc();

  // Half-phases are only defined mod pi; pick the zero-sum representative
  // by moving the extreme entries.
  const double total = std::accumulate(half.begin(), half.end(), 0.0);
  const long turns = std::lround(total / kPi);
  for (long t = 0; t < std::abs(turns); ++t) {
    if (turns > 0) {
      half[order[static_cast<size_t>(t)]] -= kPi;
    } else {
      half[order[static_cast<size_t>(3 - t)]] += kPi;
    }
  }
  sort_desc();

  MagicFrame frame;
  for (int k = 0; k < 4; ++k) {
    frame.o1.row(k) = v.col(order[static_cast<size_t>(k)]).transpose();
    frame.theta[static_cast<size_t>(k)] = half[order[static_cast<size_t>(k)]];
  }
  frame.theta[3] = -(frame.theta[0] + frame.theta[1] + frame.theta[2]);
  if (frame.o1.determinant() < 0.0) frame.o1.row(3) *= -1.0;
  return frame;
}

// Tracks h(raw) = e^{i phase} (la (x) lb) h(cur) (ra (x) rb) during reduction.
class WeylTracker {
 public:
  explicit WeylTracker(const CartanCoordinates& raw)
      : cur_{raw.x, raw.y, raw.z} {}

  double& operator[](int axis) { return cur_[static_cast<size_t>(axis)]; }

  // cur_j -> cur_j - 2 pi turns
  void shift(int axis, long turns) {
    if (turns == 0) return;
    cur_[static_cast<size_t>(axis)] -= 2.0 * kPi * static_cast<double>(turns);
    phase_ += static_cast<double>(turns) * kPi / 2.0;
    if (turns % 2 != 0) {
      const Matrix2 s = -kI * pauli_matrix(axis);
      la_ = la_ * s;
      lb_ = lb_ * s;
      phase_ += kPi;
    }
  }

  // negates the two coordinates other than `keep`
  void flip(int keep) {
    for (int j = 0; j < 3; ++j) {
      if (j != keep) cur_[static_cast<size_t>(j)] *= -1.0;
    }
    const Matrix2 s = -kI * pauli_matrix(keep);
    la_ = la_ * s;
    ra_ = s * ra_;
    phase_ += kPi;
  }

  void swap(int j, int l) {
    std::swap(cur_[static_cast<size_t>(j)], cur_[static_cast<size_t>(l)]);
    const int k = 3 - j - l;
    const double c = std::cos(kPi / 4.0);
    const Matrix2 r = c * Matrix2::Identity() - kI * c * pauli_matrix(k);
    const Matrix2 rd = r.adjoint();
    la_ = la_ * rd;
    lb_ = lb_ * rd;
    ra_ = r * ra_;
    rb_ = r * rb_;
  }

  WeylReduction result() const {
    WeylReduction out;
    out.coords = {cur_[0], cur_[1], cur_[2]};
    out.left = {Unitary2::trusted(la_), Unitary2::trusted(lb_), 0.0};
    out.right = {Unitary2::trusted(ra_), Unitary2::trusted(rb_), 0.0};
    out.phase = std::remainder(phase_, 2.0 * kPi);
    return out;
  }

 private:
  static Matrix2 pauli_matrix(int axis) {
    switch (axis) {
      case 0:
        return pauli::x();
      case 1:
        return pauli::y();
      default:
        return pauli::z();
    }
  }

  std::array<double, 3> cur_;
  Matrix2 la_ = Matrix2::Identity();
  Matrix2 lb_ = Matrix2::Identity();
  Matrix2 ra_ = Matrix2::Identity();
  Matrix2 rb_ = Matrix2::Identity();
  double phase_ = 0.0;
};

}  // namespace

const Unitary4& magic_basis() {
  static const Unitary4 q = Unitary4::trusted(build_magic_basis());
  return q;
}

Unitary4 to_magic(const Unitary4& u) {
  const Unitary4& q = magic_basis();
  return q.adjoint() * u * q;
}

Unitary4 from_magic(const Unitary4& m) {
  const Unitary4& q = magic_basis();
  return q * m * q.adjoint();
}

double CartanCoordinates::l1_norm() const {
  return std::abs(x) + std::abs(y) + std::abs(z);
}

bool CartanCoordinates::is_canonical(double tol) const {
  return x <= kPi + tol && y >= -tol && x >= y - tol && y >= std::abs(z) - tol &&
         z > -kPi - tol;
}

double CartanCoordinates::max_abs_diff(const CartanCoordinates& o) const {
  return std::max({std::abs(x - o.x), std::abs(y - o.y), std::abs(z - o.z)});
}

std::array<double, 4> cartan_phases(const CartanCoordinates& c) {
  // Bell-state eigenvalues of XX, YY, ZZ are (1,1,-1,-1), (-1,1,-1,1),
  // (1,-1,-1,1) in magic-basis order.
  return {(c.x - c.y + c.z) / 4.0, (c.x + c.y - c.z) / 4.0,
          (-c.x - c.y - c.z) / 4.0, (-c.x + c.y + c.z) / 4.0};
}

Unitary4 cartan_element(const CartanCoordinates& c) {
  const auto theta = cartan_phases(c);
  Matrix4 d = Matrix4::Zero();
  for (int k = 0; k < 4; ++k) d(k, k) = std::exp(kI * theta[static_cast<size_t>(k)]);
  return from_magic(Unitary4::trusted(d));
}

Unitary4 KakDecomposition::reassemble() const {
  return (k2.matrix() * cartan_element(coords) * k1.matrix())
      .with_phase(global_phase);
}

Eigen::Matrix4d simultaneous_diagonalize(const Eigen::Matrix4d& a,
                                         const Eigen::Matrix4d& b) {
  const double scale = std::max({a.norm(), b.norm(), 1.0});
  const double tol = 1e-9 * scale;
  std::mt19937_64 rng(0x6b616bULL);
  std::uniform_real_distribution<double> pick(0.5, 2.0);
  for (int attempt = 0; attempt < 4; ++attempt) {
    const double lambda = pick(rng);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(a + lambda * b);
    const Eigen::Matrix4d v = es.eigenvectors();
    if (!has_collision(es.eigenvalues()) || diagonalizes(v, a, b, tol)) {
      return v;
    }
  }
  return two_stage_diagonalize(a, b);
}

MagicSpectrum magic_spectrum(const SpecialUnitary4& u) {
  return MagicSpectrum{magic_frame(to_magic(u.matrix).matrix()).theta};
}

CartanCoordinates theta_to_alpha(const MagicSpectrum& s) {
  const auto& t = s.theta;
  return {2.0 * (t[0] + t[1]), 2.0 * (t[1] + t[3]), 2.0 * (t[0] + t[3])};
}

WeylReduction weyl_canonicalize(const CartanCoordinates& raw) {
  WeylTracker w(raw);

  // each coordinate into (-pi, pi]
  for (int j = 0; j < 3; ++j) {
    long turns = std::lround(w[j] / (2.0 * kPi));
    const double r = w[j] - 2.0 * kPi * static_cast<double>(turns);
    if (r <= -kPi) --turns;
    if (r > kPi) ++turns;
    w.shift(j, turns);
  }

  // descending magnitude
  const std::array<std::array<int, 2>, 3> passes{{{0, 1}, {1, 2}, {0, 1}}};
  for (const auto& [j, l] : passes) {
    if (std::abs(w[j]) < std::abs(w[l])) w.swap(j, l);
  }

  if (w[0] < 0.0) w.flip(1);
  if (w[1] < 0.0) w.flip(0);

  // An odd number of negative signs can still be cleared when a coordinate
  // sits on the pi boundary, since pi and -pi are 2 pi apart.
  if (w[2] < 0.0) {
    constexpr double kBoundary = 1e-9;
    if (w[0] >= kPi - kBoundary) {
      w.flip(1);
      w.shift(0, -1);
    } else if (w[1] >= kPi - kBoundary) {
      w.flip(0);
      w.shift(1, -1);
    }
  }
  return w.result();
}

LocalGatePair kron_factorize(const Unitary4& k, double tol) {
  const Matrix4& m = k.matrix();
  int bi = 0;
  int bj = 0;
  double best = -1.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double n = m.block<2, 2>(2 * i, 2 * j).norm();
      if (n > best) {
        best = n;
        bi = i;
        bj = j;
      }
    }
  }
  if (!(best > 0.0)) throw Error(ErrorCode::kNotLocal, "zero matrix is not local");

  Matrix2 b = m.block<2, 2>(2 * bi, 2 * bj) / best;
  Matrix2 a;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      a(i, j) = (b.adjoint() * m.block<2, 2>(2 * i, 2 * j)).trace();
    }
  }
  const Complex da = a.determinant();
  const Complex db = b.determinant();
  if (std::abs(da) < 1e-6 || std::abs(db) < 1e-6) {
    throw Error(ErrorCode::kNotLocal, "matrix has no tensor-product structure");
  }
  a /= std::sqrt(da);
  b /= std::sqrt(db);

  const Matrix4 ab = kron(a, b);
  const Complex overlap = (ab.adjoint() * m).trace() / 4.0;
  LocalGatePair pair{Unitary2::trusted(a), Unitary2::trusted(b), std::arg(overlap)};
  const double residual = phase_distance(pair.matrix(), k);
  if (!(residual <= tol)) {
    throw Error(ErrorCode::kNotLocal, "matrix is not a local gate (residual " +
                                          std::to_string(residual) + ")");
  }
  return pair;
}

KakDecomposition cartan_decompose(const SpecialUnitary4& u) {
  const double det_err = std::abs(u.matrix.determinant() - 1.0);
  if (!(det_err <= kUnitaryTolerance) ||
      !(u.matrix.unitarity_residual() <= kUnitaryTolerance)) {
    throw Error(ErrorCode::kNotSpecialUnitary,
                "cartan_decompose requires a special unitary input");
  }
  const Matrix4 ub = to_magic(u.matrix).matrix();
  const MagicFrame frame = magic_frame(ub);

  Eigen::Vector4cd inv_phases;
  for (int k = 0; k < 4; ++k) {
    inv_phases(k) = std::exp(-kI * frame.theta[static_cast<size_t>(k)]);
  }
  const Matrix4 o2c = ub * frame.o1.transpose().cast<Complex>() * inv_phases.asDiagonal();
  // o2c is real orthogonal up to rounding; snap it to the nearest rotation.
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(o2c.real(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix4d o2 = svd.matrixU() * svd.matrixV().transpose();

  const Unitary4 k1 = from_magic(Unitary4::trusted(frame.o1.cast<Complex>()));
  const Unitary4 k2 = from_magic(Unitary4::trusted(o2.cast<Complex>()));

  const CartanCoordinates raw = theta_to_alpha(MagicSpectrum{frame.theta});
  const WeylReduction weyl = weyl_canonicalize(raw);

  LocalGatePair f2 = kron_factorize(k2 * weyl.left.matrix());
  LocalGatePair f1 = kron_factorize(weyl.right.matrix() * k1);

  KakDecomposition out;
  out.coords = weyl.coords;
  out.global_phase =
      std::remainder(weyl.phase + f1.phase + f2.phase + u.extracted_phase, 2.0 * kPi);
  f1.phase = 0.0;
  f2.phase = 0.0;
  out.k1 = f1;
  out.k2 = f2;
  return out;
}

KakDecomposition cartan_decompose(const Unitary4& u) {
  return cartan_decompose(project_su4(u));
}

CartanCoordinates canonical_coordinates(const Unitary4& u) {
  return cartan_decompose(u).coords;
}

}  // namespace warpc
