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

#include <doctest.h>

#include "oracle.hpp"
#include "warpc/grover.hpp"
#include "warpc/kak.hpp"

using namespace warpc;

namespace {

// The defining product, assembled from a rounded Hadamard.
Matrix4 defining_product(int i, int j) {
  Matrix2 h;
  h << 1.0, 1.0, 1.0, -1.0;
  h /= std::sqrt(2.0);
  const Matrix4 hh = kron(h, h);
  const Eigen::Vector4cd s = Eigen::Vector4cd::Constant(0.5);
  Eigen::Vector4cd t = Eigen::Vector4cd::Zero();
  t(2 * i + j) = 1.0;
  const Matrix4 diffusion = 2.0 * s * s.adjoint() - Matrix4::Identity();
  const Matrix4 oracle_flip = Matrix4::Identity() - 2.0 * t * t.adjoint();
  return -oracle::naive_product(oracle::naive_product(diffusion, oracle_flip), hh);
}

}  // namespace

TEST_SUITE("grover") {

TEST_CASE("U10 matches the printed matrix entrywise") {
  Matrix4 printed;
  printed << 0, 1, 0, 0,
             0, 0, 0, -1,
             -1, 0, 0, 0,
             0, 0, -1, 0;
  const Matrix4 u = grover_gate(TargetFile::of(1, 0)).matrix();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) CHECK(u(r, c) == printed(r, c));
  }
}

TEST_CASE("a single step reaches the target file") {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Matrix4 u = grover_gate(TargetFile::of(i, j)).matrix();
      CHECK((u - defining_product(i, j)).cwiseAbs().maxCoeff() < 1e-15);
      const Eigen::Vector4cd out = defining_product(i, j).col(0);
      CHECK(std::abs(std::abs(out(2 * i + j)) - 1.0) < 1e-15);
      CHECK(std::abs(std::abs(u(2 * i + j, 0)) - 1.0) == 0.0);
    }
  }
}

TEST_CASE("U10 has determinant one") {
  const Matrix4 u = grover_gate(TargetFile::of(1, 0)).matrix();
  CHECK(std::abs(oracle::cofactor_determinant(u) - 1.0) < 1e-15);
}

TEST_CASE("target labels and validation") {
  CHECK(TargetFile::of(0, 1).label() == "01");
  CHECK(TargetFile::of(1, 1).index() == 3);
  try {
    TargetFile::of(2, 0);
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidArgument);
  }
}

TEST_CASE("property: every U_ij is a real signed permutation") {
  for (int k = 0; k < 4; ++k) {
    const Unitary4 g = grover_gate(TargetFile::of(k / 2, k % 2));
    CHECK(g.unitarity_residual() == 0.0);
    const Matrix4& m = g.matrix();
    CHECK(m.imag().cwiseAbs().maxCoeff() == 0.0);
    for (int r = 0; r < 4; ++r) {
      int nonzero = 0;
      for (int c = 0; c < 4; ++c) {
        const double v = m(r, c).real();
        CHECK((v == 0.0 || v == 1.0 || v == -1.0));
        nonzero += v != 0.0;
      }
      CHECK(nonzero == 1);
    }
  }
}

TEST_CASE("property: all four targets share canonical coordinates") {
  const CartanCoordinates ref = canonical_coordinates(grover_gate(TargetFile::of(1, 0)));
  for (int k = 0; k < 4; ++k) {
    const CartanCoordinates c = canonical_coordinates(grover_gate(TargetFile::of(k / 2, k % 2)));
    CHECK(c.max_abs_diff(ref) < 1e-9);
  }
}

}  // TEST_SUITE
