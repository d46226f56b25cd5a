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
#include "random_gates.hpp"
#include "warpc/grover.hpp"

// Sanity checks of the brute-force reference itself, on gates whose
// coupling cost is known in closed form. The frozen values here are the
// ones later compared against the implementation.

using namespace warpc;

namespace {

Matrix4 permutation(std::array<int, 4> map) {
  Matrix4 m = Matrix4::Zero();
  for (int k = 0; k < 4; ++k) m(map[static_cast<size_t>(k)], k) = 1.0;
  return m;
}

Matrix4 zz_exponential(double alpha) {
  Matrix4 m = Matrix4::Zero();
  m.diagonal() << std::exp(kI * alpha / 4.0), std::exp(-kI * alpha / 4.0),
      std::exp(-kI * alpha / 4.0), std::exp(kI * alpha / 4.0);
  return m;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("Bell columns match the printed change of basis") {
  Matrix4 q;
  q << 1.0, 0.0, 0.0, kI, 0.0, kI, 1.0, 0.0, 0.0, kI, -1.0, 0.0, 1.0, 0.0, 0.0, -kI;
  q /= std::sqrt(2.0);
  CHECK((oracle::bell_columns() - q).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("cofactor determinant") {
  CHECK(std::abs(oracle::cofactor_determinant(Matrix4::Identity()) - 1.0) < 1e-15);
  CHECK(std::abs(oracle::cofactor_determinant(permutation({0, 2, 1, 3})) + 1.0) < 1e-15);
  CHECK(std::abs(oracle::cofactor_determinant(
                     grover_gate(TargetFile::of(1, 0)).matrix()) - 1.0) < 1e-15);
}

TEST_CASE("brute-force coupling cost of reference gates") {
  // frozen from the enumeration
  CHECK(oracle::coupling_j_units(Matrix4::Identity()) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(oracle::coupling_j_units(permutation({0, 1, 3, 2})) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(oracle::coupling_j_units(permutation({0, 2, 1, 3})) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(oracle::coupling_j_units(zz_exponential(kPi)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(oracle::coupling_j_units(grover_gate(TargetFile::of(1, 0)).matrix()) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("magic half-phases of reference gates") {
  const auto u10 = oracle::magic_half_phases(grover_gate(TargetFile::of(1, 0)).matrix());
  const std::array<double, 4> u10_expected{kPi / 2.0, 0.0, 0.0, -kPi / 2.0};
  const auto zz = oracle::magic_half_phases(zz_exponential(kPi));
  const std::array<double, 4> zz_expected{kPi / 4.0, kPi / 4.0, -kPi / 4.0, -kPi / 4.0};
  for (size_t k = 0; k < 4; ++k) {
    CHECK(std::abs(u10[k] - u10_expected[k]) < 1e-12);
    CHECK(std::abs(zz[k] - zz_expected[k]) < 1e-12);
  }
}

TEST_CASE("brute-force cost is invariant under local dressing") {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 20; ++k) {
    const Unitary4 u = testing::random_unitary4(rng);
    const Unitary4 dressed = testing::random_local(rng) * u * testing::random_local(rng);
    CHECK(oracle::coupling_j_units(u.matrix()) ==
          doctest::Approx(oracle::coupling_j_units(dressed.matrix())).epsilon(1e-9));
  }
}

}  // TEST_SUITE
