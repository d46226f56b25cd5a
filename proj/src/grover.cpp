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

#include "warpc/grover.hpp"

namespace warpc {

TargetFile TargetFile::of(int i, int j) {
  if ((i != 0 && i != 1) || (j != 0 && j != 1)) {
    throw Error(ErrorCode::kInvalidArgument, "target bits must be 0 or 1");
  }
  return TargetFile{i, j};
}

std::string TargetFile::label() const {
  return std::string{static_cast<char>('0' + i), static_cast<char>('0' + j)};
}

Unitary4 grover_gate(const TargetFile& target) {
  // H (x) H written out as the +-1/2 Walsh matrix keeps every entry dyadic.
  Eigen::Matrix4d hh;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      hh(r, c) = (__builtin_popcount(static_cast<unsigned>(r & c)) % 2) ? -0.5 : 0.5;
    }
  }
  Eigen::Matrix4d oracle = Eigen::Matrix4d::Identity();
  oracle(target.index(), target.index()) = -1.0;
  // 2|s><s| - I with |s> the uniform superposition
  const Eigen::Matrix4d diffusion =
      Eigen::Matrix4d::Constant(0.5) - Eigen::Matrix4d::Identity();
  const Eigen::Matrix4d u = -(diffusion * oracle * hh);
  return Unitary4::trusted(u.cast<Complex>());
}

}  // namespace warpc
