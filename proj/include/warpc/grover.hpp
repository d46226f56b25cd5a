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

#include <string>

#include "warpc/su4.hpp"

namespace warpc {

/// The basis ket |ij> a single Grover step is asked to find.
struct TargetFile {
  int i = 0;
  int j = 0;

  /// Throws ErrorCode::kInvalidArgument unless both bits are 0 or 1.
  static TargetFile of(int i, int j);
  int index() const { return 2 * i + j; }
  std::string label() const;
};

/// U_ij = -(2|s><s| - I)(I - 2|ij><ij|)(H (x) H), exact in floating point.
Unitary4 grover_gate(const TargetFile& target);

}  // namespace warpc
