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

// Text formatting helpers shared by the table emitter and the CLI.

#include <string>

namespace warpc {

/// "0", "π", "-π/2", "3π/4", ... when within `tol` of a multiple of π/d for
/// d in {1, 2, 3, 4, 6, 8}; otherwise a fixed decimal.
std::string format_angle(double radians, double tol = 1e-9);

/// "0", "1/J", "1/2J", "3/2J", ... for multiples of 1/4, otherwise "0.123456/J".
std::string format_j_units(double j_units);

/// Shortest round-trip decimal representation.
std::string format_exact(double value);

}  // namespace warpc
