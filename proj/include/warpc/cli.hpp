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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "warpc/su4.hpp"

namespace warpc::cli {

enum ExitCode : int {
  kOk = 0,
  kParseFailure = 2,
  kInvalidInput = 3,
  kVerificationFailure = 4,
};

/// Parses the 4x4 complex matrix file format: four non-comment lines of four
/// whitespace-separated entries "a+bi" ('#' starts a comment). Throws
/// ErrorCode::kParse.
Matrix4 parse_matrix_text(std::string_view text);

/// Product of '*'-separated factors, each "grover:ij", "warp:<name>",
/// "identity", or a path to a matrix file. The result is checked for
/// unitarity within `tol` (ErrorCode::kNotUnitary) and then snapped to the
/// nearest unitary.
Unitary4 load_matrix_source(const std::string& source, double tol = kEquivalenceTolerance);

/// Runs the command line (args excludes the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace warpc::cli
