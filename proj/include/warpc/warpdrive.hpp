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

// Warp-drive search: prepend a cheap basis permutation W to an algorithm U so
// that W U needs less J-coupling time, then undo W classically on readout.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "warpc/kak.hpp"

namespace warpc {

/// One of the four computational basis kets, indexed 0..3 as |00>..|11>.
class BasisLabel {
 public:
  constexpr BasisLabel() = default;
  /// Throws ErrorCode::kInvalidArgument outside 0..3.
  static BasisLabel from_index(int index);
  /// Parses "00", "01", "10" or "11"; throws ErrorCode::kParse otherwise.
  static BasisLabel parse(const std::string& text);

  int index() const { return index_; }
  std::string str() const;

  friend bool operator==(BasisLabel, BasisLabel) = default;

 private:
  explicit constexpr BasisLabel(int index) : index_(index) {}
  int index_ = 0;
};

/// Coupling time in seconds, with its value in units of 1/J.
struct Duration {
  double seconds = 0.0;
  double j_units = 0.0;

  static Duration from_j_units(double j_units, double j_hz);
};

/// |alpha| / (2 pi), snapped to an exact multiple of 1/4 when within 1e-12.
double coupling_units(double alpha);

/// T = (|alpha_x| + |alpha_y| + |alpha_z|) / (2 pi J). Throws
/// ErrorCode::kNonCanonicalCoordinates for coordinates outside the chamber.
Duration coupling_time(const CartanCoordinates& c, double j_hz);

struct WarpGate {
  int index = 0;          // catalog position; 0..5 are W0..W5
  std::string name;       // "W0".."W5", or "P<images>" for the extended set
  Unitary4 matrix;
  std::array<int, 4> basis_map{};  // basis_map[k] = image of |k>

  BasisLabel map(BasisLabel in) const;
};

enum class CatalogScope { kSix, kAll24 };

/// W0 = I, W1 = CNOT12, W2 = CNOT21, W3 = SWAP, W4 = CNOT12 CNOT21,
/// W5 = CNOT21 CNOT12. kAll24 appends the remaining 18 permutations.
std::vector<WarpGate> warp_catalog(CatalogScope scope = CatalogScope::kSix);

/// Looks up "W0".."W5" (or an extended name) in the given scope.
std::optional<WarpGate> find_warp_gate(const std::string& name,
                                       CatalogScope scope = CatalogScope::kAll24);

struct WarpRecord {
  int index = 0;
  std::string name;
  CartanCoordinates coords;
  Duration duration;
};

struct WarpSearchResult {
  std::vector<WarpRecord> records;  // catalog order
  std::vector<int> minimizers;      // catalog indices
  int selected = 0;

  const WarpRecord& selected_record() const;
  double min_j_units() const;
};

inline constexpr double kDurationTieTolerance = 1e-12;

/// Decomposes project_su4(W u) for every catalog gate W and ranks the
/// coupling times. The lowest-index minimizer is selected.
WarpSearchResult warp_search(const Unitary4& u, double j_hz,
                             CatalogScope scope = CatalogScope::kSix);

/// Recovers the algorithm's output from the warped run's observation.
BasisLabel decode_output(const WarpGate& w, BasisLabel observed);

}  // namespace warpc
