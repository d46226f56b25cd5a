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

#include "warpc/warpdrive.hpp"

#include <algorithm>
#include <cmath>

namespace warpc {

namespace {

Unitary4 permutation_matrix(const std::array<int, 4>& map) {
  Matrix4 m = Matrix4::Zero();
  for (int k = 0; k < 4; ++k) m(map[static_cast<size_t>(k)], k) = 1.0;
  return Unitary4::trusted(m);
}

WarpGate make_gate(int index, std::string name, const std::array<int, 4>& map) {
  return WarpGate{index, std::move(name), permutation_matrix(map), map};
}

std::string extended_name(const std::array<int, 4>& map) {
  std::string s = "P";
  for (int v : map) s += static_cast<char>('0' + v);
  return s;
}

}  // namespace

BasisLabel BasisLabel::from_index(int index) {
  if (index < 0 || index > 3) {
    throw Error(ErrorCode::kInvalidArgument, "basis index out of range");
  }
  return BasisLabel(index);
}

BasisLabel BasisLabel::parse(const std::string& text) {
  if (text.size() != 2 || (text[0] != '0' && text[0] != '1') ||
      (text[1] != '0' && text[1] != '1')) {
    throw Error(ErrorCode::kParse, "invalid basis label '" + text + "'");
  }
  return BasisLabel(2 * (text[0] - '0') + (text[1] - '0'));
}

std::string BasisLabel::str() const {
  return std::string{static_cast<char>('0' + index_ / 2),
                     static_cast<char>('0' + index_ % 2)};
}

Duration Duration::from_j_units(double j_units, double j_hz) {
  return Duration{j_units / j_hz, j_units};
}

double coupling_units(double alpha) {
  const double units = std::abs(alpha) / (2.0 * kPi);
  const double quarters = std::round(units * 4.0);
  if (std::abs(units * 4.0 - quarters) <= 4e-12) return quarters / 4.0;
  return units;
}

Duration coupling_time(const CartanCoordinates& c, double j_hz) {
  if (!(j_hz > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "J coupling must be positive");
  }
  if (!c.is_canonical()) {
    throw Error(ErrorCode::kNonCanonicalCoordinates,
                "coupling time is defined on canonical coordinates only");
  }
  const double units = coupling_units(c.x) + coupling_units(c.y) + coupling_units(c.z);
  return Duration::from_j_units(units, j_hz);
}

BasisLabel WarpGate::map(BasisLabel in) const {
  return BasisLabel::from_index(basis_map[static_cast<size_t>(in.index())]);
}

std::vector<WarpGate> warp_catalog(CatalogScope scope) {
  // |q1 q2> -> index 2 q1 + q2
  const std::array<int, 4> identity{0, 1, 2, 3};
  const std::array<int, 4> cnot12{0, 1, 3, 2};
  const std::array<int, 4> cnot21{0, 3, 2, 1};
  const std::array<int, 4> swap{0, 2, 1, 3};
  auto compose = [](const std::array<int, 4>& outer, const std::array<int, 4>& inner) {
    std::array<int, 4> out{};
    for (size_t k = 0; k < 4; ++k) out[k] = outer[static_cast<size_t>(inner[k])];
    return out;
  };

  std::vector<WarpGate> gates;
  gates.push_back(make_gate(0, "W0", identity));
  gates.push_back(make_gate(1, "W1", cnot12));
  gates.push_back(make_gate(2, "W2", cnot21));
  gates.push_back(make_gate(3, "W3", swap));
  gates.push_back(make_gate(4, "W4", compose(cnot12, cnot21)));
  gates.push_back(make_gate(5, "W5", compose(cnot21, cnot12)));

  if (scope == CatalogScope::kAll24) {
    std::array<int, 4> perm = identity;
    do {
      const bool seen = std::any_of(gates.begin(), gates.end(), [&](const WarpGate& g) {
        return g.basis_map == perm;
      });
      if (!seen) {
        gates.push_back(make_gate(static_cast<int>(gates.size()), extended_name(perm), perm));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return gates;
}

std::optional<WarpGate> find_warp_gate(const std::string& name, CatalogScope scope) {
  for (auto& g : warp_catalog(scope)) {
    if (g.name == name) return g;
  }
  return std::nullopt;
}

const WarpRecord& WarpSearchResult::selected_record() const {
  return records.at(static_cast<size_t>(selected));
}

double WarpSearchResult::min_j_units() const {
  double best = records.front().duration.j_units;
  for (const auto& r : records) best = std::min(best, r.duration.j_units);
  return best;
}

WarpSearchResult warp_search(const Unitary4& u, double j_hz, CatalogScope scope) {
  WarpSearchResult result;
  for (const auto& w : warp_catalog(scope)) {
    const KakDecomposition d = cartan_decompose(w.matrix * u);
    result.records.push_back({w.index, w.name, d.coords, coupling_time(d.coords, j_hz)});
  }
  const double best = result.min_j_units();
  for (const auto& r : result.records) {
    if (r.duration.j_units - best <= kDurationTieTolerance * j_hz) {
      result.minimizers.push_back(r.index);
    }
  }
  result.selected = result.minimizers.front();
  return result;
}

BasisLabel decode_output(const WarpGate& w, BasisLabel observed) {
  for (int k = 0; k < 4; ++k) {
    if (w.basis_map[static_cast<size_t>(k)] == observed.index()) {
      return BasisLabel::from_index(k);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "warp gate map is not a permutation");
}

}  // namespace warpc
