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

#include "warpc/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "warpc/su4.hpp"

namespace warpc {

std::string format_angle(double radians, double tol) {
  if (std::abs(radians) <= tol) return "0";
  for (int den : {1, 2, 3, 4, 6, 8}) {
    const double num = std::round(radians * den / kPi);
    if (std::abs(radians - num * kPi / den) > tol) continue;
    const long n = std::lround(num);
    const long g = std::gcd(std::labs(n), static_cast<long>(den));
    const long p = n / g;
    const long q = den / g;
    std::string s = p < 0 ? "-" : "";
    if (std::labs(p) != 1) s += std::to_string(std::labs(p));
    s += "π";
    if (q != 1) s += "/" + std::to_string(q);
    return s;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9f", radians);
  return buf;
}

std::string format_j_units(double j_units) {
  if (std::abs(j_units) <= 1e-12) return "0";
  const double quarters = std::round(j_units * 4.0);
  if (std::abs(j_units * 4.0 - quarters) <= 4e-12) {
    const long n = std::lround(quarters);
    const long g = std::gcd(n, 4L);
    const long p = n / g;
    const long q = 4 / g;
    return std::to_string(p) + "/" + (q == 1 ? "" : std::to_string(q)) + "J";
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9f/J", j_units);
  return buf;
}

std::string format_exact(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

}  // namespace warpc
