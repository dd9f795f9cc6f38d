// Copyright 2026 The barne-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef BARNE_GAME_SIMPLEX_HPP_
#define BARNE_GAME_SIMPLEX_HPP_

#include <string_view>
#include <vector>

namespace barne {

// A population (f Byzantine, g rational, h = n - f - g honest).
struct SimplexPoint {
  int f = 0;
  int g = 0;
  int n = 0;

  int h() const { return n - f - g; }
  bool valid() const { return n >= 0 && f >= 0 && g >= 0 && f + g <= n; }
  friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;
};

enum class Norm {
  kInfinity,  // max(|df|, |dg|)
  kTwoStar,   // ||(df, dg, dh)||_2 / sqrt(2) on the implied 3-vector
};

std::string_view to_string(Norm norm);
Norm norm_from_string(std::string_view name);

// Throws InvalidArgument when a.n != b.n.
double norm_distance(const SimplexPoint& a, const SimplexPoint& b, Norm norm);

// All valid lattice points of the simplex within distance delta of center.
std::vector<SimplexPoint> delta_ball(const SimplexPoint& center, double delta, Norm norm);

}  // namespace barne

#endif  // BARNE_GAME_SIMPLEX_HPP_
