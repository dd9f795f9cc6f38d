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
#include <cmath>
#include <string>

#include "barne/game/errors.hpp"
#include "barne/game/simplex.hpp"

namespace barne {

std::string_view to_string(Norm norm) {
  switch (norm) {
    case Norm::kInfinity:
      return "infinity";
    case Norm::kTwoStar:
      return "two_star";
  }
  return "?";
}

Norm norm_from_string(std::string_view name) {
  if (name == "infinity" || name == "inf") return Norm::kInfinity;
  if (name == "two_star" || name == "2*") return Norm::kTwoStar;
  throw InvalidArgument("unknown norm '" + std::string(name) + "'");
}

double norm_distance(const SimplexPoint& a, const SimplexPoint& b, Norm norm) {
  if (a.n != b.n) throw InvalidArgument("simplex points have different n");
  const double df = a.f - b.f;
  const double dg = a.g - b.g;
  switch (norm) {
    case Norm::kInfinity:
      return std::max(std::abs(df), std::abs(dg));
    case Norm::kTwoStar: {
      // dh = -(df + dg)
      const double dh = df + dg;
      return std::sqrt((df * df + dg * dg + dh * dh) / 2.0);
    }
  }
  return 0.0;
}

std::vector<SimplexPoint> delta_ball(const SimplexPoint& center, double delta, Norm norm) {
  std::vector<SimplexPoint> ball;
  if (delta < 0) return ball;
  // Both norms dominate 0.8 * the infinity norm, so a square of half-width
  // ceil(delta / 0.8) contains every candidate.
  const int reach = static_cast<int>(std::ceil(delta / 0.8)) + 1;
  for (int f = center.f - reach; f <= center.f + reach; ++f) {
    for (int g = center.g - reach; g <= center.g + reach; ++g) {
      SimplexPoint p{f, g, center.n};
      if (!p.valid()) continue;
      if (norm_distance(center, p, norm) <= delta + 1e-12) ball.push_back(p);
    }
  }
  return ball;
}

}  // namespace barne
