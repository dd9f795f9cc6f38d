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
#include "barne/game/stability.hpp"

#include <string>

namespace barne {

StabilityVerdict delta_stable(const GenericGame& game, StrategyId sigma, int f_dot, int g_dot,
                              double delta, Norm norm, const SearchOptions& options) {
  const SimplexPoint center{f_dot, g_dot, game.players()};
  if (!center.valid()) {
    throw InvalidArgument("(" + std::to_string(f_dot) + ", " + std::to_string(g_dot) +
                          ") is not a point of the simplex");
  }
  for (const SimplexPoint& p : delta_ball(center, delta, norm)) {
    auto v = barne_at_counts(game, p.f, p.g, sigma, options);
    if (!v) return {false, p, v.witness};
  }
  return {};
}

StabilityVerdict globally_stable(const GenericGame& game, StrategyId sigma, int f_bar, int g_bar,
                                 const SearchOptions& options) {
  const int n = game.players();
  if (f_bar < 0 || g_bar < 0 || f_bar + g_bar > n) {
    throw InvalidArgument("globally_stable needs f_bar, g_bar >= 0 and f_bar + g_bar <= n");
  }
  for (int f = 0; f <= f_bar; ++f) {
    for (int g = 0; g <= g_bar; ++g) {
      auto v = barne_at_counts(game, f, g, sigma, options);
      if (!v) return {false, SimplexPoint{f, g, n}, v.witness};
    }
  }
  return {};
}

}  // namespace barne
