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
#ifndef BARNE_GAME_STABILITY_HPP_
#define BARNE_GAME_STABILITY_HPP_

#include <optional>

#include "barne/game/equilibrium.hpp"
#include "barne/game/simplex.hpp"

namespace barne {

struct StabilityVerdict {
  bool holds = true;
  std::optional<SimplexPoint> failing_point;
  std::optional<BarneWitness> witness;
  explicit operator bool() const { return holds; }
};

// sigma is a symmetric BARNE at every lattice point of the simplex within
// norm-distance delta of (f_dot, g_dot).
StabilityVerdict delta_stable(const GenericGame& game, StrategyId sigma, int f_dot, int g_dot,
                              double delta, Norm norm, const SearchOptions& options = {});

// sigma is a symmetric BARNE at every (f, g) with f <= f_bar and g <= g_bar.
StabilityVerdict globally_stable(const GenericGame& game, StrategyId sigma, int f_bar, int g_bar,
                                 const SearchOptions& options = {});

}  // namespace barne

#endif  // BARNE_GAME_STABILITY_HPP_
