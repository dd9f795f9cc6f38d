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
#ifndef BARNE_GAME_EQUILIBRIUM_HPP_
#define BARNE_GAME_EQUILIBRIUM_HPP_

#include <optional>
#include <span>
#include <vector>

#include "barne/game/generic_game.hpp"

namespace barne {

struct SearchOptions {
  // Upper bound on payoff evaluations for one exhaustive check.
  double evaluation_budget = 1e8;
  // Relative tolerance used for argmax membership and weak inequalities.
  double tie_tolerance = 1e-9;
};

// a >= b up to the relative tie tolerance.
bool weakly_greater(double a, double b, double tolerance);

// Worst case over all Byzantine joint pure profiles for one focal player.
struct WorstCase {
  double value = 0.0;
  Profile byzantine_profile;  // argmin, aligned with the Byzantine index list
};

// min over s_F in T^|byzantine| of u_focal(profile with s_F substituted).
// With multiset=true only nondecreasing s_F are visited, which is exact when
// the game is symmetric.
WorstCase worst_case(const GenericGame& game, std::span<const int> byzantine, int focal,
                     Profile profile, bool multiset = false);

struct BarneWitness {
  int player = -1;            // rational with a profitable unilateral deviation
  StrategyId candidate = -1;  // what it was asked to play
  StrategyId deviation = -1;  // the strictly better max-min reply
  double candidate_value = 0.0;
  double deviation_value = 0.0;
  Profile byzantine_profile;  // worst case faced by the candidate strategy
};

struct BarneVerdict {
  bool holds = true;
  std::optional<BarneWitness> witness;
  explicit operator bool() const { return holds; }
};

// BARNE at (F, G): every rational's strategy is in the argmax over T of
// the min over Byzantine joint pure profiles. candidate[k] is the strategy of
// assign.rational[k]; honest players play assign.prescribed.
BarneVerdict barne_at_sets(const GenericGame& game, const TypeAssignment& assign,
                           std::span<const StrategyId> candidate,
                           const SearchOptions& options = {});

// Symmetric BARNE sigma^g at (f, g), checked on the canonical partition.
// Requires game.symmetric().
BarneVerdict barne_at_counts(const GenericGame& game, int f, int g, StrategyId sigma,
                             const SearchOptions& options = {});

struct BarStrongWitness {
  int condition = 0;  // 1: immunity violated, 2: profitable coalition
  std::vector<int> byzantine;
  std::vector<int> rational;  // coalition (condition 2) or empty
  Profile profile;            // the deviating joint profile
  int player = -1;            // harmed player (1) or first coalition member (2)
  double baseline = 0.0;
  double deviated = 0.0;
};

struct BarStrongVerdict {
  bool holds = true;
  std::optional<BarStrongWitness> witness;
  explicit operator bool() const { return holds; }
};

// (f_bar, g_bar) BAR-strong equilibrium check of a full joint profile.
BarStrongVerdict bar_strong(const GenericGame& game, int f_bar, int g_bar,
                            std::span<const StrategyId> candidate,
                            const SearchOptions& options = {});

}  // namespace barne

#endif  // BARNE_GAME_EQUILIBRIUM_HPP_
