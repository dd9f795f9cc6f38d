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

#ifndef BARNE_GAME_GENERIC_GAME_HPP_
#define BARNE_GAME_GENERIC_GAME_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "barne/game/errors.hpp"

namespace barne {

using StrategyId = int;
using Profile = std::vector<StrategyId>;

// A finite game in normal form given by a payoff oracle. Players are indexed
// 0..players()-1 and strategies 0..num_strategies()-1. The prescribed strategy
// is the protocol that honest players follow.
class GenericGame {
 public:
  using PayoffFn = std::function<double(int player, std::span<const StrategyId> profile)>;

  GenericGame(int players, std::vector<std::string> strategies, PayoffFn payoff,
              bool symmetric, StrategyId prescribed = 0);

  int players() const { return players_; }
  int num_strategies() const { return static_cast<int>(strategies_.size()); }
  const std::vector<std::string>& strategies() const { return strategies_; }
  const std::string& strategy_name(StrategyId s) const;
  StrategyId strategy_id(std::string_view name) const;
  bool symmetric() const { return symmetric_; }
  StrategyId prescribed() const { return prescribed_; }

  double payoff(int player, std::span<const StrategyId> profile) const;

 private:
  int players_;
  std::vector<std::string> strategies_;
  PayoffFn payoff_;
  bool symmetric_;
  StrategyId prescribed_;
};

// Checks u_i(s) == u_{pi(i)}(s o pi^-1) on random players, profiles and
// permutations. Returns the number of violations found.
int count_symmetry_violations(const GenericGame& game, int samples, std::uint64_t seed,
                              double tolerance = 1e-9);

// Who is Byzantine (F), who is rational (G); everyone else is honest and plays
// the prescribed strategy.
struct TypeAssignment {
  std::vector<int> byzantine;
  std::vector<int> rational;
  StrategyId prescribed = 0;

  // Throws InvalidAssignment when F and G overlap or an index is out of range.
  void validate(int players) const;
  std::vector<int> honest(int players) const;

  // F = {0..f-1}, G = {f..f+g-1}.
  static TypeAssignment canonical(int players, int f, int g, StrategyId prescribed);
};

}  // namespace barne

#endif  // BARNE_GAME_GENERIC_GAME_HPP_
