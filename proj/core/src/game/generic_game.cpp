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
#include "barne/game/generic_game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace barne {

BudgetExceeded::BudgetExceeded(double required, double budget)
    : Error([&] {
        std::ostringstream os;
        os << "exhaustive check needs ~" << required << " payoff evaluations, budget is "
           << budget;
        return os.str();
      }()),
      required_(required),
      budget_(budget) {}

GenericGame::GenericGame(int players, std::vector<std::string> strategies, PayoffFn payoff,
                         bool symmetric, StrategyId prescribed)
    : players_(players),
      strategies_(std::move(strategies)),
      payoff_(std::move(payoff)),
      symmetric_(symmetric),
      prescribed_(prescribed) {
  if (players_ < 1) throw InvalidArgument("a game needs at least one player");
  if (strategies_.empty()) throw InvalidArgument("a game needs at least one strategy");
  if (!payoff_) throw InvalidArgument("payoff oracle is empty");
  if (prescribed_ < 0 || prescribed_ >= num_strategies()) {
    throw InvalidArgument("prescribed strategy out of range");
  }
}

const std::string& GenericGame::strategy_name(StrategyId s) const {
  if (s < 0 || s >= num_strategies()) throw InvalidArgument("strategy id out of range");
  return strategies_[s];
}

StrategyId GenericGame::strategy_id(std::string_view name) const {
  auto it = std::find(strategies_.begin(), strategies_.end(), name);
  if (it == strategies_.end()) {
    throw InvalidArgument("unknown strategy '" + std::string(name) + "'");
  }
  return static_cast<StrategyId>(it - strategies_.begin());
}

double GenericGame::payoff(int player, std::span<const StrategyId> profile) const {
  if (static_cast<int>(profile.size()) != players_) {
    throw InvalidArgument("profile size does not match player count");
  }
  if (player < 0 || player >= players_) throw InvalidArgument("player index out of range");
  return payoff_(player, profile);
}

int count_symmetry_violations(const GenericGame& game, int samples, std::uint64_t seed,
                              double tolerance) {
  std::mt19937_64 rng(seed);
  const int n = game.players();
  std::uniform_int_distribution<int> pick_strategy(0, game.num_strategies() - 1);
  std::uniform_int_distribution<int> pick_player(0, n - 1);
  std::vector<int> perm(n);
  Profile s(n), permuted(n);
  int violations = 0;
  for (int k = 0; k < samples; ++k) {
    for (auto& x : s) x = pick_strategy(rng);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    // Player j of the permuted profile is player perm^-1(j) of the original,
    // i.e. permuted[perm[j]] = s[j].
    for (int j = 0; j < n; ++j) permuted[perm[j]] = s[j];
    int i = pick_player(rng);
    double a = game.payoff(i, s);
    double b = game.payoff(perm[i], permuted);
    if (std::abs(a - b) > tolerance * std::max({1.0, std::abs(a), std::abs(b)})) ++violations;
  }
  return violations;
}

void TypeAssignment::validate(int players) const {
  std::set<int> seen;
  for (const auto* group : {&byzantine, &rational}) {
    for (int i : *group) {
      if (i < 0 || i >= players) {
        throw InvalidAssignment("player index " + std::to_string(i) + " out of range");
      }
      if (!seen.insert(i).second) {
        throw InvalidAssignment("player " + std::to_string(i) +
                                " appears twice in the Byzantine/rational sets");
      }
    }
  }
}

std::vector<int> TypeAssignment::honest(int players) const {
  std::vector<bool> taken(players, false);
  for (int i : byzantine) taken[i] = true;
  for (int i : rational) taken[i] = true;
  std::vector<int> out;
  for (int i = 0; i < players; ++i) {
    if (!taken[i]) out.push_back(i);
  }
  return out;
}

TypeAssignment TypeAssignment::canonical(int players, int f, int g, StrategyId prescribed) {
  if (f < 0 || g < 0 || f + g > players) {
    throw InvalidArgument("(f, g) = (" + std::to_string(f) + ", " + std::to_string(g) +
                          ") is outside the simplex for n = " + std::to_string(players));
  }
  TypeAssignment a;
  a.prescribed = prescribed;
  for (int i = 0; i < f; ++i) a.byzantine.push_back(i);
  for (int i = f; i < f + g; ++i) a.rational.push_back(i);
  return a;
}

}  // namespace barne
