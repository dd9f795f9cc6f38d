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
#ifndef BARNE_GAME_FIXTURES_HPP_
#define BARNE_GAME_FIXTURES_HPP_

#include <nlohmann/json_fwd.hpp>

#include "barne/game/generic_game.hpp"

namespace barne {

// Two servers: A is safe (u_a), B pays u_b1 while at most k players use it
// and u_b2 once overloaded. Strategy ids: A = 0, B = 1. Prescribed: A.
struct CongestionGameParams {
  int n = 4;
  int k = 2;
  double u_a = 1.0;
  double u_b1 = 2.0;
  double u_b2 = 0.0;
  Profile assignment;  // optional oracle assignment; empty means first k on B

  void validate() const;
};

inline constexpr StrategyId kServerA = 0;
inline constexpr StrategyId kServerB = 1;

GenericGame congestion_game(const CongestionGameParams& params);
Profile congestion_assignment(const CongestionGameParams& params);

// C = 0, D = 1. Prescribed: C.
struct PrisonersDilemmaParams {
  double temptation = 5.0;
  double reward = 3.0;
  double punishment = 1.0;
  double sucker = 0.0;
};
GenericGame prisoners_dilemma(const PrisonersDilemmaParams& params = {});

// Two-player symmetric game: row_payoffs[a][b] is the payoff of playing a
// against b.
GenericGame symmetric_bimatrix(std::vector<std::string> strategies,
                               std::vector<std::vector<double>> row_payoffs,
                               StrategyId prescribed = 0);

// Pays 1 for mismatching the opponent, 0 otherwise. Symmetric equilibrium (1/2, 1/2).
GenericGame anti_coordination_game();

// {players, strategies: [names], payoff_table | rule: "congestion" | "pd" |
//  "bimatrix", params, prescribed, symmetric}
GenericGame game_from_json(const nlohmann::json& description);

}  // namespace barne

#endif  // BARNE_GAME_FIXTURES_HPP_
