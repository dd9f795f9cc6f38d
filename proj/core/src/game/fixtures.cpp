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
#include "barne/game/fixtures.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

namespace barne {

void CongestionGameParams::validate() const {
  if (n < 1) throw InvalidArgument("congestion game needs n >= 1");
  if (k < 0 || k > n) throw InvalidArgument("congestion capacity k must lie in [0, n]");
  if (!(u_b1 > u_a && u_a > u_b2)) {
    throw InvalidArgument("congestion payoffs must satisfy u_B1 > u_A > u_B2");
  }
  if (!assignment.empty()) {
    if (static_cast<int>(assignment.size()) != n) {
      throw InvalidArgument("congestion assignment must name a server for every player");
    }
    for (StrategyId s : assignment) {
      if (s != kServerA && s != kServerB) throw InvalidArgument("congestion servers are A and B");
    }
  }
}

GenericGame congestion_game(const CongestionGameParams& params) {
  params.validate();
  auto payoff = [p = params](int player, std::span<const StrategyId> s) {
    if (s[player] == kServerA) return p.u_a;
    auto load = std::count(s.begin(), s.end(), kServerB);
    return load <= p.k ? p.u_b1 : p.u_b2;
  };
  return GenericGame(params.n, {"A", "B"}, payoff, /*symmetric=*/true, kServerA);
}

Profile congestion_assignment(const CongestionGameParams& params) {
  if (!params.assignment.empty()) return params.assignment;
  Profile a(params.n, kServerA);
  for (int i = 0; i < params.k; ++i) a[i] = kServerB;
  return a;
}

GenericGame prisoners_dilemma(const PrisonersDilemmaParams& p) {
  return symmetric_bimatrix({"C", "D"},
                            {{p.reward, p.sucker}, {p.temptation, p.punishment}}, 0);
}

GenericGame symmetric_bimatrix(std::vector<std::string> strategies,
                               std::vector<std::vector<double>> row_payoffs,
                               StrategyId prescribed) {
  const size_t k = strategies.size();
  if (row_payoffs.size() != k) throw InvalidArgument("bimatrix must be square in the strategies");
  for (const auto& row : row_payoffs) {
    if (row.size() != k) throw InvalidArgument("bimatrix must be square in the strategies");
  }
  auto payoff = [m = std::move(row_payoffs)](int player, std::span<const StrategyId> s) {
    return m[s[player]][s[1 - player]];
  };
  return GenericGame(2, std::move(strategies), payoff, /*symmetric=*/true, prescribed);
}

GenericGame anti_coordination_game() {
  return symmetric_bimatrix({"X", "Y"}, {{0.0, 1.0}, {1.0, 0.0}}, 0);
}

namespace {

std::string profile_key(std::span<const StrategyId> s, const std::vector<std::string>& names) {
  std::string key;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) key += ',';
    key += names[s[i]];
  }
  return key;
}

}  // namespace

GenericGame game_from_json(const nlohmann::json& d) {
  try {
    const std::string rule = d.value("rule", std::string{});
    const nlohmann::json params = d.value("params", nlohmann::json::object());
    if (rule == "congestion") {
      CongestionGameParams p;
      p.n = d.value("players", p.n);
      p.k = params.value("k", p.k);
      p.u_a = params.value("u_A", p.u_a);
      p.u_b1 = params.value("u_B1", p.u_b1);
      p.u_b2 = params.value("u_B2", p.u_b2);
      if (params.contains("assignment")) {
        for (const auto& name : params.at("assignment")) {
          p.assignment.push_back(name.get<std::string>() == "B" ? kServerB : kServerA);
        }
      }
      return congestion_game(p);
    }
    if (rule == "pd") {
      PrisonersDilemmaParams p;
      p.temptation = params.value("T", p.temptation);
      p.reward = params.value("R", p.reward);
      p.punishment = params.value("P", p.punishment);
      p.sucker = params.value("S", p.sucker);
      return prisoners_dilemma(p);
    }

    auto strategies = d.at("strategies").get<std::vector<std::string>>();
    if (rule == "bimatrix") {
      auto matrix = params.at("matrix").get<std::vector<std::vector<double>>>();
      GenericGame tmp = symmetric_bimatrix(strategies, matrix, 0);
      StrategyId prescribed = d.contains("prescribed")
                                  ? tmp.strategy_id(d.at("prescribed").get<std::string>())
                                  : 0;
      return symmetric_bimatrix(std::move(strategies), std::move(matrix), prescribed);
    }
    if (!rule.empty()) throw InvalidArgument("unknown game rule '" + rule + "'");

    // Explicit table: "A,B" -> [u_0, u_1, ...] for every joint profile.
    const int n = d.at("players").get<int>();
    const auto& table_json = d.at("payoff_table");
    const int k = static_cast<int>(strategies.size());
    std::map<std::string, std::vector<double>> table;
    for (auto it = table_json.begin(); it != table_json.end(); ++it) {
      auto values = it.value().get<std::vector<double>>();
      if (static_cast<int>(values.size()) != n) {
        throw InvalidArgument("payoff_table entry '" + it.key() + "' needs one value per player");
      }
      table[it.key()] = std::move(values);
    }
    std::vector<int> digits(n, 0);
    Profile s(n);
    for (;;) {
      for (int i = 0; i < n; ++i) s[i] = digits[i];
      if (!table.count(profile_key(s, strategies))) {
        throw InvalidArgument("payoff_table is missing profile '" + profile_key(s, strategies) +
                              "'");
      }
      int i = 0;
      while (i < n && ++digits[i] == k) digits[i++] = 0;
      if (i == n) break;
    }
    auto payoff = [table = std::move(table), names = strategies](
                      int player, std::span<const StrategyId> prof) {
      return table.at(profile_key(prof, names))[player];
    };
    GenericGame game(n, strategies, payoff, d.value("symmetric", false), 0);
    if (d.contains("prescribed")) {
      return GenericGame(n, strategies, payoff, game.symmetric(),
                         game.strategy_id(d.at("prescribed").get<std::string>()));
    }
    return game;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed game description: ") + e.what());
  }
}

}  // namespace barne
