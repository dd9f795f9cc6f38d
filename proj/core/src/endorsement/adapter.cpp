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
#include "barne/endorsement/adapter.hpp"

#include <string>
#include <vector>

#include "barne/endorsement/payoffs.hpp"
#include "barne/endorsement/strategy.hpp"
#include "barne/game/errors.hpp"

namespace barne::endorsement {

namespace {

int count_endorsements(std::span<const StrategyId> profile, Validity v) {
  int c = 0;
  for (StrategyId s : profile) c += endorses(static_cast<Strategy>(s), v);
  return c;
}

// Expected payoff of player i over the proposer draw and the trap draw.
double stage_value(const ProtocolParams& params, int i, std::span<const StrategyId> profile) {
  const int n = static_cast<int>(profile.size());
  const int q = params.quorum;
  const int valid_total = count_endorsements(profile, Validity::kValid);
  const int invalid_total = count_endorsements(profile, Validity::kInvalid);
  const bool valid_accepted = valid_total >= q;
  const bool invalid_accepted = invalid_total >= q;

  auto payoff = [&](int j, Validity v) {
    const auto s = static_cast<Strategy>(profile[j]);
    return round_payoff(params, v == Validity::kValid ? valid_accepted : invalid_accepted, v,
                        endorses(s, v), checks(s));
  };
  const double u_valid = payoff(i, Validity::kValid);
  const double u_invalid = payoff(i, Validity::kInvalid);
  const double trap = params.effective_trap_probability();

  double total = 0.0;
  for (int j = 0; j < n; ++j) {
    if (static_cast<Strategy>(profile[j]) == Strategy::kFaulty) {
      total += u_invalid;
      continue;
    }
    const bool honest_block = payoff(j, Validity::kValid) >= payoff(j, Validity::kInvalid);
    const double planned = honest_block ? u_valid : u_invalid;
    total += (1.0 - trap) * planned + trap * u_invalid;
  }
  return total / n;
}

}  // namespace

GenericGame as_generic_game(const ProtocolParams& params) {
  if (params.n > kMaxAdapterPlayers) throw BudgetExceeded(params.n, kMaxAdapterPlayers);
  if (params.n < 1) throw InvalidArgument("adapter needs at least one player");
  std::vector<std::string> names;
  for (Strategy s : kAllStrategies) names.emplace_back(name(s));
  return GenericGame(
      params.n, std::move(names),
      [params](int i, std::span<const StrategyId> profile) {
        return stage_value(params, i, profile);
      },
      /*symmetric=*/true, id(Strategy::kHonest));
}

}  // namespace barne::endorsement
