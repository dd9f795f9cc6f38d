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
#include "barne/game/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "enumerate.hpp"

namespace barne {
namespace {

void check_budget(double required, const SearchOptions& options) {
  if (required > options.evaluation_budget) {
    throw BudgetExceeded(required, options.evaluation_budget);
  }
}

double pow_int(int base, int exp) { return std::pow(static_cast<double>(base), exp); }

struct BestReply {
  StrategyId strategy = -1;
  double value = -std::numeric_limits<double>::infinity();
};

// Shared core of both BARNE checks. With multiset=true the Byzantine
// enumeration is reduced to multisets, which requires a symmetric game.
BarneVerdict check_barne(const GenericGame& game, const TypeAssignment& assign,
                         std::span<const StrategyId> candidate, bool multiset,
                         const SearchOptions& options) {
  const int n = game.players();
  const int k = game.num_strategies();
  assign.validate(n);
  if (candidate.size() != assign.rational.size()) {
    throw InvalidAssignment("candidate must assign one strategy to every rational player");
  }
  for (StrategyId s : candidate) {
    if (s < 0 || s >= k) throw InvalidArgument("candidate strategy out of range");
  }
  const int f = static_cast<int>(assign.byzantine.size());
  const int g = static_cast<int>(assign.rational.size());
  if (g == 0) return {};

  const double per_player =
      k * (multiset ? internal::multiset_count(k, f) : pow_int(k, f));
  check_budget(per_player * g, options);

  Profile base(n, assign.prescribed);
  for (int idx = 0; idx < g; ++idx) base[assign.rational[idx]] = candidate[idx];
  for (int b : assign.byzantine) base[b] = 0;

  for (int idx = 0; idx < g; ++idx) {
    const int player = assign.rational[idx];
    WorstCase own;
    BestReply best;
    for (StrategyId t = 0; t < k; ++t) {
      Profile p = base;
      p[player] = t;
      WorstCase wc = worst_case(game, assign.byzantine, player, std::move(p), multiset);
      if (t == candidate[idx]) own = wc;
      if (wc.value > best.value) best = {t, wc.value};
    }
    if (!weakly_greater(own.value, best.value, options.tie_tolerance)) {
      BarneVerdict v;
      v.holds = false;
      v.witness = BarneWitness{player,          candidate[idx], best.strategy, own.value,
                               best.value,      own.byzantine_profile};
      return v;
    }
  }
  return {};
}

}  // namespace

bool weakly_greater(double a, double b, double tolerance) {
  return a >= b - tolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

WorstCase worst_case(const GenericGame& game, std::span<const int> byzantine, int focal,
                     Profile profile, bool multiset) {
  const int f = static_cast<int>(byzantine.size());
  const int k = game.num_strategies();
  WorstCase out;
  out.value = std::numeric_limits<double>::infinity();
  std::vector<int> digits(f, 0);
  do {
    for (int j = 0; j < f; ++j) profile[byzantine[j]] = digits[j];
    double u = game.payoff(focal, profile);
    if (u < out.value) {
      out.value = u;
      out.byzantine_profile.assign(digits.begin(), digits.end());
    }
  } while (multiset ? internal::next_multiset(digits, k) : internal::next_tuple(digits, k));
  return out;
}

BarneVerdict barne_at_sets(const GenericGame& game, const TypeAssignment& assign,
                           std::span<const StrategyId> candidate, const SearchOptions& options) {
  return check_barne(game, assign, candidate, /*multiset=*/false, options);
}

BarneVerdict barne_at_counts(const GenericGame& game, int f, int g, StrategyId sigma,
                             const SearchOptions& options) {
  if (!game.symmetric()) {
    throw SymmetryRequired("BARNE at (f, g) is only defined here for symmetric games");
  }
  auto assign = TypeAssignment::canonical(game.players(), f, g, game.prescribed());
  Profile candidate(g, sigma);
  return check_barne(game, assign, candidate, /*multiset=*/true, options);
}

BarStrongVerdict bar_strong(const GenericGame& game, int f_bar, int g_bar,
                            std::span<const StrategyId> candidate, const SearchOptions& options) {
  const int n = game.players();
  const int k = game.num_strategies();
  if (static_cast<int>(candidate.size()) != n) {
    throw InvalidArgument("BAR-strong candidate must be a full joint profile");
  }
  if (f_bar < 0 || g_bar < 0) throw InvalidArgument("f_bar and g_bar must be non-negative");
  f_bar = std::min(f_bar, n);

  double required = 0.0;
  for (int f = 0; f <= f_bar; ++f) {
    double subsets_f = internal::binomial(n, f);
    double byz_profiles = pow_int(k, f);
    required += subsets_f * byz_profiles * (n - f);
    for (int g = 1; g <= std::min(g_bar, n - f); ++g) {
      required += subsets_f * internal::binomial(n - f, g) * byz_profiles *
                  (pow_int(k, g) + 1.0) * g;
    }
  }
  check_budget(required, options);

  const Profile star(candidate.begin(), candidate.end());
  std::vector<double> u_star(n);
  for (int i = 0; i < n; ++i) u_star[i] = game.payoff(i, star);
  const double tol = options.tie_tolerance;

  // Visits every Byzantine set F with |F| <= f_bar and every s_F; stops at
  // the first verdict the visitor returns.
  auto each_byzantine_deviation = [&](auto&& visit) -> std::optional<BarStrongVerdict> {
    for (int f = 0; f <= f_bar; ++f) {
      std::vector<int> byz(f);
      for (int j = 0; j < f; ++j) byz[j] = j;
      do {
        std::vector<bool> in_f(n, false);
        for (int b : byz) in_f[b] = true;
        std::vector<int> rest;
        for (int i = 0; i < n; ++i) {
          if (!in_f[i]) rest.push_back(i);
        }
        std::vector<int> sf(f, 0);
        do {
          Profile with_f = star;
          for (int j = 0; j < f; ++j) with_f[byz[j]] = sf[j];
          if (auto v = visit(byz, rest, with_f)) return v;
        } while (internal::next_tuple(sf, k));
      } while (internal::next_combination(byz, n));
    }
    return std::nullopt;
  };

  // Condition 1: no non-Byzantine loses from any Byzantine deviation.
  auto immunity = each_byzantine_deviation(
      [&](const std::vector<int>& byz, const std::vector<int>& rest,
          const Profile& with_f) -> std::optional<BarStrongVerdict> {
        for (int i : rest) {
          const double u = game.payoff(i, with_f);
          if (!weakly_greater(u, u_star[i], tol)) {
            return BarStrongVerdict{false, BarStrongWitness{1, byz, {}, with_f, i, u_star[i], u}};
          }
        }
        return std::nullopt;
      });
  if (immunity) return *immunity;

  // Condition 2: in every Byzantine context, no coalition G of at most g_bar
  // rationals has a joint deviation that strictly benefits all of G.
  auto coalitions = each_byzantine_deviation(
      [&](const std::vector<int>& byz, const std::vector<int>& rest,
          const Profile& with_f) -> std::optional<BarStrongVerdict> {
        std::vector<double> u_f(n);
        for (int i : rest) u_f[i] = game.payoff(i, with_f);
        const int rest_size = static_cast<int>(rest.size());
        for (int g = 1; g <= std::min(g_bar, rest_size); ++g) {
          std::vector<int> pick(g);
          for (int j = 0; j < g; ++j) pick[j] = j;
          do {
            std::vector<int> coalition(g);
            for (int j = 0; j < g; ++j) coalition[j] = rest[pick[j]];
            std::vector<int> sg(g, 0);
            do {
              Profile dev = with_f;
              for (int j = 0; j < g; ++j) dev[coalition[j]] = sg[j];
              bool all_gain = true;
              double first_gain_value = 0.0;
              for (int j = 0; j < g && all_gain; ++j) {
                const double u = game.payoff(coalition[j], dev);
                if (j == 0) first_gain_value = u;
                all_gain = !weakly_greater(u_f[coalition[j]], u, tol);
              }
              if (all_gain) {
                return BarStrongVerdict{false,
                                        BarStrongWitness{2, byz, coalition, dev, coalition[0],
                                                         u_f[coalition[0]], first_gain_value}};
              }
            } while (internal::next_tuple(sg, k));
          } while (internal::next_combination(pick, rest_size));
        }
        return std::nullopt;
      });
  if (coalitions) return *coalitions;
  return {};
}

}  // namespace barne
