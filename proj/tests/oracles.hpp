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
// Brute-force reference implementations used as independent oracles. They
// share no code with the library beyond the game and parameter types.

#ifndef BARNE_TESTS_ORACLES_HPP_
#define BARNE_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "barne/endorsement/params.hpp"
#include "barne/endorsement/strategy.hpp"
#include "barne/game/generic_game.hpp"

namespace barne::testing {

inline bool geq_tol(double a, double b) {
  return a >= b - 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

// Plain argmax-of-min check over every Byzantine joint pure profile.
inline bool brute_barne(const GenericGame& game, const std::vector<int>& byz,
                        const std::vector<int>& rat, const std::vector<int>& candidate,
                        int tau) {
  const int n = game.players();
  const int k = game.num_strategies();
  std::vector<int> base(n, tau);
  for (std::size_t r = 0; r < rat.size(); ++r) base[rat[r]] = candidate[r];
  long combos = 1;
  for (std::size_t b = 0; b < byz.size(); ++b) combos *= k;
  for (std::size_t r = 0; r < rat.size(); ++r) {
    const int i = rat[r];
    double best = -std::numeric_limits<double>::infinity();
    double own = 0.0;
    for (int t = 0; t < k; ++t) {
      double worst = std::numeric_limits<double>::infinity();
      for (long code = 0; code < combos; ++code) {
        std::vector<int> s = base;
        s[i] = t;
        long c = code;
        for (int b : byz) {
          s[b] = static_cast<int>(c % k);
          c /= k;
        }
        worst = std::min(worst, game.payoff(i, s));
      }
      best = std::max(best, worst);
      if (t == candidate[r]) own = worst;
    }
    if (!geq_tol(own, best)) return false;
  }
  return true;
}

// Symmetric BARNE at (f, g) over every disjoint (F, G) of the given sizes.
inline bool brute_barne_all_partitions(const GenericGame& game, int f, int g, int sigma) {
  const int n = game.players();
  for (int fm = 0; fm < (1 << n); ++fm) {
    if (__builtin_popcount(fm) != f) continue;
    for (int gm = 0; gm < (1 << n); ++gm) {
      if ((gm & fm) || __builtin_popcount(gm) != g) continue;
      std::vector<int> byz, rat;
      for (int i = 0; i < n; ++i) {
        if (fm >> i & 1) byz.push_back(i);
        if (gm >> i & 1) rat.push_back(i);
      }
      if (!brute_barne(game, byz, rat, std::vector<int>(rat.size(), sigma), game.prescribed()))
        return false;
    }
  }
  return true;
}

// Expected stage payoff of one rational agent playing t at (f, g) when the
// other rationals play sigma, Byzantines endorse invalid blocks only and
// propose invalid blocks, honest agents endorse valid blocks only. The
// population is built explicitly and every proposer is enumerated.
inline double oracle_stage_payoff(const endorsement::ProtocolParams& p, int f, int g,
                                  endorsement::Strategy sigma, endorsement::Strategy t) {
  using endorsement::Strategy;
  enum Kind { kByz, kRat, kHon };
  const int n = p.n;
  std::vector<Kind> kind(n, kHon);
  std::vector<bool> endorse_valid(n), endorse_invalid(n), check(n);
  auto setup = [&](int i, Strategy s) {
    endorse_valid[i] = s == Strategy::kCheckEndorse || s == Strategy::kHonest ||
                       s == Strategy::kBlind;
    endorse_invalid[i] = s == Strategy::kCheckEndorse || s == Strategy::kFaulty ||
                         s == Strategy::kBlind;
    check[i] = s != Strategy::kBlind && s != Strategy::kIdle;
  };
  for (int i = 0; i < n; ++i) {
    if (i < f) {
      kind[i] = kByz;
      setup(i, Strategy::kFaulty);
    } else if (i < f + g) {
      kind[i] = kRat;
      setup(i, i == f ? t : sigma);
    } else {
      setup(i, Strategy::kHonest);
    }
  }
  int yes_valid = 0, yes_invalid = 0;
  for (int i = 0; i < n; ++i) {
    yes_valid += endorse_valid[i];
    yes_invalid += endorse_invalid[i];
  }
  const bool fines = p.amendments != endorsement::Amendments::kBase;
  const double trap =
      p.amendments == endorsement::Amendments::kFinesAndTraps ? p.trap_probability : 0.0;
  auto utility = [&](int i, bool valid) {
    const bool endorsed = valid ? endorse_valid[i] : endorse_invalid[i];
    const bool accepted = (valid ? yes_valid : yes_invalid) >= p.quorum;
    double u = 0.0;
    if (accepted && endorsed) u += p.reward;
    if (accepted && !valid) u -= p.chain_loss;
    if (check[i]) u -= p.check_cost;
    if (fines && !valid && endorsed) u -= p.fine;
    return u;
  };
  const int focal = f;
  double total = 0.0;
  for (int j = 0; j < n; ++j) {
    if (kind[j] == kByz) {
      total += utility(focal, false);
      continue;
    }
    bool planned_valid = true;
    if (kind[j] == kRat) planned_valid = utility(j, true) >= utility(j, false);
    total += (1.0 - trap) * utility(focal, planned_valid) + trap * utility(focal, false);
  }
  return total / n;
}

}  // namespace barne::testing

#endif  // BARNE_TESTS_ORACLES_HPP_
