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
#ifndef BARNE_ENDORSEMENT_CLASSIFY_HPP_
#define BARNE_ENDORSEMENT_CLASSIFY_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "barne/endorsement/payoffs.hpp"

namespace barne::endorsement {

enum class Region {
  kNone,
  kHonest,      // sigma_h
  kThreatless,  // sigma_e with too few Byzantines to matter
  kHonestVeto,  // sigma_e with f + g < Q
  kBreakdown,   // sigma_e with f + g > Q
  kColdStart,   // sigma_0, all blocks rejected
};

std::string_view name(Region r);
Region region_from_string(std::string_view s);

struct StrategyVerdict {
  bool is_barne = false;
  Region region = Region::kNone;
  double payoff = 0.0;       // expected payoff of the strategy itself
  double best_payoff = 0.0;  // best over all six deviations
};

struct PointVerdict {
  StrategyVerdict honest;
  StrategyVerdict blind;
  StrategyVerdict idle;

  const StrategyVerdict& at(Strategy s) const;
};

// Verdict for the three undominated strategies at (f, g). Deviations range
// over all six strategies. Requires g >= 1 and f + g <= n.
PointVerdict classify_point(const ProtocolParams& params, int f, int g,
                            double tie_tolerance = 1e-9);

struct SpecialAreas {
  bool byzantine_quorum = false;  // f >= Q
  bool byzantine_veto = false;    // f > n - Q
  bool honest_quorum = false;     // f + g <= n - Q
  bool honest_veto = false;       // f + g < Q
  std::vector<std::string> names() const;
};

SpecialAreas special_areas(const ProtocolParams& params, int f, int g);

struct GridCell {
  int f = 0;
  int g = 0;
  PointVerdict verdict;
};

struct RegionSummary {
  int count = 0;
  std::optional<int> min_f, max_f, min_fg, max_fg;
  std::map<Region, int> by_region;
};

// Verdicts on every lattice point with g >= 1, ordered by f then g.
struct SimplexMap {
  ProtocolParams params;
  std::vector<GridCell> grid;

  const GridCell* find(int f, int g) const;
  RegionSummary summary(Strategy s) const;
  // (f, g) points where s is a BARNE.
  std::vector<std::pair<int, int>> region(Strategy s) const;
};

inline constexpr int kMaxScanSize = 500;

// Throws BudgetExceeded above kMaxScanSize agents.
SimplexMap simplex_scan(const ProtocolParams& params, double tie_tolerance = 1e-9);

}  // namespace barne::endorsement

#endif  // BARNE_ENDORSEMENT_CLASSIFY_HPP_
