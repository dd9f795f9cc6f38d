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
#include "barne/endorsement/classify.hpp"

#include <algorithm>

#include "barne/game/equilibrium.hpp"
#include "barne/game/errors.hpp"

namespace barne::endorsement {

std::string_view name(Region r) {
  switch (r) {
    case Region::kNone:
      return "None";
    case Region::kHonest:
      return "HonestBARNE";
    case Region::kThreatless:
      return "ThreatlessBARNE";
    case Region::kHonestVeto:
      return "HonestVetoBARNE";
    case Region::kBreakdown:
      return "BreakdownBARNE";
    case Region::kColdStart:
      return "ColdStartBARNE";
  }
  return "?";
}

Region region_from_string(std::string_view s) {
  for (Region r : {Region::kNone, Region::kHonest, Region::kThreatless, Region::kHonestVeto,
                   Region::kBreakdown, Region::kColdStart}) {
    if (name(r) == s) return r;
  }
  throw InvalidArgument("unknown region: " + std::string(s));
}

const StrategyVerdict& PointVerdict::at(Strategy s) const {
  switch (s) {
    case Strategy::kHonest:
      return honest;
    case Strategy::kBlind:
      return blind;
    case Strategy::kIdle:
      return idle;
    default:
      throw InvalidArgument("verdicts cover sigma_h, sigma_e, sigma_0 only");
  }
}

namespace {

Region label(const ProtocolParams& params, const SimplexPoint& point, Strategy sigma) {
  switch (sigma) {
    case Strategy::kHonest:
      return Region::kHonest;
    case Strategy::kIdle:
      return Region::kColdStart;
    case Strategy::kBlind: {
      if (params.amendments != Amendments::kBase) return Region::kThreatless;
      const int fg = point.f + point.g;
      if (fg < params.quorum) return Region::kHonestVeto;
      if (fg > params.quorum) return Region::kBreakdown;
      return Region::kThreatless;
    }
    default:
      return Region::kNone;
  }
}

StrategyVerdict verdict(const ProtocolParams& params, const SimplexPoint& point, Strategy sigma,
                        double tolerance) {
  const BeliefMatrix beliefs = belief_matrix(params, point, sigma);
  StrategyVerdict v;
  v.payoff = expected_payoff(params, beliefs, sigma);
  v.best_payoff = v.payoff;
  for (Strategy t : kAllStrategies)
    v.best_payoff = std::max(v.best_payoff, expected_payoff(params, beliefs, t));
  v.is_barne = weakly_greater(v.payoff, v.best_payoff, tolerance);
  if (v.is_barne) v.region = label(params, point, sigma);
  return v;
}

}  // namespace

PointVerdict classify_point(const ProtocolParams& params, int f, int g, double tie_tolerance) {
  const SimplexPoint point{f, g, params.n};
  if (!point.valid() || g < 1)
    throw InvalidArgument("classify_point needs f, g >= 0, g >= 1 and f + g <= n");
  PointVerdict out;
  out.honest = verdict(params, point, Strategy::kHonest, tie_tolerance);
  out.blind = verdict(params, point, Strategy::kBlind, tie_tolerance);
  out.idle = verdict(params, point, Strategy::kIdle, tie_tolerance);
  return out;
}

std::vector<std::string> SpecialAreas::names() const {
  std::vector<std::string> out;
  if (byzantine_quorum) out.emplace_back("ByzantineQuorum");
  if (byzantine_veto) out.emplace_back("ByzantineVeto");
  if (honest_quorum) out.emplace_back("HonestQuorum");
  if (honest_veto) out.emplace_back("HonestVeto");
  return out;
}

SpecialAreas special_areas(const ProtocolParams& params, int f, int g) {
  if (!SimplexPoint{f, g, params.n}.valid())
    throw InvalidArgument("special_areas needs a point of the simplex");
  const int n = params.n, q = params.quorum;
  return {f >= q, f > n - q, f + g <= n - q, f + g < q};
}

const GridCell* SimplexMap::find(int f, int g) const {
  auto it = std::lower_bound(grid.begin(), grid.end(), std::pair{f, g},
                             [](const GridCell& c, const std::pair<int, int>& key) {
                               return std::pair{c.f, c.g} < key;
                             });
  if (it == grid.end() || it->f != f || it->g != g) return nullptr;
  return &*it;
}

RegionSummary SimplexMap::summary(Strategy s) const {
  RegionSummary out;
  auto widen = [](std::optional<int>& lo, std::optional<int>& hi, int x) {
    lo = lo ? std::min(*lo, x) : x;
    hi = hi ? std::max(*hi, x) : x;
  };
  for (const GridCell& c : grid) {
    const StrategyVerdict& v = c.verdict.at(s);
    if (!v.is_barne) continue;
    ++out.count;
    ++out.by_region[v.region];
    widen(out.min_f, out.max_f, c.f);
    widen(out.min_fg, out.max_fg, c.f + c.g);
  }
  return out;
}

std::vector<std::pair<int, int>> SimplexMap::region(Strategy s) const {
  std::vector<std::pair<int, int>> out;
  for (const GridCell& c : grid)
    if (c.verdict.at(s).is_barne) out.emplace_back(c.f, c.g);
  return out;
}

SimplexMap simplex_scan(const ProtocolParams& params, double tie_tolerance) {
  if (params.n > kMaxScanSize) throw BudgetExceeded(params.n, kMaxScanSize);
  params.validate();
  SimplexMap map;
  map.params = params;
  map.grid.reserve(static_cast<std::size_t>(params.n + 1) * params.n / 2);
  for (int f = 0; f < params.n; ++f) {
    for (int g = 1; f + g <= params.n; ++g)
      map.grid.push_back({f, g, classify_point(params, f, g, tie_tolerance)});
  }
  return map;
}

}  // namespace barne::endorsement
