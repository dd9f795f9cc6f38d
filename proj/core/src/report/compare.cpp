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
#include "barne/report/compare.hpp"

#include <algorithm>
#include <iterator>
#include <nlohmann/json.hpp>

#include "barne/game/errors.hpp"

namespace barne::report {

using endorsement::SimplexMap;
using endorsement::Strategy;

namespace {

using Region = std::vector<std::pair<int, int>>;

int difference_size(const Region& a, const Region& b) {
  Region out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return static_cast<int>(out.size());
}

void require_compatible(const SimplexMap& a, const SimplexMap& b) {
  const auto& p = a.params;
  const auto& q = b.params;
  if (p.n != q.n || p.quorum != q.quorum || p.reward != q.reward ||
      p.check_cost != q.check_cost || p.chain_loss != q.chain_loss)
    throw InvalidArgument("scans must share n, Q, r_e, c_c and L");
}

}  // namespace

bool CompareReport::empty() const {
  for (const auto& d : diffs)
    for (const auto& s : d.steps)
      if (s.gained || s.lost) return false;
  return true;
}

CompareReport compare_scans(std::span<const SimplexMap> scans) {
  if (scans.empty()) throw InvalidArgument("compare needs at least one scan");
  for (const auto& s : scans) require_compatible(scans.front(), s);

  CompareReport rep;
  for (const auto& s : scans) rep.levels.emplace_back(endorsement::to_string(s.params.amendments));
  for (Strategy st : endorsement::kUndominated) {
    StrategyDiff d;
    d.strategy = st;
    std::vector<Region> regions;
    for (const auto& s : scans) {
      regions.push_back(s.region(st));
      d.sizes.push_back(static_cast<int>(regions.back().size()));
    }
    for (std::size_t i = 1; i < regions.size(); ++i) {
      RegionStep step{rep.levels[i - 1], rep.levels[i],
                      difference_size(regions[i], regions[i - 1]),
                      difference_size(regions[i - 1], regions[i])};
      if (st == Strategy::kHonest && step.lost > 0) rep.honest_monotone = false;
      d.steps.push_back(step);
    }
    if (st == Strategy::kBlind) rep.blind_vanishes = regions.back().empty();
    rep.diffs.push_back(std::move(d));
  }
  return rep;
}

nlohmann::json to_json(const CompareReport& r) {
  nlohmann::json diffs = nlohmann::json::array();
  for (const auto& d : r.diffs) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : d.steps)
      steps.push_back({{"from", s.from}, {"to", s.to}, {"gained", s.gained}, {"lost", s.lost}});
    diffs.push_back({{"strategy", std::string(endorsement::name(d.strategy))},
                     {"region_sizes", d.sizes},
                     {"steps", steps}});
  }
  return {{"levels", r.levels},
          {"diffs", diffs},
          {"honest_region_monotone", r.honest_monotone},
          {"sigma_e_region_vanishes", r.blind_vanishes},
          {"empty", r.empty()}};
}

}  // namespace barne::report
