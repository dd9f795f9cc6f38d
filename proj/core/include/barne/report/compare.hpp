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
#ifndef BARNE_REPORT_COMPARE_HPP_
#define BARNE_REPORT_COMPARE_HPP_

#include <nlohmann/json_fwd.hpp>
#include <span>
#include <string>
#include <vector>

#include "barne/endorsement/classify.hpp"

namespace barne::report {

// Change of one strategy's BARNE region between consecutive scans.
struct RegionStep {
  std::string from;
  std::string to;
  int gained = 0;
  int lost = 0;
};

struct StrategyDiff {
  endorsement::Strategy strategy = endorsement::Strategy::kHonest;
  std::vector<int> sizes;  // region size per scan
  std::vector<RegionStep> steps;
};

struct CompareReport {
  std::vector<std::string> levels;
  std::vector<StrategyDiff> diffs;
  bool honest_monotone = true;       // each honest region contains the previous one
  bool blind_vanishes = true;        // sigma_e region of the last scan is empty
  bool empty() const;                // no region changed between any two scans
};

// Scans in amendment order (typically Base, Fines, FinesAndTraps). They must
// share n, Q, r_e, c_c and L; throws InvalidArgument otherwise.
CompareReport compare_scans(std::span<const endorsement::SimplexMap> scans);

nlohmann::json to_json(const CompareReport& r);

}  // namespace barne::report

#endif  // BARNE_REPORT_COMPARE_HPP_
