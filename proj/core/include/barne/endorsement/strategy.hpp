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
#ifndef BARNE_ENDORSEMENT_STRATEGY_HPP_
#define BARNE_ENDORSEMENT_STRATEGY_HPP_

#include <array>
#include <string_view>

namespace barne::endorsement {

enum class Validity { kValid, kInvalid };
enum class Acceptance { kAccepted, kRejected, kPivotal };

// Leaves of the endorsement decision tree. The integer values are the
// strategy ids of the generic-game adapter.
enum class Strategy : int {
  kCheckEndorse = 0,  // sigma_ce: check, endorse unconditionally
  kCheckAbstain = 1,  // sigma_c0: check, never endorse
  kHonest = 2,        // sigma_h: check, endorse iff valid (prescribed)
  kFaulty = 3,        // sigma_f: check, endorse iff invalid (Byzantine minimizer)
  kBlind = 4,         // sigma_e: endorse without checking
  kIdle = 5,          // sigma_0: neither check nor endorse
};

inline constexpr int kNumStrategies = 6;
inline constexpr std::array<Strategy, kNumStrategies> kAllStrategies = {
    Strategy::kCheckEndorse, Strategy::kCheckAbstain, Strategy::kHonest,
    Strategy::kFaulty,       Strategy::kBlind,        Strategy::kIdle};
// The strategies not weakly dominated for a rational agent.
inline constexpr std::array<Strategy, 3> kUndominated = {Strategy::kHonest, Strategy::kBlind,
                                                         Strategy::kIdle};

constexpr bool checks(Strategy s) {
  return s == Strategy::kCheckEndorse || s == Strategy::kCheckAbstain ||
         s == Strategy::kHonest || s == Strategy::kFaulty;
}

constexpr bool endorses(Strategy s, Validity v) {
  switch (s) {
    case Strategy::kCheckEndorse:
    case Strategy::kBlind:
      return true;
    case Strategy::kCheckAbstain:
    case Strategy::kIdle:
      return false;
    case Strategy::kHonest:
      return v == Validity::kValid;
    case Strategy::kFaulty:
      return v == Validity::kInvalid;
  }
  return false;
}

constexpr int id(Strategy s) { return static_cast<int>(s); }

std::string_view name(Strategy s);         // "sigma_h", ...
std::string_view name(Acceptance a);       // "Accepted", ...
std::string_view name(Validity v);         // "Valid", ...
// Accepts "sigma_h", "h", ...; throws InvalidArgument otherwise.
Strategy strategy_from_string(std::string_view s);

}  // namespace barne::endorsement

#endif  // BARNE_ENDORSEMENT_STRATEGY_HPP_
