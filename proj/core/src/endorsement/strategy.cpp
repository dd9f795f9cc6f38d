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
#include "barne/endorsement/strategy.hpp"

#include <string>

#include "barne/game/errors.hpp"

namespace barne::endorsement {

std::string_view name(Strategy s) {
  switch (s) {
    case Strategy::kCheckEndorse:
      return "sigma_ce";
    case Strategy::kCheckAbstain:
      return "sigma_c0";
    case Strategy::kHonest:
      return "sigma_h";
    case Strategy::kFaulty:
      return "sigma_f";
    case Strategy::kBlind:
      return "sigma_e";
    case Strategy::kIdle:
      return "sigma_0";
  }
  return "?";
}

std::string_view name(Acceptance a) {
  switch (a) {
    case Acceptance::kAccepted:
      return "Accepted";
    case Acceptance::kRejected:
      return "Rejected";
    case Acceptance::kPivotal:
      return "Pivotal";
  }
  return "?";
}

std::string_view name(Validity v) { return v == Validity::kValid ? "Valid" : "Invalid"; }

Strategy strategy_from_string(std::string_view s) {
  if (s.substr(0, 6) == "sigma_") s.remove_prefix(6);
  for (Strategy t : kAllStrategies) {
    if (name(t).substr(6) == s) return t;
  }
  throw InvalidArgument("unknown strategy: " + std::string(s));
}

}  // namespace barne::endorsement
