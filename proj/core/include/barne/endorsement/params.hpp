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
#ifndef BARNE_ENDORSEMENT_PARAMS_HPP_
#define BARNE_ENDORSEMENT_PARAMS_HPP_

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "barne/game/errors.hpp"

namespace barne::endorsement {

enum class Amendments {
  kBase,
  kFines,          // endorsing an invalid block costs the fine L_e
  kFinesAndTraps,  // plus trap blocks proposed with probability p_prop
};

std::string_view to_string(Amendments a);
Amendments amendments_from_string(std::string_view name);

// How strictly the economic and quorum assumptions are enforced.
struct ValidationOptions {
  // "a >> b" is checked as a >= dominance_factor * b.
  double dominance_factor = 10.0;
  // n/4 <= Q <= n - max(2, n/20); small test instances switch this off.
  bool quorum_bounds = true;
};

// One instance of the endorsement game.
struct ProtocolParams {
  int n = 30;
  int quorum = 20;               // Q
  double reward = 10.0;          // r_e, paid to endorsers of an accepted block
  double check_cost = 1.0;       // c_c
  double chain_loss = 1000.0;    // L, borne by everyone when an invalid block is accepted
  double fine = 0.0;             // L_e
  double trap_probability = 0.0; // p_prop
  Amendments amendments = Amendments::kBase;
  ValidationOptions validation;

  double effective_fine() const { return amendments == Amendments::kBase ? 0.0 : fine; }
  double effective_trap_probability() const {
    return amendments == Amendments::kFinesAndTraps ? trap_probability : 0.0;
  }

  // Human-readable list of every violated invariant; empty when valid.
  std::vector<std::string> violations() const;
  void validate() const;  // throws ConfigError
  // Non-fatal remarks about the instance, e.g. a quorum too large for any
  // honest BARNE under the base protocol.
  std::vector<std::string> advisories() const;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// Keys: n, Q, r_e, c_c, L, L_e, p_prop, amendments, validation{...}.
// Throws ConfigError listing missing fields and violated invariants.
ProtocolParams params_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ProtocolParams& p);

}  // namespace barne::endorsement

#endif  // BARNE_ENDORSEMENT_PARAMS_HPP_
