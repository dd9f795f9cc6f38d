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
#ifndef BARNE_TOOLS_CLI_HPP_
#define BARNE_TOOLS_CLI_HPP_

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "barne/game/generic_game.hpp"

namespace barne::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,     // unexpected internal error
  kValidation = 2,  // bad config, unknown fixture or concept, bad usage
  kIo = 3,
};

// Bad command line or check arguments; maps to kValidation.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs one barne-kit invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

using CheckArgs = std::map<std::string, std::string>;

// Parses "key=value" tokens. Throws UsageError on a token without '='.
CheckArgs parse_check_args(const std::vector<std::string>& tokens);

// Runs a named checker on a fixture game; throws UsageError for unknown
// fixture, concept or argument.
nlohmann::json run_check(const std::string& fixture, const std::string& concept_name,
                         const CheckArgs& args);

struct InclusionChainResult {
  long implications = 0;
  long violations = 0;
  std::optional<nlohmann::json> first_violation;
};

// Checks BAR-strong => globally stable => delta-stable => BARNE on every
// symmetric pure profile, every (f, g) and delta in {0, 1, 2}, both norms.
// BAR-strong is only evaluated at the prescribed profile with g_bar >= 1.
InclusionChainResult inclusion_chain(const GenericGame& game);

}  // namespace barne::cli

#endif  // BARNE_TOOLS_CLI_HPP_
