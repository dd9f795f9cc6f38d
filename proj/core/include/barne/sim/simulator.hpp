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
#ifndef BARNE_SIM_SIMULATOR_HPP_
#define BARNE_SIM_SIMULATOR_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "barne/endorsement/params.hpp"
#include "barne/endorsement/strategy.hpp"
#include "barne/game/simplex.hpp"

namespace barne::sim {

using endorsement::Amendments;
using endorsement::ProtocolParams;
using endorsement::Strategy;

// Agents are laid out as [0, f) Byzantine, [f, f+g) rational, the rest honest.
enum class AgentType { kByzantine, kHonest, kRational };
std::string_view name(AgentType t);

struct Deviant {
  int agent = 0;
  Strategy strategy = Strategy::kHonest;
};

struct SimConfig {
  ProtocolParams params;
  SimplexPoint point;
  Strategy rational_strategy = Strategy::kHonest;
  std::optional<Deviant> deviant;
  std::int64_t rounds = 1;
  std::uint64_t seed = 0;

  std::vector<std::string> violations() const;
  void validate() const;  // throws endorsement::ConfigError

  AgentType type_of(int agent) const;
  Strategy strategy_of(int agent) const;
  // The agent whose payoffs are compared with the analytic model: the
  // deviant when present, otherwise the first rational.
  int focal_agent() const;
};

SimConfig sim_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SimConfig& c);

struct RoundRecord {
  std::int64_t round = 0;
  int proposer = 0;
  AgentType proposer_type = AgentType::kHonest;
  bool block_valid = true;
  bool is_trap = false;
  std::vector<int> endorsements;  // sorted agent indices
  bool accepted = false;
  std::vector<int> fines_issued;  // sorted agent indices
  std::vector<double> deltas;     // utility change per agent
};

// Endorsers of an invalid block, accepted or not; empty without fines.
std::vector<int> accusation_check(const RoundRecord& record, Amendments amendments);

struct SimCounts {
  std::int64_t valid_proposals = 0;
  std::int64_t accepted_blocks = 0;
  std::int64_t traps = 0;
  std::int64_t trap_opportunities = 0;  // rounds with a non-Byzantine proposer
  std::int64_t fines = 0;               // individual fines issued
};

struct SimResult {
  SimConfig config;
  std::vector<double> totals;          // per agent
  std::vector<double> sum_squares;     // per agent, of per-round deltas
  std::vector<double> mean_per_round;  // per agent
  // Keys "byzantine", "honest", "rational" (non-deviant rationals), "deviant".
  std::map<std::string, double> class_means;
  SimCounts counts;

  // Sample standard error of the per-round mean of one agent.
  double standard_error(int agent) const;
};

using RecordSink = std::function<void(const RoundRecord&)>;

// Deterministic in config.seed. The optional sink sees every round in order.
SimResult run_simulation(const SimConfig& config, const RecordSink& sink = {});

// Rebuilds the aggregates of a run from its round records.
SimResult replay(const SimConfig& config, std::span<const RoundRecord> records);

nlohmann::json to_json(const SimResult& r);

// One CSV row per round, with a header row.
void write_trace_header(std::ostream& out);
void write_trace_row(std::ostream& out, const RoundRecord& r);

struct DeviationEntry {
  Strategy strategy = Strategy::kHonest;
  double empirical = 0.0;
  double analytic = 0.0;
  double standard_error = 0.0;
  double deviation = 0.0;  // |empirical - analytic|
  bool flagged = false;    // beyond 4 standard errors, or inexact when deterministic
};

struct DeviationReport {
  std::vector<DeviationEntry> entries;
  bool ok() const;
};

// Each result must come from (params, point, sigma), optionally with a
// deviant; the compared strategy is the deviant's (sigma otherwise).
// Throws InvalidArgument on a mismatched config.
DeviationReport empirical_vs_analytic(std::span<const SimResult> results,
                                      const ProtocolParams& params, const SimplexPoint& point,
                                      Strategy sigma, double se_threshold = 4.0);

}  // namespace barne::sim

#endif  // BARNE_SIM_SIMULATOR_HPP_
