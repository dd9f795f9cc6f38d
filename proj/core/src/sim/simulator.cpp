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
#include "barne/sim/simulator.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <nlohmann/json.hpp>
#include <ostream>
#include <random>

#include "barne/endorsement/payoffs.hpp"
#include "barne/game/errors.hpp"

namespace barne::sim {

using endorsement::checks;
using endorsement::ConfigError;
using endorsement::endorses;
using endorsement::Validity;

namespace {

constexpr std::int64_t kChunk = 4096;

std::mt19937_64 chunk_engine(std::uint64_t seed, std::int64_t chunk) {
  const auto c = static_cast<std::uint64_t>(chunk);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
  return std::mt19937_64(seq);
}

bool same_params(const ProtocolParams& a, const ProtocolParams& b) {
  return a.n == b.n && a.quorum == b.quorum && a.reward == b.reward &&
         a.check_cost == b.check_cost && a.chain_loss == b.chain_loss &&
         a.effective_fine() == b.effective_fine() &&
         a.effective_trap_probability() == b.effective_trap_probability() &&
         a.amendments == b.amendments;
}

class Accumulator {
 public:
  explicit Accumulator(const SimConfig& config) : result_{} {
    result_.config = config;
    const auto n = static_cast<std::size_t>(config.params.n);
    result_.totals.assign(n, 0.0);
    result_.sum_squares.assign(n, 0.0);
  }

  void add(const RoundRecord& r) {
    SimCounts& c = result_.counts;
    c.valid_proposals += r.block_valid;
    c.accepted_blocks += r.accepted;
    c.traps += r.is_trap;
    c.trap_opportunities += r.proposer_type != AgentType::kByzantine;
    c.fines += static_cast<std::int64_t>(r.fines_issued.size());
    for (std::size_t i = 0; i < r.deltas.size(); ++i) {
      result_.totals[i] += r.deltas[i];
      result_.sum_squares[i] += r.deltas[i] * r.deltas[i];
    }
  }

  SimResult finish(std::int64_t rounds) {
    const SimConfig& cfg = result_.config;
    const double denom = rounds > 0 ? static_cast<double>(rounds) : 1.0;
    result_.mean_per_round.resize(result_.totals.size());
    std::map<std::string, std::pair<double, int>> sums;
    for (std::size_t i = 0; i < result_.totals.size(); ++i) {
      const double m = result_.totals[i] / denom;
      result_.mean_per_round[i] = m;
      const int agent = static_cast<int>(i);
      std::string key(name(cfg.type_of(agent)));
      if (cfg.deviant && cfg.deviant->agent == agent) key = "deviant";
      for (char& ch : key) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      sums[key].first += m;
      sums[key].second += 1;
    }
    for (const auto& [k, v] : sums) result_.class_means[k] = v.first / v.second;
    return std::move(result_);
  }

 private:
  SimResult result_;
};

}  // namespace

std::string_view name(AgentType t) {
  switch (t) {
    case AgentType::kByzantine:
      return "Byzantine";
    case AgentType::kHonest:
      return "Honest";
    case AgentType::kRational:
      return "Rational";
  }
  return "?";
}

std::vector<std::string> SimConfig::violations() const {
  std::vector<std::string> v = params.violations();
  if (point.n != params.n)
    v.push_back("point.n must equal n (got " + std::to_string(point.n) + ")");
  if (!point.valid())
    v.push_back("point must satisfy f, g >= 0 and f + g <= n (got f=" + std::to_string(point.f) +
                ", g=" + std::to_string(point.g) + ")");
  if (rounds < 1) v.push_back("rounds must be at least 1");
  if (deviant && (deviant->agent < point.f || deviant->agent >= point.f + point.g))
    v.push_back("deviant agent " + std::to_string(deviant->agent) +
                " is not rational (rationals are indices [" + std::to_string(point.f) + ", " +
                std::to_string(point.f + point.g) + "))");
  return v;
}

void SimConfig::validate() const {
  auto v = violations();
  if (!v.empty()) throw ConfigError(std::move(v));
}

AgentType SimConfig::type_of(int agent) const {
  if (agent < point.f) return AgentType::kByzantine;
  if (agent < point.f + point.g) return AgentType::kRational;
  return AgentType::kHonest;
}

Strategy SimConfig::strategy_of(int agent) const {
  switch (type_of(agent)) {
    case AgentType::kByzantine:
      return Strategy::kFaulty;
    case AgentType::kHonest:
      return Strategy::kHonest;
    case AgentType::kRational:
      if (deviant && deviant->agent == agent) return deviant->strategy;
      return rational_strategy;
  }
  return Strategy::kHonest;
}

int SimConfig::focal_agent() const { return deviant ? deviant->agent : point.f; }

std::vector<int> accusation_check(const RoundRecord& record, Amendments amendments) {
  if (record.block_valid || amendments == Amendments::kBase) return {};
  return record.endorsements;
}

SimResult run_simulation(const SimConfig& config, const RecordSink& sink) {
  config.validate();
  const ProtocolParams& p = config.params;
  const int n = p.n;
  const double trap_p = p.effective_trap_probability();

  std::vector<Strategy> strategy(n);
  for (int i = 0; i < n; ++i) strategy[i] = config.strategy_of(i);

  // Endorsements do not depend on who proposes, so acceptance per validity
  // and each rational proposer's preferred validity are fixed for the run.
  auto total = [&](Validity v) {
    int c = 0;
    for (Strategy s : strategy) c += endorses(s, v);
    return c;
  };
  const bool accepted_if_valid = total(Validity::kValid) >= p.quorum;
  const bool accepted_if_invalid = total(Validity::kInvalid) >= p.quorum;
  auto own_payoff = [&](int i, Validity v) {
    return endorsement::round_payoff(
        p, v == Validity::kValid ? accepted_if_valid : accepted_if_invalid, v,
        endorses(strategy[i], v), checks(strategy[i]));
  };
  std::vector<bool> proposes_valid(n);
  for (int i = 0; i < n; ++i)
    proposes_valid[i] = own_payoff(i, Validity::kValid) >= own_payoff(i, Validity::kInvalid);

  Accumulator acc(config);
  RoundRecord rec;
  rec.deltas.resize(n);
  std::uniform_int_distribution<int> pick(0, n - 1);

  std::mt19937_64 engine;
  for (std::int64_t round = 0; round < config.rounds; ++round) {
    if (round % kChunk == 0) engine = chunk_engine(config.seed, round / kChunk);
    const int proposer = pick(engine);
    const double trap_draw = std::generate_canonical<double, 53>(engine);

    rec.round = round;
    rec.proposer = proposer;
    rec.proposer_type = config.type_of(proposer);
    rec.is_trap = false;
    if (rec.proposer_type == AgentType::kByzantine) {
      rec.block_valid = false;
    } else {
      rec.is_trap = trap_draw < trap_p;
      const bool planned_valid =
          rec.proposer_type == AgentType::kHonest || proposes_valid[proposer];
      rec.block_valid = planned_valid && !rec.is_trap;
    }
    const Validity v = rec.block_valid ? Validity::kValid : Validity::kInvalid;

    rec.endorsements.clear();
    for (int i = 0; i < n; ++i)
      if (endorses(strategy[i], v)) rec.endorsements.push_back(i);
    rec.accepted = static_cast<int>(rec.endorsements.size()) >= p.quorum;
    rec.fines_issued = accusation_check(rec, p.amendments);

    for (int i = 0; i < n; ++i) {
      const bool endorsed = endorses(strategy[i], v);
      double u = 0.0;
      if (rec.accepted) {
        if (endorsed) u += p.reward;
        if (!rec.block_valid) u -= p.chain_loss;
      }
      if (checks(strategy[i])) u -= p.check_cost;
      rec.deltas[i] = u;
    }
    for (int i : rec.fines_issued) rec.deltas[i] -= p.fine;

    acc.add(rec);
    if (sink) sink(rec);
  }
  return acc.finish(config.rounds);
}

SimResult replay(const SimConfig& config, std::span<const RoundRecord> records) {
  Accumulator acc(config);
  for (const RoundRecord& r : records) acc.add(r);
  return acc.finish(static_cast<std::int64_t>(records.size()));
}

double SimResult::standard_error(int agent) const {
  const double r = static_cast<double>(config.rounds);
  if (r < 2) return 0.0;
  const double mean = totals[agent] / r;
  const double var = std::max(0.0, (sum_squares[agent] / r - mean * mean) * r / (r - 1));
  return std::sqrt(var / r);
}

bool DeviationReport::ok() const {
  return std::none_of(entries.begin(), entries.end(),
                      [](const DeviationEntry& e) { return e.flagged; });
}

DeviationReport empirical_vs_analytic(std::span<const SimResult> results,
                                      const ProtocolParams& params, const SimplexPoint& point,
                                      Strategy sigma, double se_threshold) {
  const auto beliefs = endorsement::belief_matrix(params, point, sigma);
  DeviationReport report;
  for (const SimResult& r : results) {
    const SimConfig& c = r.config;
    if (!same_params(c.params, params) || !(c.point == point) || c.rational_strategy != sigma)
      throw InvalidArgument("simulation result does not match (params, point, sigma)");
    const int agent = c.focal_agent();
    DeviationEntry e;
    e.strategy = c.strategy_of(agent);
    e.empirical = r.mean_per_round[agent];
    e.analytic = endorsement::expected_payoff(params, beliefs, e.strategy);
    e.standard_error = r.standard_error(agent);
    e.deviation = std::abs(e.empirical - e.analytic);
    const double exact_slack = 1e-9 * std::max(1.0, std::abs(e.analytic));
    e.flagged = e.standard_error > 0.0 ? e.deviation > se_threshold * e.standard_error
                                       : e.deviation > exact_slack;
    report.entries.push_back(e);
  }
  return report;
}

SimConfig sim_config_from_json(const nlohmann::json& j) {
  std::vector<std::string> problems;
  SimConfig c;
  try {
    c.params = endorsement::params_from_json(j);
  } catch (const ConfigError& e) {
    problems = e.violations();
  }
  c.point.n = c.params.n;
  auto it = j.find("point");
  if (it == j.end() || !it->is_object()) {
    problems.push_back("missing field point {f, g}");
  } else {
    for (const char* key : {"f", "g"}) {
      auto k = it->find(key);
      if (k == it->end() || !k->is_number_integer())
        problems.push_back(std::string("point.") + key + " must be an integer");
      else
        (std::string(key) == "f" ? c.point.f : c.point.g) = k->get<int>();
    }
  }
  auto text = [&](const char* key) -> std::optional<std::string> {
    auto s = j.find(key);
    if (s == j.end() || s->is_null()) return std::nullopt;
    if (!s->is_string()) {
      problems.push_back(std::string("field ") + key + " must be a string");
      return std::nullopt;
    }
    return s->get<std::string>();
  };
  auto parse_strategy = [&](const std::string& s, const char* key) {
    try {
      return endorsement::strategy_from_string(s);
    } catch (const Error&) {
      problems.push_back(std::string("field ") + key + ": unknown strategy " + s);
      return Strategy::kHonest;
    }
  };
  if (auto s = text("rational_strategy")) c.rational_strategy = parse_strategy(*s, "rational_strategy");
  if (auto d = j.find("deviant"); d != j.end() && !d->is_null()) {
    if (!d->is_object() || !d->contains("agent") || !d->contains("strategy") ||
        !(*d)["agent"].is_number_integer() || !(*d)["strategy"].is_string()) {
      problems.push_back("deviant must be {agent: int, strategy: string}");
    } else {
      c.deviant = Deviant{(*d)["agent"].get<int>(),
                          parse_strategy((*d)["strategy"].get<std::string>(), "deviant.strategy")};
    }
  }
  if (auto r = j.find("rounds"); r != j.end()) {
    if (!r->is_number_integer())
      problems.push_back("field rounds must be an integer");
    else
      c.rounds = r->get<std::int64_t>();
  }
  if (auto s = j.find("seed"); s != j.end()) {
    if (!s->is_number_unsigned() && !(s->is_number_integer() && s->get<std::int64_t>() >= 0))
      problems.push_back("field seed must be a non-negative integer");
    else
      c.seed = s->get<std::uint64_t>();
  }
  if (problems.empty()) {
    auto v = c.violations();
    problems.insert(problems.end(), v.begin(), v.end());
  }
  if (!problems.empty()) throw ConfigError(std::move(problems));
  return c;
}

nlohmann::json to_json(const SimConfig& c) {
  nlohmann::json j = endorsement::to_json(c.params);
  j["point"] = {{"f", c.point.f}, {"g", c.point.g}};
  j["rational_strategy"] = std::string(endorsement::name(c.rational_strategy));
  if (c.deviant)
    j["deviant"] = {{"agent", c.deviant->agent},
                    {"strategy", std::string(endorsement::name(c.deviant->strategy))}};
  else
    j["deviant"] = nullptr;
  j["rounds"] = c.rounds;
  j["seed"] = c.seed;
  return j;
}

nlohmann::json to_json(const SimResult& r) {
  nlohmann::json agents = nlohmann::json::array();
  for (std::size_t i = 0; i < r.totals.size(); ++i) {
    const int a = static_cast<int>(i);
    agents.push_back({{"agent", a},
                      {"type", std::string(name(r.config.type_of(a)))},
                      {"strategy", std::string(endorsement::name(r.config.strategy_of(a)))},
                      {"total", r.totals[i]},
                      {"mean_per_round", r.mean_per_round[i]},
                      {"standard_error", r.standard_error(a)}});
  }
  return {{"config", to_json(r.config)},
          {"seed", r.config.seed},
          {"agents", agents},
          {"class_means", r.class_means},
          {"counts",
           {{"valid_proposals", r.counts.valid_proposals},
            {"accepted_blocks", r.counts.accepted_blocks},
            {"traps", r.counts.traps},
            {"trap_opportunities", r.counts.trap_opportunities},
            {"fines", r.counts.fines}}}};
}

namespace {

template <typename T>
void join(std::ostream& out, const std::vector<T>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ";" : "") << xs[i];
}

}  // namespace

void write_trace_header(std::ostream& out) {
  out << "round,proposer,proposer_type,block_valid,is_trap,endorsements,accepted,fines_issued,"
         "deltas\n";
}

void write_trace_row(std::ostream& out, const RoundRecord& r) {
  out << r.round << ',' << r.proposer << ',' << name(r.proposer_type) << ','
      << (r.block_valid ? 1 : 0) << ',' << (r.is_trap ? 1 : 0) << ',';
  join(out, r.endorsements);
  out << ',' << (r.accepted ? 1 : 0) << ',';
  join(out, r.fines_issued);
  out << ',';
  join(out, r.deltas);
  out << '\n';
}

}  // namespace barne::sim
