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
#include "barne/report/serialize.hpp"

#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "barne/game/errors.hpp"

namespace barne::report {

using endorsement::PointVerdict;
using endorsement::Region;
using endorsement::SimplexMap;
using endorsement::Strategy;
using endorsement::StrategyVerdict;

namespace {

constexpr std::pair<const char*, Strategy> kColumns[] = {
    {"h", Strategy::kHonest}, {"e", Strategy::kBlind}, {"0", Strategy::kIdle}};

nlohmann::json verdict_json(const StrategyVerdict& v) {
  return {{"is_barne", v.is_barne},
          {"region", std::string(endorsement::name(v.region))},
          {"payoff", v.payoff},
          {"best_payoff", v.best_payoff}};
}

StrategyVerdict verdict_from_json(const nlohmann::json& j) {
  StrategyVerdict v;
  v.is_barne = j.at("is_barne").get<bool>();
  v.region = endorsement::region_from_string(j.at("region").get<std::string>());
  v.payoff = j.value("payoff", 0.0);
  v.best_payoff = j.value("best_payoff", 0.0);
  return v;
}

}  // namespace

void write_csv(std::ostream& out, const SimplexMap& map) {
  out << "f,g,barne_h,barne_e,barne_0,region_h,region_e,region_0\n";
  for (const auto& cell : map.grid) {
    const PointVerdict& v = cell.verdict;
    out << cell.f << ',' << cell.g;
    for (const auto& [suffix, s] : kColumns) out << ',' << (v.at(s).is_barne ? "true" : "false");
    for (const auto& [suffix, s] : kColumns) out << ',' << endorsement::name(v.at(s).region);
    out << '\n';
  }
}

std::string to_csv(const SimplexMap& map) {
  std::ostringstream os;
  write_csv(os, map);
  return os.str();
}

nlohmann::json to_json(const PointVerdict& v) {
  nlohmann::json j;
  for (const auto& [suffix, s] : kColumns) j[suffix] = verdict_json(v.at(s));
  return j;
}

nlohmann::json to_json(const SimplexMap& map) {
  nlohmann::json grid = nlohmann::json::array();
  for (const auto& cell : map.grid) {
    nlohmann::json row = to_json(cell.verdict);
    row["f"] = cell.f;
    row["g"] = cell.g;
    grid.push_back(std::move(row));
  }
  nlohmann::json summary;
  for (const auto& [suffix, s] : kColumns) {
    const auto sum = map.summary(s);
    nlohmann::json regions = nlohmann::json::object();
    for (const auto& [r, count] : sum.by_region) regions[std::string(endorsement::name(r))] = count;
    auto opt = [](const std::optional<int>& x) { return x ? nlohmann::json(*x) : nlohmann::json(); };
    summary[suffix] = {{"count", sum.count},      {"min_f", opt(sum.min_f)},
                       {"max_f", opt(sum.max_f)}, {"min_f_plus_g", opt(sum.min_fg)},
                       {"max_f_plus_g", opt(sum.max_fg)}, {"regions", regions}};
  }
  return {{"params", endorsement::to_json(map.params)},
          {"advisories", map.params.advisories()},
          {"summary", summary},
          {"grid", grid}};
}

SimplexMap simplex_map_from_json(const nlohmann::json& j) {
  SimplexMap map;
  if (!j.is_object() || !j.contains("params") || !j.contains("grid"))
    throw endorsement::ConfigError({"scan JSON needs params and grid"});
  map.params = endorsement::params_from_json(j.at("params"));
  try {
    for (const auto& row : j.at("grid")) {
      endorsement::GridCell cell;
      cell.f = row.at("f").get<int>();
      cell.g = row.at("g").get<int>();
      cell.verdict.honest = verdict_from_json(row.at("h"));
      cell.verdict.blind = verdict_from_json(row.at("e"));
      cell.verdict.idle = verdict_from_json(row.at("0"));
      map.grid.push_back(cell);
    }
  } catch (const nlohmann::json::exception& e) {
    throw endorsement::ConfigError({std::string("malformed scan grid: ") + e.what()});
  } catch (const InvalidArgument& e) {
    throw endorsement::ConfigError({std::string("malformed scan grid: ") + e.what()});
  }
  return map;
}

}  // namespace barne::report
