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
#include "barne/endorsement/params.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

namespace barne::endorsement {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

std::string_view to_string(Amendments a) {
  switch (a) {
    case Amendments::kBase:
      return "Base";
    case Amendments::kFines:
      return "Fines";
    case Amendments::kFinesAndTraps:
      return "FinesAndTraps";
  }
  return "?";
}

Amendments amendments_from_string(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "base" || lower == "none") return Amendments::kBase;
  if (lower == "fines") return Amendments::kFines;
  if (lower == "finesandtraps" || lower == "fines_and_traps" || lower == "traps")
    return Amendments::kFinesAndTraps;
  throw InvalidArgument("unknown amendment level: " + std::string(name));
}

std::vector<std::string> ProtocolParams::violations() const {
  std::vector<std::string> v;
  const double k = validation.dominance_factor;
  for (auto [label, x] : {std::pair<const char*, double>{"r_e", reward},
                          {"c_c", check_cost},
                          {"L", chain_loss},
                          {"L_e", fine},
                          {"p_prop", trap_probability}}) {
    if (!std::isfinite(x)) v.push_back(std::string(label) + " must be finite");
  }
  if (!(k >= 1.0)) v.push_back("dominance_factor must be >= 1");
  if (n < 2) v.push_back("n must be at least 2 (got " + std::to_string(n) + ")");
  if (quorum <= 1 || quorum > n)
    v.push_back("Q must satisfy 1 < Q <= n (got Q=" + std::to_string(quorum) +
                ", n=" + std::to_string(n) + ")");
  if (!(check_cost > 0.0)) v.push_back("c_c must be positive (got " + fmt(check_cost) + ")");
  if (!(reward >= k * check_cost))
    v.push_back("r_e >> c_c violated: need r_e >= " + fmt(k) + " * c_c (got r_e=" +
                fmt(reward) + ", c_c=" + fmt(check_cost) + ")");
  if (!(chain_loss >= k * reward))
    v.push_back("L >> r_e violated: need L >= " + fmt(k) + " * r_e (got L=" + fmt(chain_loss) +
                ", r_e=" + fmt(reward) + ")");
  if (amendments != Amendments::kBase && !(fine >= k * reward))
    v.push_back("L_e >> r_e violated: need L_e >= " + fmt(k) + " * r_e (got L_e=" + fmt(fine) +
                ", r_e=" + fmt(reward) + ")");
  if (amendments == Amendments::kFinesAndTraps) {
    if (!(trap_probability >= 0.0 && trap_probability <= 1.0))
      v.push_back("p_prop must lie in [0, 1] (got " + fmt(trap_probability) + ")");
    const double bound = fine > 0.0 ? (reward + check_cost) / fine : INFINITY;
    if (!(trap_probability > bound))
      v.push_back("trap deterrence violated: need p_prop > (r_e + c_c) / L_e = " + fmt(bound) +
                  " (got " + fmt(trap_probability) + ")");
  }
  if (validation.quorum_bounds && n >= 2) {
    const double lo = n / 4.0;
    const double hi = n - std::max(2.0, n / 20.0);
    if (quorum < lo || quorum > hi)
      v.push_back("quorum bounds violated: need n/4 <= Q <= n - max(2, n/20), i.e. " + fmt(lo) +
                  " <= Q <= " + fmt(hi) + " (got Q=" + std::to_string(quorum) + ")");
  }
  return v;
}

void ProtocolParams::validate() const {
  auto v = violations();
  if (!v.empty()) throw ConfigError(std::move(v));
}

std::vector<std::string> ProtocolParams::advisories() const {
  std::vector<std::string> out;
  if (amendments == Amendments::kBase && 2 * quorum > n + 1)
    out.push_back("Q > (n+1)/2: sigma_h cannot be a BARNE anywhere under the base protocol");
  return out;
}

ConfigError::ConfigError(std::vector<std::string> violations)
    : Error("invalid configuration: " + join(violations)), violations_(std::move(violations)) {}

ProtocolParams params_from_json(const nlohmann::json& j) {
  std::vector<std::string> problems;
  ProtocolParams p;
  if (!j.is_object()) throw ConfigError({"config must be a JSON object"});

  auto number = [&](const char* key, bool required) -> std::optional<double> {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) {
      if (required) problems.push_back(std::string("missing field ") + key);
      return std::nullopt;
    }
    if (!it->is_number()) {
      problems.push_back(std::string("field ") + key + " must be a number");
      return std::nullopt;
    }
    return it->get<double>();
  };
  auto integer = [&](const char* key) -> std::optional<int> {
    auto x = number(key, true);
    if (!x) return std::nullopt;
    if (std::floor(*x) != *x || std::abs(*x) > 1e9) {
      problems.push_back(std::string("field ") + key + " must be an integer");
      return std::nullopt;
    }
    return static_cast<int>(*x);
  };

  if (auto it = j.find("amendments"); it != j.end()) {
    try {
      p.amendments = amendments_from_string(it->get<std::string>());
    } catch (const std::exception&) {
      problems.push_back("field amendments must be one of Base, Fines, FinesAndTraps");
    }
  }
  if (auto v = integer("n")) p.n = *v;
  if (auto v = integer("Q")) p.quorum = *v;
  if (auto v = number("r_e", true)) p.reward = *v;
  if (auto v = number("c_c", true)) p.check_cost = *v;
  if (auto v = number("L", true)) p.chain_loss = *v;
  if (auto v = number("L_e", p.amendments != Amendments::kBase)) p.fine = *v;
  if (auto v = number("p_prop", p.amendments == Amendments::kFinesAndTraps))
    p.trap_probability = *v;

  if (auto it = j.find("validation"); it != j.end()) {
    if (!it->is_object()) {
      problems.push_back("field validation must be an object");
    } else {
      if (auto d = it->find("dominance_factor"); d != it->end()) {
        if (d->is_number())
          p.validation.dominance_factor = d->get<double>();
        else
          problems.push_back("validation.dominance_factor must be a number");
      }
      if (auto q = it->find("quorum_bounds"); q != it->end()) {
        if (q->is_boolean())
          p.validation.quorum_bounds = q->get<bool>();
        else
          problems.push_back("validation.quorum_bounds must be a boolean");
      }
    }
  }

  if (problems.empty()) {
    auto v = p.violations();
    problems.insert(problems.end(), v.begin(), v.end());
  }
  if (!problems.empty()) throw ConfigError(std::move(problems));
  return p;
}

nlohmann::json to_json(const ProtocolParams& p) {
  return {{"n", p.n},
          {"Q", p.quorum},
          {"r_e", p.reward},
          {"c_c", p.check_cost},
          {"L", p.chain_loss},
          {"L_e", p.fine},
          {"p_prop", p.trap_probability},
          {"amendments", std::string(to_string(p.amendments))},
          {"validation",
           {{"dominance_factor", p.validation.dominance_factor},
            {"quorum_bounds", p.validation.quorum_bounds}}}};
}

}  // namespace barne::endorsement
