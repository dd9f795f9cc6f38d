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
#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "barne/endorsement/adapter.hpp"
#include "barne/endorsement/params.hpp"
#include "barne/endorsement/strategy.hpp"
#include "barne/game/equilibrium.hpp"
#include "barne/game/errors.hpp"
#include "barne/game/fixtures.hpp"
#include "barne/game/mixed.hpp"
#include "barne/game/stability.hpp"
#include "cli.hpp"

namespace barne::cli {
namespace {

using nlohmann::json;

// Argument reader that remembers which keys were used so leftovers can be
// reported.
class Args {
 public:
  explicit Args(const CheckArgs& raw) : raw_(raw) {}

  bool has(const std::string& key) const { return raw_.count(key) > 0; }

  std::optional<std::string> text(const std::string& key) {
    auto it = raw_.find(key);
    if (it == raw_.end()) return std::nullopt;
    used_.insert(key);
    return it->second;
  }

  int integer(const std::string& key, std::optional<int> fallback = std::nullopt) {
    auto s = text(key);
    if (!s) {
      if (fallback) return *fallback;
      throw UsageError("missing argument " + key + "=<int>");
    }
    try {
      std::size_t pos = 0;
      const int v = std::stoi(*s, &pos);
      if (pos == s->size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("argument " + key + " must be an integer, got '" + *s + "'");
  }

  double real(const std::string& key, double fallback) {
    auto s = text(key);
    if (!s) return fallback;
    try {
      std::size_t pos = 0;
      const double v = std::stod(*s, &pos);
      if (pos == s->size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("argument " + key + " must be a number, got '" + *s + "'");
  }

  void finish() const {
    for (const auto& [key, value] : raw_)
      if (!used_.count(key)) throw UsageError("unknown argument " + key + "=" + value);
  }

 private:
  const CheckArgs& raw_;
  std::set<std::string> used_;
};

struct Fixture {
  std::vector<GenericGame> games;
  std::vector<json> descriptions;
  bool endorsement = false;
  std::optional<Profile> default_profile;
};

endorsement::ProtocolParams small_params(int n, int q, endorsement::Amendments a) {
  endorsement::ProtocolParams p;
  p.n = n;
  p.quorum = q;
  p.reward = 10;
  p.check_cost = 1;
  p.chain_loss = 100;
  p.fine = 100;
  p.trap_probability = 0.2;
  p.amendments = a;
  p.validation.quorum_bounds = false;
  p.validate();
  return p;
}

Fixture load_fixture(const std::string& name, Args& args, bool whole_grid) {
  Fixture fx;
  if (name == "congestion") {
    CongestionGameParams c;
    c.n = args.integer("n", 4);
    c.k = args.integer("k", 2);
    c.u_a = args.real("u_a", c.u_a);
    c.u_b1 = args.real("u_b1", c.u_b1);
    c.u_b2 = args.real("u_b2", c.u_b2);
    c.validate();
    fx.games.push_back(congestion_game(c));
    fx.descriptions.push_back({{"n", c.n}, {"k", c.k}});
    fx.default_profile = congestion_assignment(c);
  } else if (name == "pd") {
    PrisonersDilemmaParams pd;
    pd.temptation = args.real("T", pd.temptation);
    pd.reward = args.real("R", pd.reward);
    pd.punishment = args.real("P", pd.punishment);
    pd.sucker = args.real("S", pd.sucker);
    fx.games.push_back(prisoners_dilemma(pd));
    fx.descriptions.push_back(
        {{"T", pd.temptation}, {"R", pd.reward}, {"P", pd.punishment}, {"S", pd.sucker}});
  } else if (name == "endorsement-small") {
    fx.endorsement = true;
    const bool pinned = args.has("n") || args.has("Q") || args.has("amendments");
    std::vector<int> ns = {4, 5, 6}, qs = {3, 4};
    std::vector<endorsement::Amendments> levels = {endorsement::Amendments::kBase,
                                                   endorsement::Amendments::kFines,
                                                   endorsement::Amendments::kFinesAndTraps};
    if (pinned || !whole_grid) {
      ns = {args.integer("n", 4)};
      qs = {args.integer("Q", 3)};
      levels = {endorsement::amendments_from_string(args.text("amendments").value_or("base"))};
    }
    for (int n : ns)
      for (int q : qs)
        for (auto a : levels) {
          const auto p = small_params(n, q, a);
          fx.games.push_back(endorsement::as_generic_game(p));
          fx.descriptions.push_back(
              {{"n", n}, {"Q", q}, {"amendments", std::string(endorsement::to_string(a))}});
        }
  } else {
    throw UsageError("unknown fixture '" + name + "' (expected congestion, pd, endorsement-small)");
  }
  return fx;
}

StrategyId resolve_strategy(const GenericGame& game, const Fixture& fx, const std::string& s) {
  try {
    return game.strategy_id(s);
  } catch (const Error&) {
  }
  if (fx.endorsement) {
    try {
      return endorsement::id(endorsement::strategy_from_string(s));
    } catch (const Error&) {
    }
  }
  std::string known;
  for (const auto& name : game.strategies()) known += (known.empty() ? "" : ", ") + name;
  throw UsageError("unknown strategy '" + s + "' (expected one of " + known + ")");
}

Profile resolve_profile(const GenericGame& game, const Fixture& fx, const std::string& s) {
  Profile out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(resolve_strategy(game, fx, item));
  return out;
}

json names(const GenericGame& game, std::span<const StrategyId> profile) {
  json out = json::array();
  for (StrategyId s : profile) out.push_back(game.strategy_name(s));
  return out;
}

json point_json(const SimplexPoint& p) { return {{"f", p.f}, {"g", p.g}, {"h", p.h()}}; }

json witness_json(const GenericGame& game, const BarneWitness& w) {
  return {{"player", w.player},
          {"candidate", game.strategy_name(w.candidate)},
          {"deviation", game.strategy_name(w.deviation)},
          {"candidate_value", w.candidate_value},
          {"deviation_value", w.deviation_value},
          {"payoff_delta", w.deviation_value - w.candidate_value},
          {"byzantine_profile", names(game, w.byzantine_profile)}};
}

json witness_json(const GenericGame& game, const BarStrongWitness& w) {
  return {{"condition", w.condition == 1 ? "immunity" : "coalition"},
          {"byzantine", w.byzantine},
          {"coalition", w.rational},
          {"profile", names(game, w.profile)},
          {"player", w.player},
          {"baseline", w.baseline},
          {"deviated", w.deviated},
          {"payoff_delta", w.deviated - w.baseline}};
}

json witness_json(const GenericGame& game, const StabilityVerdict& v) {
  json out = json::object();
  if (v.failing_point) out["failing_point"] = point_json(*v.failing_point);
  if (v.witness) out["deviation"] = witness_json(game, *v.witness);
  return out;
}

json check_one(const GenericGame& game, const Fixture& fx, const std::string& concept_name,
               Args& args) {
  const int n = game.players();
  auto sigma = [&]() {
    auto s = args.text("sigma");
    return s ? resolve_strategy(game, fx, *s) : game.prescribed();
  };
  json out;
  if (concept_name == "barne") {
    const int f = args.integer("f");
    const int g = args.integer("g");
    const StrategyId s = sigma();
    auto v = barne_at_counts(game, f, g, s);
    out = {{"verdict", v.holds}, {"f", f}, {"g", g}, {"sigma", game.strategy_name(s)}};
    if (v.witness) out["witness"] = witness_json(game, *v.witness);
  } else if (concept_name == "bar_strong") {
    const int f_bar = args.integer("f_bar");
    const int g_bar = args.integer("g_bar", n - f_bar);
    Profile profile;
    if (auto p = args.text("profile"))
      profile = resolve_profile(game, fx, *p);
    else if (args.has("sigma") || !fx.default_profile)
      profile = Profile(n, sigma());
    else
      profile = *fx.default_profile;
    auto v = bar_strong(game, f_bar, g_bar, profile);
    out = {{"verdict", v.holds}, {"f_bar", f_bar}, {"g_bar", g_bar},
           {"profile", names(game, profile)}};
    if (v.witness) out["witness"] = witness_json(game, *v.witness);
  } else if (concept_name == "globally_stable") {
    const int f_bar = args.integer("f_bar");
    const int g_bar = args.integer("g_bar", n - f_bar);
    const StrategyId s = sigma();
    auto v = globally_stable(game, s, f_bar, g_bar);
    out = {{"verdict", v.holds}, {"f_bar", f_bar}, {"g_bar", g_bar},
           {"sigma", game.strategy_name(s)}};
    if (!v.holds) out["witness"] = witness_json(game, v);
  } else if (concept_name == "delta_stable") {
    const int f = args.integer("f");
    const int g = args.integer("g");
    const double delta = args.real("delta", 1.0);
    const Norm norm = norm_from_string(args.text("norm").value_or("inf"));
    const StrategyId s = sigma();
    auto v = delta_stable(game, s, f, g, delta, norm);
    out = {{"verdict", v.holds}, {"f", f}, {"g", g}, {"delta", delta},
           {"norm", std::string(to_string(norm))}, {"sigma", game.strategy_name(s)}};
    if (!v.holds) out["witness"] = witness_json(game, v);
  } else if (concept_name == "mixed") {
    const int f = args.integer("f");
    const int g = args.integer("g");
    const double tol = args.real("tolerance", 1e-6);
    MixedSearchOptions opts;
    if (auto s = args.text("support")) opts.support = resolve_profile(game, fx, *s);
    json weights = json::object();
    try {
      auto r = find_symmetric_mixed_barne(game, f, g, tol, opts);
      for (StrategyId s = 0; s < game.num_strategies(); ++s)
        weights[game.strategy_name(s)] = r.strategy.weights[s];
      out = {{"verdict", true}, {"weights", weights}, {"regret", r.regret},
             {"method", r.method}, {"iterations", r.iterations}};
    } catch (const NoConvergence& e) {
      for (StrategyId s = 0; s < game.num_strategies(); ++s)
        weights[game.strategy_name(s)] = e.best().strategy.weights[s];
      out = {{"verdict", false}, {"weights", weights}, {"regret", e.best().regret},
             {"method", e.best().method}, {"iterations", e.best().iterations}};
    }
    out["f"] = f;
    out["g"] = g;
  } else if (concept_name == "inclusion-chain") {
    auto r = inclusion_chain(game);
    out = {{"verdict", r.violations == 0}, {"implications", r.implications},
           {"violations", r.violations}};
    if (r.first_violation) out["witness"] = *r.first_violation;
  } else {
    throw UsageError("unknown concept '" + concept_name +
                     "' (expected barne, bar_strong, globally_stable, delta_stable, mixed, "
                     "inclusion-chain)");
  }
  return out;
}

}  // namespace

CheckArgs parse_check_args(const std::vector<std::string>& tokens) {
  CheckArgs out;
  for (const auto& t : tokens) {
    const auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("expected key=value, got '" + t + "'");
    out[t.substr(0, eq)] = t.substr(eq + 1);
  }
  return out;
}

InclusionChainResult inclusion_chain(const GenericGame& game) {
  InclusionChainResult r;
  const int n = game.players();
  auto record = [&](const char* link, StrategyId s, json where) {
    ++r.violations;
    if (!r.first_violation) {
      where["link"] = link;
      where["sigma"] = game.strategy_name(s);
      r.first_violation = where;
    }
  };
  for (StrategyId s = 0; s < game.num_strategies(); ++s) {
    for (int fb = 0; fb <= n; ++fb)
      for (int gb = 0; fb + gb <= n; ++gb) {
        const bool global = bool(globally_stable(game, s, fb, gb));
        if (s == game.prescribed() && gb >= 1) {
          ++r.implications;
          if (bar_strong(game, fb, gb, Profile(n, s)) && !global)
            record("bar_strong => globally_stable", s, {{"f_bar", fb}, {"g_bar", gb}});
        }
        if (!global) continue;
        for (int delta = 0; delta <= 2; ++delta)
          for (int fd = 0; fd <= fb - delta; ++fd)
            for (int gd = 0; gd <= gb - delta; ++gd)
              for (Norm norm : {Norm::kInfinity, Norm::kTwoStar}) {
                ++r.implications;
                if (!delta_stable(game, s, fd, gd, delta, norm))
                  record("globally_stable => delta_stable", s,
                         {{"f_bar", fb}, {"g_bar", gb}, {"f", fd}, {"g", gd}, {"delta", delta},
                          {"norm", std::string(to_string(norm))}});
              }
      }
    for (int f = 0; f <= n; ++f)
      for (int g = 0; f + g <= n; ++g)
        for (int delta = 0; delta <= 2; ++delta)
          for (Norm norm : {Norm::kInfinity, Norm::kTwoStar}) {
            if (!delta_stable(game, s, f, g, delta, norm)) continue;
            ++r.implications;
            if (!barne_at_counts(game, f, g, s))
              record("delta_stable => barne", s,
                     {{"f", f}, {"g", g}, {"delta", delta}, {"norm", std::string(to_string(norm))}});
          }
  }
  return r;
}

json run_check(const std::string& fixture, const std::string& concept_name,
               const CheckArgs& raw) {
  Args args(raw);
  const bool whole_grid = concept_name == "inclusion-chain";
  Fixture fx = load_fixture(fixture, args, whole_grid);

  json result = {{"fixture", fixture}, {"concept", concept_name}, {"arguments", raw}};
  if (fx.games.size() == 1) {
    json one = check_one(fx.games.front(), fx, concept_name, args);
    args.finish();
    result["game"] = fx.descriptions.front();
    result.update(one);
    return result;
  }
  // Several games: aggregate, keeping per-game verdicts.
  json games = json::array();
  bool all = true;
  long implications = 0, violations = 0;
  for (std::size_t i = 0; i < fx.games.size(); ++i) {
    json one = check_one(fx.games[i], fx, concept_name, args);
    args.finish();
    all = all && one["verdict"].get<bool>();
    implications += one.value("implications", 0L);
    violations += one.value("violations", 0L);
    if (!result.contains("witness") && one.contains("witness")) {
      result["witness"] = one["witness"];
      result["witness"]["game"] = fx.descriptions[i];
    }
    one["game"] = fx.descriptions[i];
    games.push_back(std::move(one));
  }
  result["verdict"] = all;
  if (concept_name == "inclusion-chain") {
    result["implications"] = implications;
    result["violations"] = violations;
  }
  result["games"] = std::move(games);
  return result;
}

}  // namespace barne::cli
