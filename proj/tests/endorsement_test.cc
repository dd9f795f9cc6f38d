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
#include <gtest/gtest.h>

#include <cmath>
#include <nlohmann/json.hpp>
#include <set>

#include "barne/endorsement/adapter.hpp"
#include "barne/endorsement/classify.hpp"
#include "barne/endorsement/payoffs.hpp"
#include "barne/game/equilibrium.hpp"
#include "oracles.hpp"

namespace barne::endorsement {
namespace {

using Cells = std::set<std::pair<int, int>>;

ProtocolParams make(int n, int q, Amendments a, double r_e = 10, double c_c = 1,
                    double L = 100, double L_e = 100, double p_prop = 0.2) {
  ProtocolParams p;
  p.n = n;
  p.quorum = q;
  p.reward = r_e;
  p.check_cost = c_c;
  p.chain_loss = L;
  p.fine = L_e;
  p.trap_probability = p_prop;
  p.amendments = a;
  return p;
}

ProtocolParams small(int n, int q, Amendments a) {
  ProtocolParams p = make(n, q, a);
  p.validation.quorum_bounds = false;
  p.validate();
  return p;
}

Cells to_set(const std::vector<std::pair<int, int>>& v) { return Cells(v.begin(), v.end()); }

template <typename Pred>
Cells cells_where(int n, Pred pred) {
  Cells out;
  for (int f = 0; f < n; ++f)
    for (int g = 1; f + g <= n; ++g)
      if (pred(f, g)) out.emplace(f, g);
  return out;
}

constexpr Amendments kLevels[] = {Amendments::kBase, Amendments::kFines,
                                  Amendments::kFinesAndTraps};

// ---- params ----

TEST(ParamsTest, DefaultsAreValid) { EXPECT_TRUE(ProtocolParams{}.violations().empty()); }

TEST(ParamsTest, ListsEveryViolation) {
  ProtocolParams p = make(10, 11, Amendments::kFinesAndTraps, 10, 2, 50, 20, 0.1);
  const auto v = p.violations();
  auto mentions = [&](const std::string& s) {
    for (const auto& line : v)
      if (line.find(s) != std::string::npos) return true;
    return false;
  };
  EXPECT_TRUE(mentions("1 < Q <= n"));
  EXPECT_TRUE(mentions("r_e >> c_c"));
  EXPECT_TRUE(mentions("L >> r_e"));
  EXPECT_TRUE(mentions("L_e >> r_e"));
  EXPECT_TRUE(mentions("p_prop > (r_e + c_c) / L_e"));
  EXPECT_TRUE(mentions("quorum bounds"));
  try {
    p.validate();
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.violations(), v);
  }
}

TEST(ParamsTest, ValidationOptions) {
  ProtocolParams p = make(6, 4, Amendments::kBase, 5, 1, 50);
  EXPECT_FALSE(p.violations().empty());
  p.validation.dominance_factor = 5;
  p.validation.quorum_bounds = false;
  EXPECT_TRUE(p.violations().empty());
}

TEST(ParamsTest, JsonRoundTripAndMissingFields) {
  const auto j = nlohmann::json::parse(
      R"({"n": 30, "Q": 20, "r_e": 10, "c_c": 1, "L": 1000, "L_e": 1000, "p_prop": 0.02,
          "amendments": "FinesAndTraps"})");
  const ProtocolParams p = params_from_json(j);
  EXPECT_EQ(p.amendments, Amendments::kFinesAndTraps);
  EXPECT_DOUBLE_EQ(p.trap_probability, 0.02);
  const ProtocolParams back = params_from_json(to_json(p));
  EXPECT_EQ(to_json(back), to_json(p));

  auto missing = nlohmann::json::parse(
      R"({"n": 30, "Q": 20, "r_e": 10, "c_c": 1, "L": 1000, "amendments": "Fines"})");
  try {
    params_from_json(missing);
    FAIL();
  } catch (const ConfigError& e) {
    ASSERT_EQ(e.violations().size(), 1u);
    EXPECT_NE(e.violations()[0].find("L_e"), std::string::npos);
  }
  EXPECT_THROW(params_from_json(nlohmann::json::parse(R"({"n": "x"})")), ConfigError);
}

TEST(ParamsTest, QuorumAdvisory) {
  EXPECT_FALSE(make(10, 7, Amendments::kBase).advisories().empty());
  EXPECT_TRUE(make(10, 5, Amendments::kBase).advisories().empty());
}

// ---- stage payoffs ----

TEST(StagePayoffTest, TableCells) {
  const ProtocolParams base = make(10, 7, Amendments::kBase);
  const ProtocolParams fines = make(10, 7, Amendments::kFines);
  const double r = 10, c = 1, L = 100, Le = 100;
  using A = Acceptance;
  using V = Validity;
  EXPECT_DOUBLE_EQ(stage_payoff(base, {A::kAccepted, V::kValid}, Strategy::kHonest), r - c);
  EXPECT_DOUBLE_EQ(stage_payoff(base, {A::kRejected, V::kValid}, Strategy::kBlind), 0.0);
  EXPECT_DOUBLE_EQ(stage_payoff(fines, {A::kRejected, V::kInvalid}, Strategy::kBlind), -Le);
  EXPECT_DOUBLE_EQ(stage_payoff(fines, {A::kPivotal, V::kInvalid}, Strategy::kBlind),
                   r - L - Le);
  // Pivotal cells follow the agent's own endorsement.
  EXPECT_DOUBLE_EQ(stage_payoff(base, {A::kPivotal, V::kValid}, Strategy::kHonest), r - c);
  EXPECT_DOUBLE_EQ(stage_payoff(base, {A::kPivotal, V::kValid}, Strategy::kCheckAbstain), -c);
  EXPECT_DOUBLE_EQ(stage_payoff(base, {A::kPivotal, V::kInvalid}, Strategy::kFaulty),
                   r - L - c);
  EXPECT_DOUBLE_EQ(stage_payoff(base, {A::kAccepted, V::kInvalid}, Strategy::kIdle), -L);
  EXPECT_DOUBLE_EQ(stage_payoff(fines, {A::kAccepted, V::kInvalid}, Strategy::kCheckEndorse),
                   r - L - c - Le);
}

TEST(StagePayoffTest, FinesNeverHitValidBlocks) {
  const ProtocolParams fines = make(10, 7, Amendments::kFines);
  const ProtocolParams base = make(10, 7, Amendments::kBase);
  for (Strategy s : kAllStrategies)
    for (Acceptance a : {Acceptance::kAccepted, Acceptance::kRejected, Acceptance::kPivotal})
      EXPECT_DOUBLE_EQ(stage_payoff(fines, {a, Validity::kValid}, s),
                       stage_payoff(base, {a, Validity::kValid}, s));
}

// ---- acceptance and beliefs ----

TEST(AcceptanceTest, CountsByType) {
  const ProtocolParams p = make(10, 7, Amendments::kBase);
  EXPECT_EQ(acceptance_class(p, {2, 3, 10}, Strategy::kHonest, Validity::kValid),
            Acceptance::kAccepted);
  EXPECT_EQ(acceptance_class(p, {2, 3, 10}, Strategy::kHonest, Validity::kInvalid),
            Acceptance::kRejected);
  EXPECT_EQ(acceptance_class(p, {6, 1, 10}, Strategy::kHonest, Validity::kInvalid),
            Acceptance::kPivotal);
  EXPECT_THROW(acceptance_class(p, {6, 0, 10}, Strategy::kHonest, Validity::kValid),
               InvalidArgument);
  for (int others = 0; others <= 10; ++others) {
    const Acceptance a = classify_endorsements(others, 7);
    EXPECT_EQ(a == Acceptance::kPivotal, others == 6);
    EXPECT_EQ(a == Acceptance::kAccepted, others >= 7);
  }
}

TEST(BeliefTest, Examples) {
  const ProtocolParams base = make(10, 7, Amendments::kBase);
  const BeliefMatrix b = belief_matrix(base, {0, 1, 10}, Strategy::kBlind);
  EXPECT_DOUBLE_EQ(b.av(), 1.0);
  EXPECT_DOUBLE_EQ(b.total() - b.av(), 0.0);

  const ProtocolParams traps = make(10, 7, Amendments::kFinesAndTraps);
  const BeliefMatrix t = belief_matrix(traps, {0, 1, 10}, Strategy::kHonest);
  EXPECT_NEAR(t.av(), 0.8, 1e-15);
  EXPECT_NEAR(t.ri(), 0.2, 1e-15);
  EXPECT_DOUBLE_EQ(t.ai() + t.pi() + t.rv() + t.pv(), 0.0);
}

TEST(BeliefTest, RationalProposersProposeValid) {
  for (Amendments a : kLevels) {
    const ProtocolParams p = small(6, 4, a);
    for (int f = 0; f <= 5; ++f)
      for (int g = 1; f + g <= 6; ++g)
        for (Strategy s : kAllStrategies)
          for (Strategy own : kAllStrategies)
            EXPECT_TRUE(proposer_prefers_valid(p, {f, g, 6}, s, own));
  }
}

// Normalization, marginals, trap floor and closed forms over whole scans.
TEST(BeliefTest, InvariantsOverScans) {
  std::vector<ProtocolParams> configs;
  for (Amendments a : kLevels) {
    configs.push_back(make(30, 20, a, 10, 1, 1000, 1000, 0.02));
    configs.push_back(small(6, 3, a));
    ProtocolParams p = make(60, 40, a, 5, 1, 50, 30, 0.25);
    p.validation.dominance_factor = 5;
    configs.push_back(p);
  }
  for (const ProtocolParams& p : configs) {
    for (int f = 0; f < p.n; ++f) {
      for (int g = 1; f + g <= p.n; ++g) {
        for (Strategy s : kUndominated) {
          const SimplexPoint pt{f, g, p.n};
          const BeliefMatrix b = belief_matrix(p, pt, s);
          EXPECT_NEAR(b.total(), 1.0, 1e-12);
          EXPECT_NEAR(b.valid() + b.invalid(), 1.0, 1e-12);
          EXPECT_NEAR(b.accepted() + b.rejected() + b.pivotal(), 1.0, 1e-12);
          for (Acceptance a : {Acceptance::kAccepted, Acceptance::kRejected, Acceptance::kPivotal})
            for (Validity v : {Validity::kValid, Validity::kInvalid}) {
              EXPECT_GE(b(a, v), 0.0);
              EXPECT_LE(b(a, v), 1.0);
            }
          if (p.amendments == Amendments::kFinesAndTraps)
            EXPECT_GE(b.invalid(), p.trap_probability - 1e-15);

          const ExpectedPayoffs u = expected_payoffs(p, b);
          for (Strategy t : kUndominated) {
            const double sum = expected_payoff(p, b, t);
            EXPECT_NEAR(u.at(t), sum, 1e-9 * std::max(1.0, std::abs(sum)));
            // The explicit population oracle agrees with the belief model.
            EXPECT_NEAR(sum, testing::oracle_stage_payoff(p, f, g, s, t),
                        1e-9 * std::max(1.0, std::abs(sum)));
          }
          // Each pruned strategy is weakly dominated by an undominated one:
          // skipping the check saves c_c and changes nothing else.
          const double u_ce = expected_payoff(p, b, Strategy::kCheckEndorse);
          const double u_c0 = expected_payoff(p, b, Strategy::kCheckAbstain);
          const double u_f = expected_payoff(p, b, Strategy::kFaulty);
          EXPECT_NEAR(u.blind - u_ce, p.check_cost, 1e-9);
          EXPECT_NEAR(u.idle - u_c0, p.check_cost, 1e-9);
          EXPECT_GE(u.blind + 1e-9, u_f);
          EXPECT_GE(u.honest + 1e-9, u_c0);
          // sigma_h beats endorsing invalid blocks unless invalid blocks pass
          // without the agent and fines are off.
          if (b.ai() == 0.0 || p.amendments != Amendments::kBase) {
            EXPECT_GE(u.honest + 1e-9, u_ce);
            EXPECT_GE(u.honest + 1e-9, u_f);
          }
          if (p.amendments == Amendments::kFinesAndTraps) EXPECT_GT(u.honest, u.blind);
        }
      }
    }
  }
}

// ---- closed forms and inequalities ----

TEST(ExpectedPayoffTest, Substitution) {
  const ProtocolParams base = make(10, 7, Amendments::kBase);
  BeliefMatrix av;
  av(Acceptance::kAccepted, Validity::kValid) = 1.0;
  auto u = expected_payoffs(base, av);
  EXPECT_DOUBLE_EQ(u.honest, 9.0);
  EXPECT_DOUBLE_EQ(u.blind, 10.0);
  EXPECT_DOUBLE_EQ(u.idle, 0.0);

  BeliefMatrix rejected;
  rejected(Acceptance::kRejected, Validity::kValid) = 0.6;
  rejected(Acceptance::kRejected, Validity::kInvalid) = 0.4;
  u = expected_payoffs(base, rejected);
  EXPECT_DOUBLE_EQ(u.honest, -1.0);
  EXPECT_DOUBLE_EQ(u.blind, 0.0);
  EXPECT_DOUBLE_EQ(u.idle, 0.0);

  BeliefMatrix ri;
  ri(Acceptance::kRejected, Validity::kInvalid) = 1.0;
  EXPECT_DOUBLE_EQ(expected_payoffs(make(10, 7, Amendments::kFines), ri).blind, -100.0);
}

TEST(InequalityTest, Examples) {
  const ProtocolParams base = make(10, 7, Amendments::kBase);
  BeliefMatrix av;
  av(Acceptance::kAccepted, Validity::kValid) = 1.0;
  EXPECT_EQ(inequality_report(base, av).participation.sign, Sign::kGreater);

  // Threatless boundary: every invalid block is pivotal.
  const double p_star = base.check_cost / (base.chain_loss - base.reward);
  for (auto [p_i, expected] : {std::pair{p_star, Sign::kEqual},
                               std::pair{p_star * 0.9, Sign::kLess},
                               std::pair{p_star * 1.1, Sign::kGreater}}) {
    BeliefMatrix b;
    b(Acceptance::kPivotal, Validity::kInvalid) = p_i;
    b(Acceptance::kAccepted, Validity::kValid) = 1.0 - p_i;
    const auto rep = inequality_report(base, b);
    EXPECT_EQ(rep.no_lazy.sign, expected) << p_i;
    EXPECT_NEAR(rep.no_lazy.lhs, p_i * base.chain_loss, 1e-12);
    EXPECT_NEAR(rep.no_lazy.rhs, p_i * base.reward + base.check_cost, 1e-12);
  }

  BeliefMatrix ri;
  ri(Acceptance::kRejected, Validity::kInvalid) = 1.0;
  const auto fined = inequality_report(make(10, 7, Amendments::kFines), ri);
  EXPECT_TRUE(fined.amended);
  EXPECT_EQ(fined.no_lazy.sign, Sign::kGreater);
  EXPECT_DOUBLE_EQ(fined.no_lazy.lhs, 100.0);
  EXPECT_DOUBLE_EQ(fined.no_lazy.rhs, 1.0);
}

Sign sign_of(double d, double scale) {
  if (d > 1e-9 * scale) return Sign::kGreater;
  if (d < -1e-9 * scale) return Sign::kLess;
  return Sign::kEqual;
}

TEST(InequalityTest, SignsMatchPayoffDifferences) {
  for (Amendments a : kLevels) {
    const ProtocolParams p = make(30, 20, a, 10, 1, 1000, 1000, 0.02);
    for (int f = 0; f < 30; ++f)
      for (int g = 1; f + g <= 30; ++g)
        for (Strategy s : kUndominated) {
          const BeliefMatrix b = belief_matrix(p, {f, g, 30}, s);
          const auto u = expected_payoffs(p, b);
          const auto rep = inequality_report(p, b);
          auto scale = [](const Inequality& q) {
            return std::max({1.0, std::abs(q.lhs), std::abs(q.rhs)});
          };
          EXPECT_EQ(rep.participation.sign,
                    sign_of(u.honest - u.idle, scale(rep.participation)));
          EXPECT_EQ(rep.no_lazy.sign, sign_of(u.honest - u.blind, scale(rep.no_lazy)));
          EXPECT_EQ(rep.idle_vs_blind.sign, sign_of(u.idle - u.blind, scale(rep.idle_vs_blind)));
        }
  }
}

// ---- classification ----

TEST(ClassifyTest, Examples) {
  const ProtocolParams q5 = make(10, 5, Amendments::kBase);
  EXPECT_TRUE(classify_point(q5, 4, 2).honest.is_barne);
  EXPECT_EQ(classify_point(q5, 4, 2).honest.region, Region::kHonest);

  const ProtocolParams q7 = make(10, 7, Amendments::kBase);
  const PointVerdict veto = classify_point(q7, 2, 3);
  EXPECT_TRUE(veto.blind.is_barne);
  EXPECT_EQ(veto.blind.region, Region::kHonestVeto);

  const PointVerdict cold = classify_point(q7, 3, 4);
  EXPECT_TRUE(cold.idle.is_barne);
  EXPECT_EQ(cold.idle.region, Region::kColdStart);

  const ProtocolParams traps = make(10, 7, Amendments::kFinesAndTraps);
  for (int f = 0; f < 10; ++f)
    for (int g = 1; f + g <= 10; ++g) EXPECT_FALSE(classify_point(traps, f, g).blind.is_barne);

  EXPECT_THROW(classify_point(q7, 3, 0), InvalidArgument);
  EXPECT_THROW(classify_point(q7, 8, 3), InvalidArgument);
}

TEST(ClassifyTest, RegionOnlyWhenBarne) {
  for (Amendments a : kLevels) {
    const SimplexMap map = simplex_scan(make(30, 20, a, 10, 1, 1000, 1000, 0.02));
    for (const GridCell& c : map.grid)
      for (Strategy s : kUndominated) {
        const StrategyVerdict& v = c.verdict.at(s);
        EXPECT_EQ(v.is_barne, v.region != Region::kNone);
        EXPECT_GE(v.best_payoff + 1e-9, v.payoff);
      }
  }
}

// With a Byzantine quorum and no fines, endorsing the accepted invalid
// blocks earns r_e, so sigma_ce strictly beats sigma_h there.
TEST(ClassifyTest, CheckEndorseBeatsHonestUnderByzantineQuorum) {
  const ProtocolParams p = make(10, 5, Amendments::kBase);
  const BeliefMatrix b = belief_matrix(p, {6, 2, 10}, Strategy::kHonest);
  ASSERT_GT(b.ai(), 0.0);
  const double gap =
      expected_payoff(p, b, Strategy::kCheckEndorse) - expected_payoff(p, b, Strategy::kHonest);
  EXPECT_NEAR(gap, (b.ai() + b.pi()) * p.reward - b.pi() * p.chain_loss, 1e-12);
  EXPECT_GT(gap, 0.0);
  EXPECT_FALSE(classify_point(p, 6, 2).honest.is_barne);
}

TEST(ClassifyTest, NearOriginBlindDominates) {
  const ProtocolParams p = make(10, 7, Amendments::kBase);
  const auto u = expected_payoffs(p, {0, 1, 10}, Strategy::kHonest);
  EXPECT_GT(u.blind, u.honest);
  EXPECT_GT(u.blind, u.idle);
}

TEST(SpecialAreaTest, Conditions) {
  const ProtocolParams p = make(9, 6, Amendments::kBase);
  auto a = special_areas(p, 6, 1);
  EXPECT_EQ(a.names(), (std::vector<std::string>{"ByzantineQuorum", "ByzantineVeto"}));
  a = special_areas(p, 0, 0);
  EXPECT_EQ(a.names(), (std::vector<std::string>{"HonestQuorum", "HonestVeto"}));
  EXPECT_TRUE(special_areas(p, 2, 5).names().empty());
  EXPECT_THROW(special_areas(p, 5, 5), InvalidArgument);
}

// ---- scans and region formulas ----

TEST(ScanTest, GridCoversSimplex) {
  const SimplexMap map = simplex_scan(small(6, 4, Amendments::kFinesAndTraps));
  EXPECT_EQ(map.grid.size(), 21u);
  for (int f = 0; f < 6; ++f)
    for (int g = 1; f + g <= 6; ++g) ASSERT_NE(map.find(f, g), nullptr);
  EXPECT_EQ(map.find(0, 0), nullptr);
  EXPECT_EQ(to_set(map.region(Strategy::kHonest)), cells_where(6, [](int f, int) { return f <= 2; }));
}

TEST(ScanTest, LargeQuorumKillsHonestBase) {
  EXPECT_TRUE(simplex_scan(make(10, 7, Amendments::kBase)).region(Strategy::kHonest).empty());
}

TEST(ScanTest, FinesEpsilonBand) {
  ProtocolParams p = make(100, 60, Amendments::kFines, 5, 1, 50, 50);
  p.validation.dominance_factor = 5;
  const SimplexMap map = simplex_scan(p);
  EXPECT_EQ(to_set(map.region(Strategy::kHonest)),
            cells_where(100, [](int f, int) { return 2 <= f && f <= 40; }));
}

// With fines, sigma_e survives only for few Byzantines. The band is wider
// above the quorum line: c_c / (L_e - r_e) there against c_c / L_e below.
TEST(ScanTest, FinesBlindBandEdges) {
  ProtocolParams p = make(300, 200, Amendments::kFines, 5, 1, 500, 30);
  p.validation.dominance_factor = 5;
  const SimplexMap map = simplex_scan(p);
  const int above = static_cast<int>(std::floor(300 * 1.0 / (30 - 5)));
  const int below = static_cast<int>(std::floor(300 * 1.0 / 30));
  ASSERT_EQ(above, 12);
  ASSERT_EQ(below, 10);
  EXPECT_EQ(to_set(map.region(Strategy::kBlind)), cells_where(300, [&](int f, int g) {
              if (f + g > 200) return f <= above;
              if (f + g < 200) return f <= below;
              return f == 0;
            }));
}

TEST(ScanTest, GuardAndValidation) {
  EXPECT_THROW(simplex_scan(make(501, 300, Amendments::kBase)), BudgetExceeded);
  EXPECT_THROW(simplex_scan(make(10, 7, Amendments::kBase, 10, 1, 20)), ConfigError);
}

// Region formulas on instances other than the acceptance configs.
TEST(ScanTest, RegionFormulas) {
  for (auto [n, q] : {std::pair{40, 20}, std::pair{41, 21}, std::pair{50, 30}}) {
    ProtocolParams base = make(n, q, Amendments::kBase, 3, 1, 60, 30, 0.2);
    base.validation.dominance_factor = 3;
    ProtocolParams fines = base;
    fines.amendments = Amendments::kFines;
    ProtocolParams traps = base;
    traps.amendments = Amendments::kFinesAndTraps;
    const double eps_n = n * base.check_cost / base.fine;
    const int lo = static_cast<int>(std::ceil(eps_n - 1e-12));

    const SimplexMap mb = simplex_scan(base), mf = simplex_scan(fines), mt = simplex_scan(traps);
    EXPECT_EQ(to_set(mb.region(Strategy::kHonest)),
              cells_where(n, [&](int f, int) { return f == q - 1 && f <= n - q; }));
    EXPECT_EQ(to_set(mf.region(Strategy::kHonest)),
              cells_where(n, [&](int f, int) { return lo <= f && f <= n - q; }));
    EXPECT_EQ(to_set(mt.region(Strategy::kHonest)),
              cells_where(n, [&](int f, int) { return f <= n - q; }));

    EXPECT_EQ(to_set(mb.region(Strategy::kIdle)),
              cells_where(n, [&](int f, int g) { return f + g > n - q + 1 && f < q; }));
    for (const SimplexMap* m : {&mf, &mt})
      EXPECT_EQ(to_set(m->region(Strategy::kIdle)),
                cells_where(n, [&](int f, int g) { return f + g > n - q + 1; }));

    EXPECT_TRUE(mt.region(Strategy::kBlind).empty());
    const int sliver = std::min<int>(n - q, static_cast<int>(std::floor(
                                                base.check_cost / (base.chain_loss - base.reward) * n)));
    EXPECT_EQ(to_set(mb.region(Strategy::kBlind)), cells_where(n, [&](int f, int g) {
                return f + g != q || f <= sliver;
              }));
  }
}

// ---- adapter ----

TEST(AdapterTest, AgreesWithClassification) {
  for (Amendments a : kLevels) {
    const ProtocolParams p = small(6, 4, a);
    const GenericGame game = as_generic_game(p);
    for (int f = 0; f <= 2; ++f)
      for (int g = 1; f + g <= 4; ++g) {
        const PointVerdict v = classify_point(p, f, g);
        for (Strategy s : kUndominated)
          EXPECT_EQ(bool(barne_at_counts(game, f, g, id(s))), v.at(s).is_barne)
              << to_string(a) << " f=" << f << " g=" << g << " " << name(s);
      }
  }
}

TEST(AdapterTest, NoByzantinesIsPlainGame) {
  const ProtocolParams p = small(5, 3, Amendments::kFines);
  const GenericGame game = as_generic_game(p);
  std::vector<StrategyId> prof(5, id(Strategy::kHonest));
  const WorstCase w = worst_case(game, std::vector<int>{}, 0, prof);
  EXPECT_DOUBLE_EQ(w.value, game.payoff(0, prof));
  EXPECT_TRUE(w.byzantine_profile.empty());
}

TEST(AdapterTest, FaultyIsTheMinimizer) {
  const ProtocolParams p = small(6, 4, Amendments::kBase);
  const GenericGame game = as_generic_game(p);
  std::vector<StrategyId> prof(6, id(Strategy::kHonest));
  const WorstCase w = worst_case(game, std::vector<int>{0}, 1, prof);
  prof[0] = id(Strategy::kFaulty);
  EXPECT_DOUBLE_EQ(game.payoff(1, prof), w.value);
}

TEST(AdapterTest, Guard) {
  EXPECT_THROW(as_generic_game(make(9, 6, Amendments::kBase)), BudgetExceeded);
}

}  // namespace
}  // namespace barne::endorsement
