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
#include "barne/endorsement/payoffs.hpp"

#include <algorithm>
#include <cmath>

#include "barne/game/errors.hpp"

namespace barne::endorsement {

namespace {

void require_rational(const SimplexPoint& point) {
  if (!point.valid() || point.g < 1)
    throw InvalidArgument("point must lie in the simplex with g >= 1");
}

Inequality compare(double lhs, double rhs, double tolerance) {
  Inequality out{lhs, rhs, Sign::kEqual};
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  if (lhs - rhs > tolerance * scale)
    out.sign = Sign::kGreater;
  else if (rhs - lhs > tolerance * scale)
    out.sign = Sign::kLess;
  return out;
}

}  // namespace

double round_payoff(const ProtocolParams& params, bool accepted, Validity validity,
                    bool endorsed, bool checked) {
  const bool invalid = validity == Validity::kInvalid;
  double u = 0.0;
  if (accepted) {
    if (endorsed) u += params.reward;
    if (invalid) u -= params.chain_loss;
  }
  if (checked) u -= params.check_cost;
  if (invalid && endorsed) u -= params.effective_fine();
  return u;
}

double stage_payoff(const ProtocolParams& params, BlockOutcomeClass outcome, Strategy strategy) {
  const bool endorsed = endorses(strategy, outcome.validity);
  const bool accepted = outcome.acceptance == Acceptance::kAccepted ||
                        (outcome.acceptance == Acceptance::kPivotal && endorsed);
  return round_payoff(params, accepted, outcome.validity, endorsed, checks(strategy));
}

Acceptance classify_endorsements(int others, int quorum) {
  if (others >= quorum) return Acceptance::kAccepted;
  if (others == quorum - 1) return Acceptance::kPivotal;
  return Acceptance::kRejected;
}

Acceptance acceptance_class(const ProtocolParams& params, const SimplexPoint& point,
                            Strategy sigma, Validity validity) {
  require_rational(point);
  const int others = validity == Validity::kValid
                         ? point.h() + (point.g - 1) * endorses(sigma, Validity::kValid)
                         : point.f + (point.g - 1) * endorses(sigma, Validity::kInvalid);
  return classify_endorsements(others, params.quorum);
}

bool proposer_prefers_valid(const ProtocolParams& params, const SimplexPoint& point,
                            Strategy sigma, Strategy own) {
  require_rational(point);
  auto value = [&](Validity v) {
    const int base = v == Validity::kValid ? point.h() : point.f;
    const int total = base + (point.g - 1) * endorses(sigma, v) + endorses(own, v);
    return round_payoff(params, total >= params.quorum, v, endorses(own, v), checks(own));
  };
  return value(Validity::kValid) >= value(Validity::kInvalid);
}

BeliefMatrix belief_matrix(const ProtocolParams& params, const SimplexPoint& point,
                           Strategy sigma) {
  require_rational(point);
  const double trap = params.effective_trap_probability();
  const int rational_valid = proposer_prefers_valid(params, point, sigma, sigma) ? point.g : 0;
  const double p_valid =
      static_cast<double>(point.h() + rational_valid) / point.n * (1.0 - trap);
  BeliefMatrix m;
  m(acceptance_class(params, point, sigma, Validity::kValid), Validity::kValid) += p_valid;
  m(acceptance_class(params, point, sigma, Validity::kInvalid), Validity::kInvalid) +=
      1.0 - p_valid;
  return m;
}

double ExpectedPayoffs::at(Strategy s) const {
  switch (s) {
    case Strategy::kHonest:
      return honest;
    case Strategy::kBlind:
      return blind;
    case Strategy::kIdle:
      return idle;
    default:
      throw InvalidArgument("closed forms cover sigma_h, sigma_e, sigma_0 only");
  }
}

ExpectedPayoffs expected_payoffs(const ProtocolParams& params, const BeliefMatrix& b) {
  const double r = params.reward, c = params.check_cost, L = params.chain_loss;
  ExpectedPayoffs u;
  u.honest = (b.av() + b.pv()) * r - c - b.ai() * L;
  u.blind = (b.accepted() + b.pivotal()) * r - (b.ai() + b.pi()) * L -
            b.invalid() * params.effective_fine();
  u.idle = -b.ai() * L;
  return u;
}

ExpectedPayoffs expected_payoffs(const ProtocolParams& params, const SimplexPoint& point,
                                 Strategy sigma) {
  return expected_payoffs(params, belief_matrix(params, point, sigma));
}

double expected_payoff(const ProtocolParams& params, const BeliefMatrix& beliefs,
                       Strategy strategy) {
  double u = 0.0;
  for (Acceptance a : {Acceptance::kAccepted, Acceptance::kRejected, Acceptance::kPivotal}) {
    for (Validity v : {Validity::kValid, Validity::kInvalid}) {
      const double p = beliefs(a, v);
      if (p != 0.0) u += p * stage_payoff(params, {a, v}, strategy);
    }
  }
  return u;
}

std::string_view name(Sign s) {
  switch (s) {
    case Sign::kLess:
      return "LT";
    case Sign::kEqual:
      return "EQ";
    case Sign::kGreater:
      return "GT";
  }
  return "?";
}

InequalityReport inequality_report(const ProtocolParams& params, const BeliefMatrix& b,
                                   double tolerance) {
  const double r = params.reward, c = params.check_cost, L = params.chain_loss;
  const double fine_term = b.invalid() * params.effective_fine();
  InequalityReport rep;
  rep.amended = params.amendments != Amendments::kBase;
  rep.participation = compare((b.av() + b.pv()) * r, c, tolerance);
  rep.no_lazy = compare(b.pi() * L + fine_term, (b.ai() + b.pi()) * r + c, tolerance);
  rep.idle_vs_blind = compare(b.pi() * L + fine_term, (b.accepted() + b.pivotal()) * r, tolerance);
  return rep;
}

InequalityReport inequality_report(const ProtocolParams& params, const SimplexPoint& point,
                                   Strategy sigma, double tolerance) {
  return inequality_report(params, belief_matrix(params, point, sigma), tolerance);
}

}  // namespace barne::endorsement
